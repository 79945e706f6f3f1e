"""The k-letter quantum finite automaton model.

An automaton reads its input through a sliding window of width k.  While
fewer than k letters have been consumed the window is padded on the left with
the blank symbol ``_``, so the transition applied at position i of word x is
indexed by the context

    ``_`` * (k - i) + x[:i]          when i < k,
    x[i-k:i]                         otherwise.

Contexts that can actually occur are therefore the blank-padded proper
prefixes plus every window of k real letters; transition tables are keyed by
exactly that set.  A run left-multiplies the conjugated initial row vector by
one unitary per position, and the acceptance probability is the squared norm
of the accepting coordinates of the resulting row.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .linalg import (
    CMatrix,
    Vector,
    conj_vector,
    is_unitary,
    norm_sq,
    row_times_matrix,
    vector,
)
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "LAMBDA",
    "Alphabet",
    "KLetterQFA",
    "accept_prob",
    "always_accept_qfa",
    "context_for",
    "initial_bra",
    "iter_words",
    "last_letter_qfa",
    "lift",
    "mu_bar",
    "random_qfa",
    "random_unitary",
    "reachable_contexts",
    "validate",
    "words_of_length",
]

LAMBDA = "_"


class Alphabet:
    """An ordered finite alphabet of single-character symbols.

    The declaration order is significant: it induces the word order used by
    the equivalence search and by witness minimality, where words compare
    first by length and then position by position using this symbol order.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet must be nonempty")
        seen = set()
        for s in syms:
            if not isinstance(s, str) or len(s) != 1:
                raise ValueError(f"alphabet symbol {s!r} is not a single character")
            if s == LAMBDA:
                raise ValueError(f"{LAMBDA!r} is reserved for blank padding")
            if s in seen:
                raise ValueError(f"duplicate alphabet symbol {s!r}")
            seen.add(s)
        self.symbols = syms
        self._index = {s: i for i, s in enumerate(syms)}

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"


def reachable_contexts(alphabet: Alphabet, k: int) -> list[str]:
    """Every window content a run of length >= k-1 ... can produce.

    Ordered by number of real letters, then lexicographically; the list has
    m + m**2 + ... + m**k entries for an m-symbol alphabet.
    """
    if k < 1:
        raise ValueError("window width k must be at least 1")
    out = []
    for j in range(1, k + 1):
        pad = LAMBDA * (k - j)
        for letters in itertools.product(alphabet.symbols, repeat=j):
            out.append(pad + "".join(letters))
    return out


def _context_at(k: int, word: str, i: int) -> str:
    if i < k:
        return LAMBDA * (k - i) + word[:i]
    return word[i - k : i]


@dataclass(frozen=True)
class KLetterQFA:
    """A measure-once quantum automaton reading k letters at a time.

    Fields:
        n: number of basis states.
        alphabet: input alphabet (order matters, see :class:`Alphabet`).
        k: window width; k = 1 is the ordinary one-letter model.
        initial: unit-norm initial superposition as a length-n ket tuple.
        accepting: indices of accepting basis states.
        transitions: context string -> n x n unitary, one entry per
            reachable context.

    Construction normalizes the container fields but performs no semantic
    checking; call :func:`validate` for that.
    """

    n: int
    alphabet: Alphabet
    k: int
    initial: Vector
    accepting: frozenset
    transitions: dict

    def __post_init__(self):
        object.__setattr__(self, "initial", vector(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "transitions", dict(self.transitions))


def _context_shape_ok(ctx: str, alphabet: Alphabet, k: int) -> bool:
    if len(ctx) != k:
        return False
    body = ctx.lstrip(LAMBDA)
    if not body:
        return False
    return all(s in alphabet for s in body)


def validate(a: KLetterQFA) -> list[str]:
    """Return a list of human-readable problems; empty means well formed."""
    problems = []
    if a.k < 1:
        problems.append(f"window width k={a.k} must be at least 1")
    if a.n < 1:
        problems.append(f"state count n={a.n} must be at least 1")
    if len(a.initial) != a.n:
        problems.append(
            f"initial vector has dimension {len(a.initial)}, expected {a.n}"
        )
    else:
        norm = norm_sq(a.initial)
        if norm != 1:
            problems.append(
                f"initial vector has squared norm {norm}, expected 1"
            )
    for q in sorted(a.accepting):
        if not isinstance(q, int) or not 0 <= q < a.n:
            problems.append(f"accepting state {q!r} out of range 0..{a.n - 1}")
    if a.k < 1 or a.n < 1:
        return problems
    expected = reachable_contexts(a.alphabet, a.k)
    for ctx in expected:
        m = a.transitions.get(ctx)
        if m is None:
            problems.append(f"missing context {ctx!r}")
        elif not isinstance(m, CMatrix) or m.nrows != a.n or m.ncols != a.n:
            problems.append(f"transition for context {ctx!r} is not {a.n}x{a.n}")
        elif not is_unitary(m):
            problems.append(f"transition for context {ctx!r} is not unitary")
    known = set(expected)
    for ctx in a.transitions:
        if ctx in known:
            continue
        if isinstance(ctx, str) and _context_shape_ok(ctx, a.alphabet, a.k):
            problems.append(f"unexpected context {ctx!r}")
        else:
            problems.append(f"malformed context {ctx!r}")
    return problems


def _check_word(a: KLetterQFA, word: str) -> None:
    for pos, s in enumerate(word):
        if s not in a.alphabet:
            raise ValueError(f"letter {s!r} at position {pos} not in alphabet")


def context_for(a: KLetterQFA, word: str, i: int) -> str:
    """The window content governing the transition at 1-based position i."""
    _check_word(a, word)
    if not 1 <= i <= len(word):
        raise ValueError(f"position {i} outside 1..{len(word)}")
    return _context_at(a.k, word, i)


def mu_bar(a: KLetterQFA, word: str) -> CMatrix:
    """Product of the per-position transition unitaries; identity for the
    empty word."""
    _check_word(a, word)
    m = CMatrix.identity(a.n)
    for i in range(1, len(word) + 1):
        m = m * a.transitions[_context_at(a.k, word, i)]
    return m


def initial_bra(a: KLetterQFA) -> Vector:
    """The conjugated initial vector, as the row a run starts from."""
    return conj_vector(a.initial)


def accept_prob(a: KLetterQFA, word: str) -> Fraction:
    """Exact probability that the automaton accepts the word.

    Equals the squared norm of the accepting coordinates of
    ``initial_bra(a)`` times ``mu_bar(a, word)``; computed by stepping the
    row vector once per letter.
    """
    _check_word(a, word)
    row = conj_vector(a.initial)
    for i in range(1, len(word) + 1):
        row = row_times_matrix(row, a.transitions[_context_at(a.k, word, i)])
    total = Fraction(0)
    for q in a.accepting:
        x = row[q]
        if x:
            total += x.abs_sq()
    return total


def lift(a: KLetterQFA, new_k: int) -> KLetterQFA:
    """Re-express the automaton with a wider window, same behavior.

    Every width-new_k context acts via the transition for its last k
    characters; the trailing slice of a padded context is exactly the padded
    context the original automaton would see at the same position, so
    acceptance probabilities are preserved for every word.
    """
    if new_k < a.k:
        raise ValueError(f"cannot lift k={a.k} down to k={new_k}")
    if new_k == a.k:
        return a
    transitions = {
        ctx: a.transitions[ctx[-a.k :]]
        for ctx in reachable_contexts(a.alphabet, new_k)
    }
    return KLetterQFA(a.n, a.alphabet, new_k, a.initial, a.accepting, transitions)


# Unit-modulus building blocks for exactly unitary random matrices.  Scaled
# Pythagorean pairs give rotation entries whose squares sum to one.
_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (9, 40, 41))
_UNITS = (
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(0, 1),
    GaussianRational(0, -1),
)


def _random_phase(rng: random.Random) -> GaussianRational:
    if rng.random() < 0.5:
        return rng.choice(_UNITS)
    a, b, c = rng.choice(_TRIPLES)
    if rng.random() < 0.5:
        a, b = b, a
    re = Fraction(a if rng.random() < 0.5 else -a, c)
    im = Fraction(b if rng.random() < 0.5 else -b, c)
    return GaussianRational(re, im)


def _rotation_factor(n: int, rng: random.Random) -> CMatrix:
    p, q = sorted(rng.sample(range(n), 2))
    a, b, c = rng.choice(_TRIPLES)
    if rng.random() < 0.5:
        a, b = b, a
    cos = GaussianRational(Fraction(a, c))
    sin = GaussianRational(Fraction(b if rng.random() < 0.5 else -b, c))
    rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows[p][p] = cos
    rows[p][q] = -sin
    rows[q][p] = sin
    rows[q][q] = cos
    return CMatrix(rows)


def _phase_factor(n: int, rng: random.Random) -> CMatrix:
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = _random_phase(rng)
    return CMatrix(rows)


def _signed_permutation(n: int, rng: random.Random) -> CMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[ZERO] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = ONE if rng.random() < 0.5 else -ONE
    return CMatrix(rows)


def random_unitary(n: int, rng: random.Random) -> CMatrix:
    """An exactly unitary n x n matrix built from rotation, phase, and
    signed-permutation factors drawn from rng."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    m = CMatrix.identity(n)
    for _ in range(2 * n + 2):
        kind = rng.randrange(3)
        if kind == 0 and n >= 2:
            factor = _rotation_factor(n, rng)
        elif kind == 1:
            factor = _signed_permutation(n, rng)
        else:
            factor = _phase_factor(n, rng)
        m = m * factor
    return m


def random_qfa(n: int, alphabet: Alphabet, k: int, seed: int) -> KLetterQFA:
    """A reproducible random automaton; equal seeds give equal automata.

    Transitions are independent random unitaries, the initial vector is the
    first column of one more random unitary (hence exactly unit norm), and
    each state is accepting with probability one half.
    """
    rng = random.Random(seed)
    transitions = {
        ctx: random_unitary(n, rng) for ctx in reachable_contexts(alphabet, k)
    }
    initial = random_unitary(n, rng).column(0)
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return KLetterQFA(n, alphabet, k, initial, accepting, transitions)


def last_letter_qfa() -> KLetterQFA:
    """A two-state width-2 automaton over {a, b} accepting exactly the words
    that end in b, with probability one.

    State 0 tracks "last letter was a" (also the start), state 1 "last letter
    was b".  A window whose two letters agree leaves the state alone; a
    window whose letters differ swaps the two states.  Since state i is
    reached exactly when the last letter read was the i-th symbol, the
    automaton is deterministic despite the unitary dynamics.
    """
    alphabet = Alphabet("ab")
    eye = CMatrix.identity(2)
    swap = CMatrix([[ZERO, ONE], [ONE, ZERO]])
    transitions = {
        "_a": eye,
        "_b": swap,
        "aa": eye,
        "ab": swap,
        "ba": swap,
        "bb": eye,
    }
    return KLetterQFA(
        n=2,
        alphabet=alphabet,
        k=2,
        initial=(ONE, ZERO),
        accepting=frozenset({1}),
        transitions=transitions,
    )


def always_accept_qfa(alphabet: Alphabet) -> KLetterQFA:
    """The one-state width-1 automaton accepting every word with
    probability one."""
    transitions = {s: CMatrix.identity(1) for s in alphabet}
    return KLetterQFA(
        n=1,
        alphabet=alphabet,
        k=1,
        initial=(ONE,),
        accepting=frozenset({0}),
        transitions=transitions,
    )


def words_of_length(alphabet: Alphabet, length: int) -> Iterator[str]:
    """All words of the given length, lexicographically by symbol order."""
    for letters in itertools.product(alphabet.symbols, repeat=length):
        yield "".join(letters)


def iter_words(alphabet: Alphabet, max_len: int) -> Iterator[str]:
    """All words of length 0..max_len in length-then-lexicographic order."""
    for length in range(max_len + 1):
        yield from words_of_length(alphabet, length)
