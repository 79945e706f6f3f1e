"""Deciding whether two automata accept every word with equal probability.

The decision procedure works on a single joined automaton.  Writing b1 and
b2 for the two conjugated initial vectors embedded in the direct sum of the
state spaces, the difference of acceptance probabilities on a word x is a
bilinear form

    P1(x) - P2(x)  =  eta . nubar(x) . pacc

where eta is the difference of the flattened outer products b ox conj(b),
nubar(x) is the per-letter product of kron(T, conj(T)) over the joined
transitions T, and pacc marks the diagonal positions of accepting states.
The two automata are equivalent exactly when eta . nubar(x) is orthogonal to
pacc for every word x.

Because nubar(xs) depends on x only through the window governing the next
letter, the rows eta . nubar(x) can be explored word by word; collecting a
spanning set per length-(k-1) suffix class visits only polynomially many
words (see :func:`basis_search`), and no row outside the collected spans can
introduce a new violation.  :func:`brute_force` is an independent oracle that
compares acceptance probabilities word by word instead.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .linalg import (
    CMatrix,
    EchelonBasis,
    Vector,
    conj_vector,
    direct_sum,
    kron,
    kron_vector,
    row_times_matrix,
    span_insert,
    vec_sub,
    vector_is_zero,
    zero_vector,
)
from .qfa import (
    Alphabet,
    KLetterQFA,
    _context_at,
    accept_prob,
    initial_bra,
    lift,
    reachable_contexts,
)
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "JointAutomaton",
    "QueueItem",
    "SuffixBasisMap",
    "Verdict",
    "basis_search",
    "brute_force",
    "decide",
    "extend",
    "join",
    "theorem4_bound",
    "verdict_from_search",
    "word_less",
]


def theorem4_bound(n1: int, n2: int, m: int, k: int) -> int:
    """Smallest guaranteed search depth: automata with n1 and n2 states over
    an m-symbol alphabet and window width k that agree on every word of
    length below this bound agree on all words.
    """
    if n1 < 1 or n2 < 1 or m < 1 or k < 1:
        raise ValueError("state counts, alphabet size, and k must be positive")
    return ((n1 + n2) ** 2 - 1) * m ** (k - 1) + k


def word_less(x1: str, x2: str, alphabet: Alphabet) -> bool:
    """Strict word order: shorter first, then position by position in the
    alphabet's symbol order.  The empty word is least."""
    if len(x1) != len(x2):
        return len(x1) < len(x2)
    for c1, c2 in zip(x1, x2):
        if c1 != c2:
            return alphabet.index(c1) < alphabet.index(c2)
    return False


@dataclass(frozen=True)
class JointAutomaton:
    """Both automata run side by side, bilinearized.

    ``transitions`` holds the block-diagonal unitaries of the lifted pair;
    ``nu`` maps each context to kron(T, conj(T)), the operator that advances
    rows of the bilinear form; ``eta`` is the starting row encoding the
    difference of the two initial states; ``pacc`` (with its index list
    ``accept_positions``) extracts P1 - P2 from any such row.
    """

    n1: int
    n2: int
    n: int
    k: int
    alphabet: Alphabet
    transitions: dict
    nu: dict
    eta: Vector
    pacc: Vector
    accept_positions: tuple


def join(a1: KLetterQFA, a2: KLetterQFA) -> JointAutomaton:
    """Combine two automata over the same alphabet, lifting the narrower
    window to the wider one first."""
    if a1.alphabet != a2.alphabet:
        raise ValueError("automata must share an alphabet")
    k = max(a1.k, a2.k)
    l1 = lift(a1, k)
    l2 = lift(a2, k)
    n1, n2 = a1.n, a2.n
    n = n1 + n2
    transitions = {}
    nu = {}
    for ctx in reachable_contexts(a1.alphabet, k):
        t = direct_sum(l1.transitions[ctx], l2.transitions[ctx])
        transitions[ctx] = t
        nu[ctx] = kron(t, t.conjugate())
    b1 = conj_vector(a1.initial) + zero_vector(n2)
    b2 = zero_vector(n1) + conj_vector(a2.initial)
    eta = vec_sub(
        kron_vector(b1, conj_vector(b1)),
        kron_vector(b2, conj_vector(b2)),
    )
    position_set = {q * (n + 1) for q in a1.accepting}
    position_set.update((n1 + q) * (n + 1) for q in a2.accepting)
    accept_positions = tuple(sorted(position_set))
    pacc = tuple(
        ONE if idx in position_set else ZERO for idx in range(n * n)
    )
    return JointAutomaton(
        n1=n1,
        n2=n2,
        n=n,
        k=k,
        alphabet=a1.alphabet,
        transitions=transitions,
        nu=nu,
        eta=eta,
        pacc=pacc,
        accept_positions=accept_positions,
    )


class QueueItem(NamedTuple):
    """A word together with its bilinear row eta . nubar(word)."""

    word: str
    vector: Vector


def extend(j: JointAutomaton, item: QueueItem, sigma: str) -> QueueItem:
    """Append one letter, advancing the row by the matching nu operator."""
    if sigma not in j.alphabet:
        raise ValueError(f"letter {sigma!r} not in alphabet")
    word = item.word + sigma
    ctx = _context_at(j.k, word, len(word))
    return QueueItem(word, row_times_matrix(item.vector, j.nu[ctx]))


@dataclass
class SuffixBasisMap:
    """Everything :func:`basis_search` records.

    ``bases`` maps each length-(k-1) suffix class to the echelon basis of
    rows collected for it.  ``short_records`` holds the rows of all words
    shorter than k-1 (checked directly, they belong to no class) and
    ``member_records`` the raw row of every vector that entered some basis;
    both lists are in word order, so the first entry failing the
    orthogonality check is the least witness.  ``processed`` counts dequeued
    search nodes.
    """

    bases: dict
    short_records: list = field(default_factory=list)
    member_records: list = field(default_factory=list)
    processed: int = 0

    def basis_sizes(self) -> dict:
        return {w: len(b) for w, b in self.bases.items()}

    def total_size(self) -> int:
        return sum(len(b) for b in self.bases.values())

    def records(self):
        """All recorded (word, row) pairs in word order."""
        return itertools.chain(self.short_records, self.member_records)


def basis_search(j: JointAutomaton) -> SuffixBasisMap:
    """Collect a spanning set of bilinear rows per suffix class.

    Words shorter than k-1 cannot head a class and are only recorded.  Each
    word of length k-1 seeds its own class's basis with its row.  From
    length k on, words are taken from a FIFO queue in word order; a word
    whose row is independent of its class basis is inserted and its one
    letter extensions are enqueued, a dependent row is discarded.  Every row
    of every unqueued word is a combination of same-class member rows, which
    is why the records alone decide equivalence.
    """
    k = j.k
    symbols = j.alphabet.symbols
    dim = j.n * j.n
    sbm = SuffixBasisMap(bases={})
    level = [QueueItem("", j.eta)]
    for _ in range(k - 1):
        sbm.short_records.extend((it.word, it.vector) for it in level)
        level = [extend(j, it, s) for it in level for s in symbols]
    for it in level:
        basis = EchelonBasis(dim)
        if not vector_is_zero(it.vector):
            _, basis = span_insert(basis, it.vector, it.word)
            sbm.member_records.append((it.word, it.vector))
        sbm.bases[it.word] = basis
    queue = deque(extend(j, it, s) for it in level for s in symbols)
    while queue:
        item = queue.popleft()
        sbm.processed += 1
        cls = item.word[len(item.word) - k + 1 :]
        inserted, updated = span_insert(sbm.bases[cls], item.vector, item.word)
        if inserted:
            sbm.bases[cls] = updated
            sbm.member_records.append((item.word, item.vector))
            for s in symbols:
                queue.append(extend(j, item, s))
    return sbm


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equivalence check.

    When ``equivalent`` is false, ``witness`` is a word the two automata
    accept with the exact probabilities ``p1 != p2``.  The algebraic
    procedure returns the least flagged word in word order, which is not
    always the shortest counterexample; the brute-force oracle's witness is
    always the least counterexample outright.
    """

    equivalent: bool
    witness: str | None = None
    p1: Fraction | None = None
    p2: Fraction | None = None


def _row_difference(vec: Vector, positions: tuple) -> GaussianRational:
    total = ZERO
    for p in positions:
        x = vec[p]
        if x:
            total = total + x
    return total


def verdict_from_search(
    j: JointAutomaton, sbm: SuffixBasisMap, a1: KLetterQFA, a2: KLetterQFA
) -> Verdict:
    """Read the verdict off a finished search.

    The raw recorded rows are checked, not the echelon rows: elimination
    mixes later words into earlier basis rows, so only an unreduced row
    ties a nonzero contraction to its own word.
    """
    for word, vec in sbm.records():
        if _row_difference(vec, j.accept_positions):
            return Verdict(
                equivalent=False,
                witness=word,
                p1=accept_prob(a1, word),
                p2=accept_prob(a2, word),
            )
    return Verdict(equivalent=True)


def decide(a1: KLetterQFA, a2: KLetterQFA) -> Verdict:
    """Polynomial-time equivalence decision via the suffix-class search.

    Exact throughout; the verdict carries a concrete witness word and both
    acceptance probabilities whenever the automata differ.
    """
    j = join(a1, a2)
    if vector_is_zero(j.eta):
        return Verdict(equivalent=True)
    sbm = basis_search(j)
    return verdict_from_search(j, sbm, a1, a2)


def _row_accept(row: Vector, accepting: frozenset) -> Fraction:
    total = Fraction(0)
    for q in accepting:
        x = row[q]
        if x:
            total += x.abs_sq()
    return total


def brute_force(
    a1: KLetterQFA, a2: KLetterQFA, max_len: int | None = None
) -> Verdict:
    """Compare acceptance probabilities on every word up to a length cap.

    With the default cap :func:`theorem4_bound` the answer is definitive,
    but enumeration is exponential in the cap for alphabets of two or more
    symbols; this is a cross-check oracle for small instances, not the
    production procedure.  The witness, if any, is the least differing word
    in word order.
    """
    if a1.alphabet != a2.alphabet:
        raise ValueError("automata must share an alphabet")
    verdict, _ = _brute_force_counting(a1, a2, max_len)
    return verdict


def _brute_force_counting(
    a1: KLetterQFA, a2: KLetterQFA, max_len: int | None
) -> tuple[Verdict, int]:
    symbols = a1.alphabet.symbols
    if max_len is None:
        max_len = theorem4_bound(a1.n, a2.n, len(symbols), max(a1.k, a2.k))
    checked = 1
    p1 = accept_prob(a1, "")
    p2 = accept_prob(a2, "")
    if p1 != p2:
        return Verdict(False, "", p1, p2), checked
    level = [("", initial_bra(a1), initial_bra(a2))]
    for length in range(1, max_len + 1):
        nxt = []
        for word, v1, v2 in level:
            for s in symbols:
                w = word + s
                u1 = row_times_matrix(
                    v1, a1.transitions[_context_at(a1.k, w, length)]
                )
                u2 = row_times_matrix(
                    v2, a2.transitions[_context_at(a2.k, w, length)]
                )
                checked += 1
                p1 = _row_accept(u1, a1.accepting)
                p2 = _row_accept(u2, a2.accepting)
                if p1 != p2:
                    return Verdict(False, w, p1, p2), checked
                nxt.append((w, u1, u2))
        level = nxt
    return Verdict(True), checked
