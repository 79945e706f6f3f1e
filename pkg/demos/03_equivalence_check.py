"""Deciding whether two automata accept every word with equal probability.

The decision procedure joins the two automata into one linear system,
then grows a basis of reachable functionals, grouped by the length-(k-1)
suffix of the word that produced each one.  The span stops growing after
polynomially many insertions, and any probability gap shows up as a
nonzero contraction at some recorded word, which becomes the witness.
A brute-force scan over all words up to the length bound double-checks
the verdicts here.
"""

from qfaeq import (
    Alphabet,
    GaussianRational,
    KLetterQFA,
    always_accept_qfa,
    basis_search,
    brute_force,
    decide,
    join,
    last_letter_qfa,
    random_qfa,
    theorem4_bound,
    verdict_from_search,
)
from fractions import Fraction

two = Alphabet("ab")

# An automaton that accepts words ending in 'b' versus one that accepts
# everything.  They already disagree on the empty word.
ll = last_letter_qfa()
v = decide(ll, always_accept_qfa(two))
print("last-letter vs always-accept:")
print("  equivalent:", v.equivalent)
print("  witness   :", repr(v.witness), " p1 =", v.p1, " p2 =", v.p2)

# Global phase on the initial state is unobservable, so scaling it by a
# unit-modulus number changes nothing measurable.
a = random_qfa(2, two, k=2, seed=7)
phase = GaussianRational(Fraction(3, 5), Fraction(4, 5))
b = KLetterQFA(a.n, a.alphabet, a.k,
               tuple(phase * x for x in a.initial),
               a.accepting, a.transitions)
print("\nphase-scaled copy equivalent:", decide(a, b).equivalent)

# Two independent random automata almost always differ somewhere.  This
# pair happens to agree on the empty word and split on 'a'.
a = random_qfa(2, two, k=2, seed=2)
c = random_qfa(2, two, k=2, seed=11)
v = decide(a, c)
print("\ntwo random automata:")
print("  equivalent:", v.equivalent)
if not v.equivalent:
    print("  witness   :", repr(v.witness), " p1 =", v.p1, " p2 =", v.p2)

# Any difference must appear within this many letters; the brute-force
# check below only needs to look that far (here it stops much earlier).
bound = theorem4_bound(a.n, c.n, len(two), max(a.k, c.k))
print("  length bound:", bound)
vb = brute_force(a, c, max_len=8)
print("  brute-force agrees:", vb.equivalent == v.equivalent,
      " shortest witness:", repr(vb.witness))

# The search itself is small: per-suffix-class basis sizes are capped by
# the squared joint dimension, and the queue by a polynomial in it.
j = join(a, c)
sbm = basis_search(j)
print("\nsearch statistics for the random pair:")
print("  class sizes      :", sbm.basis_sizes())
print("  vectors processed:", sbm.processed)
print("  verdict re-derived:",
      verdict_from_search(j, sbm, a, c).equivalent == v.equivalent)
