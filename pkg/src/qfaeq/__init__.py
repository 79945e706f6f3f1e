"""Exact modeling and equivalence checking of k-letter quantum finite automata.

All arithmetic is carried out over the Gaussian rationals (complex numbers
with rational real and imaginary parts), so every probability, matrix entry
and verdict produced by this package is exact. No floating point enters any
decision path.
"""

from .scalars import GaussianRational
from .linalg import (
    CMatrix,
    EchelonBasis,
    conj_vector,
    direct_sum,
    is_unitary,
    kron,
    kron_vector,
    norm_sq,
    row_times_matrix,
    span_insert,
    unit_vector,
    vector,
    zero_vector,
)
from .qfa import (
    LAMBDA,
    Alphabet,
    KLetterQFA,
    accept_prob,
    always_accept_qfa,
    context_for,
    iter_words,
    last_letter_qfa,
    lift,
    mu_bar,
    random_qfa,
    random_unitary,
    reachable_contexts,
    validate,
    words_of_length,
)
from .equivalence import (
    JointAutomaton,
    QueueItem,
    SuffixBasisMap,
    Verdict,
    basis_search,
    brute_force,
    decide,
    extend,
    join,
    theorem4_bound,
    verdict_from_search,
    word_less,
)
from .io import QfaFormatError, parse_qfa, serialize_qfa

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "CMatrix",
    "EchelonBasis",
    "conj_vector",
    "direct_sum",
    "is_unitary",
    "kron",
    "kron_vector",
    "norm_sq",
    "row_times_matrix",
    "span_insert",
    "unit_vector",
    "vector",
    "zero_vector",
    "LAMBDA",
    "Alphabet",
    "KLetterQFA",
    "accept_prob",
    "always_accept_qfa",
    "context_for",
    "iter_words",
    "last_letter_qfa",
    "lift",
    "mu_bar",
    "random_qfa",
    "random_unitary",
    "reachable_contexts",
    "validate",
    "words_of_length",
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
    "QfaFormatError",
    "parse_qfa",
    "serialize_qfa",
]
