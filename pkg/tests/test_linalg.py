import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfaeq.linalg import (
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
    vec_sub,
    vector,
    vector_is_zero,
    zero_vector,
)
from qfaeq.scalars import IMAG, ONE, ZERO, GaussianRational


def random_scalar(rng):
    return GaussianRational(
        Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)),
        Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)),
    )


def random_matrix(rng, rows, cols):
    return CMatrix(
        [[random_scalar(rng) for _ in range(cols)] for _ in range(rows)]
    )


small_dims = st.integers(min_value=1, max_value=3)


@st.composite
def matrices(draw, rows=None, cols=None):
    rng = random.Random(draw(st.integers(0, 10**6)))
    r = rows if rows is not None else draw(small_dims)
    c = cols if cols is not None else draw(small_dims)
    return random_matrix(rng, r, c)


def test_constructor_rejects_ragged_and_empty():
    with pytest.raises(ValueError):
        CMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        CMatrix([])
    with pytest.raises(ValueError):
        CMatrix([[]])
    with pytest.raises(TypeError):
        CMatrix([[0.5]])


def test_identity_and_indexing():
    eye = CMatrix.identity(3)
    assert eye[0, 0] == ONE
    assert eye[0, 1] == ZERO
    assert eye.row(1) == (ZERO, ONE, ZERO)
    assert eye.column(2) == (ZERO, ZERO, ONE)


def test_multiplication_dimension_mismatch():
    with pytest.raises(ValueError):
        CMatrix.identity(2) * CMatrix.identity(3)


@settings(max_examples=40)
@given(matrices())
def test_identity_is_neutral(a):
    assert CMatrix.identity(a.nrows) * a == a
    assert a * CMatrix.identity(a.ncols) == a


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_multiplication_associates(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, 2, 3)
    b = random_matrix(rng, 3, 2)
    c = random_matrix(rng, 2, 2)
    assert (a * b) * c == a * (b * c)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_dagger_reverses_products(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, 2, 3)
    b = random_matrix(rng, 3, 2)
    assert (a * b).dagger() == b.dagger() * a.dagger()
    assert a.dagger().dagger() == a
    assert a.dagger() == a.transpose().conjugate()


def test_kron_small_explicit():
    a = CMatrix([[1, 2], [3, 4]])
    b = CMatrix([[0, 1], [1, 0]])
    k = kron(a, b)
    assert k.nrows == 4 and k.ncols == 4
    # entry ((i,r),(j,c)) = a[i,j] * b[r,c]
    assert k[0, 1] == 1 and k[0, 3] == 2
    assert k[1, 0] == 1 and k[1, 2] == 2
    assert k[3, 0] == 3 and k[3, 2] == 4


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_kron_mixed_product_rule(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, 2, 2)
    b = random_matrix(rng, 3, 3)
    c = random_matrix(rng, 2, 2)
    d = random_matrix(rng, 3, 3)
    assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


def test_kron_of_identities():
    assert kron(CMatrix.identity(2), CMatrix.identity(3)) == CMatrix.identity(6)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_kron_commutes_with_conjugation(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, 2, 3)
    b = random_matrix(rng, 2, 2)
    assert kron(a, b).conjugate() == kron(a.conjugate(), b.conjugate())


def test_direct_sum_layout():
    a = CMatrix([[1, 2], [3, 4]])
    b = CMatrix([[5]])
    s = direct_sum(a, b)
    assert s.nrows == 3 and s.ncols == 3
    assert s[0, 0] == 1 and s[1, 1] == 4 and s[2, 2] == 5
    assert s[0, 2] == ZERO and s[2, 0] == ZERO


def test_direct_sum_rejects_non_square():
    with pytest.raises(ValueError):
        direct_sum(CMatrix([[1, 2]]), CMatrix([[1]]))


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_direct_sum_is_blockwise_multiplicative(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, 2, 2)
    b = random_matrix(rng, 3, 3)
    c = random_matrix(rng, 2, 2)
    d = random_matrix(rng, 3, 3)
    assert direct_sum(a, b) * direct_sum(c, d) == direct_sum(a * c, b * d)


def test_is_unitary_rotation_by_hand():
    # Columns are orthonormal: (3/5)^2 + (4/5)^2 = 1, cross terms cancel.
    rot = CMatrix(
        [
            [Fraction(3, 5), Fraction(-4, 5)],
            [Fraction(4, 5), Fraction(3, 5)],
        ]
    )
    assert is_unitary(rot)


def test_is_unitary_counterexamples():
    assert not is_unitary(CMatrix([[1, 1], [0, 1]]))
    assert not is_unitary(CMatrix([[Fraction(1, 2)]]))
    assert is_unitary(CMatrix([[IMAG]]))
    assert is_unitary(CMatrix.identity(4))
    with pytest.raises(ValueError):
        is_unitary(CMatrix([[1, 0]]))


def test_unitarity_closed_under_kron_and_direct_sum():
    rot = CMatrix(
        [
            [Fraction(3, 5), Fraction(-4, 5)],
            [Fraction(4, 5), Fraction(3, 5)],
        ]
    )
    phase = CMatrix([[IMAG]])
    assert is_unitary(direct_sum(rot, phase))
    assert is_unitary(kron(rot, rot))
    assert is_unitary(kron(rot, rot.conjugate()))


def test_vector_helpers():
    v = vector([1, Fraction(1, 2), 0])
    assert vector_is_zero(zero_vector(4))
    assert not vector_is_zero(v)
    assert unit_vector(3, 1) == (ZERO, ONE, ZERO)
    assert norm_sq(v) == Fraction(5, 4)
    assert conj_vector((IMAG,)) == (-IMAG,)
    assert vec_sub((ONE, ZERO), (ZERO, ONE)) == (ONE, -ONE)


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_row_times_matrix_matches_full_product(seed):
    rng = random.Random(seed)
    m = random_matrix(rng, 3, 4)
    row = tuple(random_scalar(rng) for _ in range(3))
    via_matrix = (CMatrix([row]) * m).row(0)
    assert row_times_matrix(row, m) == via_matrix


def test_row_times_matrix_dimension_check():
    with pytest.raises(ValueError):
        row_times_matrix((ONE,), CMatrix.identity(2))


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_kron_vector_matches_matrix_kron(seed):
    rng = random.Random(seed)
    u = tuple(random_scalar(rng) for _ in range(2))
    v = tuple(random_scalar(rng) for _ in range(3))
    via_matrices = kron(CMatrix([u]), CMatrix([v])).row(0)
    assert kron_vector(u, v) == via_matrices


# Independent oracle for span rank: textbook Gaussian elimination over
# mutable row lists, no pivots shared with the implementation under test.
def naive_rank(vectors):
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [
                    x - factor * y for x, y in zip(rows[r], rows[rank])
                ]
        rank += 1
    return rank


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_span_insert_agrees_with_naive_rank(seed):
    rng = random.Random(seed)
    dim = rng.randrange(2, 5)
    basis = EchelonBasis(dim)
    seen = []
    for step in range(8):
        if seen and rng.random() < 0.4:
            # a random linear combination, guaranteed dependent
            v = zero_vector(dim)
            for w in seen:
                c = random_scalar(rng)
                v = tuple(x + c * y for x, y in zip(v, w))
        else:
            v = tuple(random_scalar(rng) for _ in range(dim))
        before = naive_rank(seen)
        after = naive_rank(seen + [v])
        inserted, basis = span_insert(basis, v, tag=str(step))
        assert inserted == (after > before)
        if inserted:
            seen.append(v)
        assert len(basis) == naive_rank(seen)
        assert basis.contains(v)


def test_span_insert_zero_vector_is_dependent():
    basis = EchelonBasis(3)
    inserted, basis2 = span_insert(basis, zero_vector(3))
    assert not inserted
    assert basis2 is basis


def test_span_insert_is_pure():
    basis0 = EchelonBasis(2)
    _, basis1 = span_insert(basis0, unit_vector(2, 0), tag="x")
    assert len(basis0) == 0
    _, basis2 = span_insert(basis1, unit_vector(2, 1), tag="y")
    assert len(basis1) == 1
    assert len(basis2) == 2
    assert basis1.tags() == ("x",)
    assert basis2.tags() == ("x", "y")


def test_contains_detects_linear_combinations():
    v1 = vector([1, 2, 0])
    v2 = vector([0, 1, 1])
    basis = EchelonBasis(3)
    _, basis = span_insert(basis, v1)
    _, basis = span_insert(basis, v2)
    combo = tuple(
        2 * x - Fraction(1, 3) * y for x, y in zip(v1, v2)
    )
    assert basis.contains(combo)
    assert not basis.contains(vector([0, 0, 1]))


def test_echelon_invariant_fully_reduced():
    rng = random.Random(12345)
    basis = EchelonBasis(4)
    for i in range(6):
        v = tuple(random_scalar(rng) for _ in range(4))
        _, basis = span_insert(basis, v, tag=str(i))
    pivots = basis.pivots()
    assert list(pivots) == sorted(pivots)
    for row in basis.rows:
        assert row.vector[row.pivot] == ONE
        for other in basis.rows:
            if other is not row:
                assert row.vector[other.pivot] == ZERO


def test_rank_never_exceeds_dimension():
    rng = random.Random(999)
    basis = EchelonBasis(3)
    for i in range(10):
        v = tuple(random_scalar(rng) for _ in range(3))
        _, basis = span_insert(basis, v)
    assert len(basis) <= 3
    # a full-rank basis contains everything
    if len(basis) == 3:
        assert basis.contains(vector([7, Fraction(-1, 3), 2]))


def test_reduce_dimension_check():
    with pytest.raises(ValueError):
        EchelonBasis(3).reduce((ONE,))
