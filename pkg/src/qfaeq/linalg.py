"""Dense matrices and row vectors over Gaussian rationals.

Matrices are immutable tuples of row tuples.  Row vectors are plain tuples of
:class:`~qfaeq.scalars.GaussianRational`; helpers below build, conjugate, and
multiply them without ever leaving exact arithmetic.  The module also provides
:class:`EchelonBasis`, a fully reduced row-echelon basis that answers span
membership with a single elimination pass, which is the workhorse of the
equivalence decision procedure.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple

from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "Vector",
    "CMatrix",
    "BasisRow",
    "EchelonBasis",
    "as_scalar",
    "conj_vector",
    "direct_sum",
    "is_unitary",
    "kron",
    "kron_vector",
    "norm_sq",
    "row_times_matrix",
    "span_insert",
    "unit_vector",
    "vec_sub",
    "vector",
    "vector_is_zero",
    "zero_vector",
]

Vector = tuple


def as_scalar(value) -> GaussianRational:
    """Coerce an int, Fraction, or GaussianRational to a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, Rational):
        return GaussianRational(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


class CMatrix:
    """An immutable matrix of Gaussian rationals.

    ``data`` is a tuple of row tuples.  Multiplication, conjugation, and the
    Kronecker and direct-sum constructions all stay exact; there is no
    floating-point path anywhere in this class.
    """

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(row) != width for row in data):
            raise ValueError("matrix rows must be nonempty and equally long")
        self.nrows = len(data)
        self.ncols = width
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "CMatrix":
        return cls(
            tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
        )

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: tuple[int, int]) -> GaussianRational:
        i, j = index
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __mul__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}"
            )
        bdata = other.data
        rows = []
        for arow in self.data:
            acc = [ZERO] * other.ncols
            for idx, x in enumerate(arow):
                if x:
                    for j, y in enumerate(bdata[idx]):
                        if y:
                            acc[j] = acc[j] + x * y
            rows.append(acc)
        return CMatrix(rows)

    def transpose(self) -> "CMatrix":
        return CMatrix(zip(*self.data))

    def conjugate(self) -> "CMatrix":
        return CMatrix(
            tuple(x.conjugate() for x in row) for row in self.data
        )

    def dagger(self) -> "CMatrix":
        """Conjugate transpose."""
        return CMatrix(
            tuple(x.conjugate() for x in col) for col in zip(*self.data)
        )

    def __repr__(self) -> str:
        rows = "; ".join(
            " ".join(str(x) for x in row) for row in self.data
        )
        return f"CMatrix[{rows}]"


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product; entry ((i,r),(j,c)) is a[i,j] * b[r,c]."""
    rows = []
    for arow in a.data:
        for brow in b.data:
            out = []
            for x in arow:
                if x:
                    out.extend(x * y if y else ZERO for y in brow)
                else:
                    out.extend(ZERO for _ in brow)
            rows.append(out)
    return CMatrix(rows)


def direct_sum(a: CMatrix, b: CMatrix) -> CMatrix:
    """Block-diagonal sum of two square matrices."""
    if not a.is_square or not b.is_square:
        raise ValueError("direct_sum needs square blocks")
    n1, n2 = a.nrows, b.nrows
    rows = []
    for arow in a.data:
        rows.append(arow + (ZERO,) * n2)
    for brow in b.data:
        rows.append((ZERO,) * n1 + brow)
    return CMatrix(rows)


def is_unitary(a: CMatrix) -> bool:
    """Exact test that a.dagger() * a is the identity."""
    if not a.is_square:
        raise ValueError("unitarity is only defined for square matrices")
    return a.dagger() * a == CMatrix.identity(a.nrows)


def vector(entries: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def conj_vector(v: Vector) -> Vector:
    return tuple(x.conjugate() for x in v)


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(x - y for x, y in zip(u, v, strict=True))


def kron_vector(u: Vector, v: Vector) -> Vector:
    """Flattened outer product; entry i*len(v)+j is u[i] * v[j]."""
    out = []
    for x in u:
        if x:
            out.extend(x * y if y else ZERO for y in v)
        else:
            out.extend(ZERO for _ in v)
    return tuple(out)


def vector_is_zero(v: Vector) -> bool:
    return not any(v)


def norm_sq(v: Vector) -> Fraction:
    """Squared Euclidean norm as an exact rational."""
    total = Fraction(0)
    for x in v:
        if x:
            total += x.abs_sq()
    return total


def row_times_matrix(v: Vector, m: CMatrix) -> Vector:
    """Row vector times matrix, skipping zero entries on both sides."""
    if len(v) != m.nrows:
        raise ValueError(f"row of length {len(v)} times {m.nrows}x{m.ncols}")
    acc = [ZERO] * m.ncols
    for i, x in enumerate(v):
        if x:
            for j, y in enumerate(m.data[i]):
                if y:
                    acc[j] = acc[j] + x * y
    return tuple(acc)


class BasisRow(NamedTuple):
    """One fully reduced basis row: unit pivot, zero at every other pivot."""

    pivot: int
    vector: Vector
    tag: str


class EchelonBasis:
    """A reduced row-echelon basis of row vectors.

    Rows are kept sorted by pivot column, each pivot entry is exactly one,
    and every row is zero at the pivot columns of all other rows.  With that
    invariant a single elimination pass decides span membership, and
    :func:`span_insert` grows the basis by at most one row per call.  Zero
    rows are never stored, so ``len(basis) <= dimension`` always holds.
    """

    __slots__ = ("dimension", "rows")

    def __init__(self, dimension: int, rows: Iterable[BasisRow] = ()):
        self.dimension = dimension
        self.rows = tuple(rows)

    def __len__(self) -> int:
        return len(self.rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(row.pivot for row in self.rows)

    def tags(self) -> tuple[str, ...]:
        return tuple(row.tag for row in self.rows)

    def reduce(self, v: Vector) -> list:
        """Residual of v after clearing every pivot column, in one pass."""
        if len(v) != self.dimension:
            raise ValueError(
                f"vector of length {len(v)} in dimension {self.dimension}"
            )
        residual = list(v)
        for pivot, rowvec, _tag in self.rows:
            c = residual[pivot]
            if c:
                for j, y in enumerate(rowvec):
                    if y:
                        residual[j] = residual[j] - c * y
        return residual

    def contains(self, v: Vector) -> bool:
        """Exact span-membership test."""
        return not any(self.reduce(v))

    def __repr__(self) -> str:
        return f"EchelonBasis(dim={self.dimension}, rank={len(self.rows)})"


def span_insert(
    basis: EchelonBasis, v: Vector, tag: str = ""
) -> tuple[bool, EchelonBasis]:
    """Insert v into the span if it is independent.

    Returns ``(False, basis)`` unchanged when v already lies in the span,
    otherwise ``(True, basis2)`` where basis2 additionally spans v.  The new
    row is normalized to a unit pivot and eliminated from all existing rows,
    preserving the fully reduced invariant.  ``tag`` travels with the row so
    callers can recover which inserted vector created it.
    """
    residual = basis.reduce(v)
    pivot = next((i for i, x in enumerate(residual) if x), None)
    if pivot is None:
        return False, basis
    inv = residual[pivot]
    normalized = tuple(x / inv if x else ZERO for x in residual)
    new_rows = []
    for row in basis.rows:
        c = row.vector[pivot]
        if c:
            cleared = tuple(
                x - c * y if y else x
                for x, y in zip(row.vector, normalized)
            )
            row = BasisRow(row.pivot, cleared, row.tag)
        new_rows.append(row)
    position = sum(1 for row in new_rows if row.pivot < pivot)
    new_rows.insert(position, BasisRow(pivot, normalized, tag))
    return True, EchelonBasis(basis.dimension, new_rows)
