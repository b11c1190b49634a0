"""Exact linear algebra over rationals.

Vectors are tuples of Fraction, matrices are tuples of row vectors.
Everything here is exact; floats are rejected at conversion time.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(value: Scalar) -> Fraction:
    """Convert int, Fraction, or a 'p/q' string to Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected exact rational, got {type(value).__name__}")


def as_vector(values: Iterable[Scalar]) -> Vector:
    return tuple(frac(v) for v in values)


def as_matrix(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    mat = tuple(as_vector(r) for r in rows)
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise ValueError("ragged matrix")
    return mat


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def identity(n: int) -> Matrix:
    return tuple(basis_vector(n, i) for i in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: Matrix) -> Matrix:
    if not m:
        return ()
    return tuple(zip(*m))


def canonical_sign(v: Vector) -> Vector:
    """Flip sign so the first nonzero coordinate is positive."""
    for a in v:
        if a > 0:
            return v
        if a < 0:
            return vec_neg(v)
    return v


def _eliminate(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place forward elimination to reduced row echelon form.

    Returns the reduced rows and the pivot column indices, in order.
    """
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][col]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    rows = [list(v) for v in vectors if not is_zero_vector(v)]
    if not rows:
        return 0
    _, pivots = _eliminate(rows)
    return len(pivots)


def affine_rank(points: Iterable[Sequence[Fraction]]) -> int:
    """Rank of the linear span of the given vectors (span through the origin)."""
    return rank(points)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    rows = [list(r) for r in m]
    if not rows:
        return (), ()
    reduced, pivots = _eliminate(rows)
    kept = tuple(tuple(r) for r in reduced[: len(pivots)])
    return kept, tuple(pivots)


def nullspace(m: Matrix, ncols: int) -> Matrix:
    """Canonical basis of {x : m x = 0}, one vector per free column of the RREF."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for row, pcol in zip(reduced, pivots):
            vec[pcol] = -row[free]
        basis.append(tuple(vec))
    return tuple(basis)


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """Unique solution of a square system, or None when singular."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _eliminate(aug)
    if len(pivots) < n or (pivots and pivots[-1] >= n):
        return None
    sol = [ZERO] * n
    for row, pcol in zip(reduced, pivots):
        sol[pcol] = row[n]
    return tuple(sol)


def solve_linear_system(m: Matrix, rhs: Sequence[Fraction]) -> Vector | None:
    """One exact solution of a (possibly rectangular) consistent system, else None."""
    if not m:
        return ()
    ncols = len(m[0])
    aug = [list(r) + [b] for r, b in zip(m, rhs)]
    reduced, pivots = _eliminate(aug)
    if pivots and pivots[-1] == ncols:
        return None
    sol = [ZERO] * ncols
    for row, pcol in zip(reduced, pivots):
        sol[pcol] = row[ncols]
    return tuple(sol)
