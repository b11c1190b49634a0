"""Best approximation from subspaces and Birkhoff-James orthogonality.

x is orthogonal to y when no multiple of y brings x closer to the origin;
equivalently some norming functional at x annihilates y. On polyhedral
spaces both views are exact finite checks: interval tests over the extreme
norming functionals, and feasibility of small rational LPs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Vector,
    affine_rank,
    as_vector,
    basis_vector,
    dot,
    nullspace,
)
from .lp import OPTIMAL, solve_lp
from .spaces import NormedSpace, Subspace, dual_space, support_set

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class BestApproxResult:
    """Exact distance from a point to a subspace, with a nearest point.

    witness = sum of coefficients times basis columns; its error vector has
    norm exactly `distance`. optimal_face_dim is the dimension of the set of
    optimal coefficient vectors (0 means the nearest point is unique);
    None when the caller skipped that computation.
    """

    distance: Fraction
    coefficients: Vector
    witness: Vector
    optimal_face_dim: int | None


def _distance_rows(space: NormedSpace, x: Vector, sub: Subspace):
    """Signed constraint data for  max_f |f . (x - B c)| <= t  as rows over
    variables (c_1..c_k, t): row . (c, t) <= rhs."""
    k = sub.dim
    rows = []
    rhs = []
    for f in space.ball.facets:
        fx = dot(f, x)
        fb = [dot(f, col) for col in sub.basis]
        for sigma in (_ONE, -_ONE):
            rows.append([-sigma * v for v in fb] + [-_ONE])
            rhs.append(-sigma * fx)
    return rows, rhs


def distance_to_subspace(
    space: NormedSpace,
    x,
    sub: Subspace,
    *,
    face_dim: bool = True,
    canonical_witness: bool = True,
) -> BestApproxResult:
    """Exact distance from x to the subspace, by the LP
    minimize t subject to |f . (x - B c)| <= t for every facet f.

    With canonical_witness the reported coefficient vector is the
    lexicographically smallest optimal one; with face_dim the dimension of
    the optimal face in coefficient space is computed as well. Both extras
    cost additional small LPs and can be switched off on hot paths.
    """
    v = as_vector(x)
    if sub.ambient != space:
        raise ValueError("subspace ambient space differs from the given space")
    if len(v) != space.dim:
        raise ValueError("vector length differs from space dimension")
    k = sub.dim
    rows, rhs = _distance_rows(space, v, sub)
    objective = [_ZERO] * k + [_ONE]
    nonneg = (False,) * k + (True,)  # the distance t is nonnegative
    res = solve_lp(objective, leq=rows, leq_rhs=rhs, sense="min", nonneg=nonneg)
    if not res.is_optimal:
        raise RuntimeError(f"distance LP unexpectedly {res.status}")
    dist = res.value
    coeffs = res.solution[:k]

    # The optimal set in coefficient space: all rows with t pinned at dist.
    opt_rows = [r[:k] for r in rows]
    opt_rhs = [b + dist for b in rhs]

    if canonical_witness and k > 0:
        coeffs = _lex_min_point(k, opt_rows, opt_rhs)

    fdim: int | None = None
    if face_dim:
        fdim = _polyhedron_dim(k, opt_rows, opt_rhs)

    witness = sub.member(coeffs)
    return BestApproxResult(dist, tuple(coeffs), witness, fdim)


def _lex_min_point(k: int, rows, rhs) -> Vector:
    """Lexicographically smallest point of a bounded polyhedron."""
    fixed_lhs: list[list[Fraction]] = []
    fixed_rhs: list[Fraction] = []
    out: list[Fraction] = []
    for coord in range(k):
        res = solve_lp(
            basis_vector(k, coord),
            leq=rows,
            leq_rhs=rhs,
            eq=fixed_lhs,
            eq_rhs=fixed_rhs,
            sense="min",
        )
        if not res.is_optimal:
            raise RuntimeError(f"lexicographic refinement LP {res.status}")
        out.append(res.value)
        fixed_lhs.append(list(basis_vector(k, coord)))
        fixed_rhs.append(res.value)
    return tuple(out)


def _polyhedron_dim(k: int, rows, rhs) -> int:
    """Dimension of {c : rows c <= rhs}, assumed nonempty and bounded.

    A constraint is an implicit equality iff its slack cannot be made
    positive anywhere in the polyhedron, decided by one small LP per
    constraint; the dimension is k minus the rank of the implicit normals."""
    if k == 0:
        return 0
    implicit = []
    for row, b in zip(rows, rhs):
        res = solve_lp(row, leq=rows, leq_rhs=rhs, sense="min")
        if not res.is_optimal:
            raise RuntimeError(f"implicit-equality probe LP {res.status}")
        if res.value == b:
            implicit.append(row)
    return k - affine_rank(implicit)


def bj_orthogonal_vec(space: NormedSpace, x, y) -> bool:
    """x is orthogonal to y iff the values f . y over the extreme norming
    functionals f at x straddle zero (min <= 0 <= max)."""
    yv = as_vector(y)
    if len(yv) != space.dim:
        raise ValueError("vector length differs from space dimension")
    ss = support_set(space, x)  # rejects x = 0
    values = [dot(f, yv) for f in ss.extreme_functionals]
    return min(values) <= 0 <= max(values)


def bj_orthogonal_subspace(
    space: NormedSpace, x, sub: Subspace
) -> tuple[bool, Vector | None]:
    """x is orthogonal to the whole subspace iff some convex combination of
    the extreme norming functionals at x annihilates every basis column.
    Returns the witness functional when one exists."""
    if sub.ambient != space:
        raise ValueError("subspace ambient space differs from the given space")
    ss = support_set(space, x)
    funcs = ss.extreme_functionals
    h = len(funcs)
    eq_lhs: list[list[Fraction]] = [[_ONE] * h]
    eq_rhs: list[Fraction] = [_ONE]
    for col in sub.basis:
        eq_lhs.append([dot(f, col) for f in funcs])
        eq_rhs.append(_ZERO)
    res = solve_lp(
        [_ZERO] * h,
        eq=eq_lhs,
        eq_rhs=eq_rhs,
        sense="min",
        nonneg=[True] * h,
    )
    if res.status != OPTIMAL:
        return False, None
    weights = res.solution
    functional = [_ZERO] * space.dim
    for w, f in zip(weights, funcs):
        if w:
            for i, entry in enumerate(f):
                functional[i] += w * entry
    return True, tuple(functional)


def annihilator(space: NormedSpace, sub: Subspace) -> Subspace:
    """Functionals vanishing on the subspace, as a subspace of the dual.
    Its basis is the canonical nullspace basis of the transposed basis."""
    if sub.ambient != space:
        raise ValueError("subspace ambient space differs from the given space")
    cols = nullspace(sub.basis, space.dim)
    return Subspace(dual_space(space), cols)
