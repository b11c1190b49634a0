"""Linear operators between polyhedral spaces.

Operator norms, norm attainment, extreme points of the set of norming
functionals on operator space (which are rank-one: an extreme point of the
domain ball paired with an extreme dual functional of the codomain), and
James-type orthogonality certificates against operator subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Matrix,
    Vector,
    as_matrix,
    as_vector,
    dot,
    mat_vec,
    rank,
)
from .lp import OPTIMAL, solve_lp
from .spaces import NormedSpace, Subspace, norm, support_set

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class Operator:
    """Linear map as an exact matrix, rows indexed by codomain coordinates."""

    matrix: Matrix
    domain: NormedSpace
    codomain: NormedSpace

    def __post_init__(self) -> None:
        if len(self.matrix) != self.codomain.dim:
            raise ValueError("row count differs from codomain dimension")
        for row in self.matrix:
            if len(row) != self.domain.dim:
                raise ValueError("row length differs from domain dimension")

    def apply(self, x) -> Vector:
        return mat_vec(self.matrix, as_vector(x))

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for row in self.matrix for v in row)

    def _assert_same_spaces(self, other: "Operator") -> None:
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("operators live between different spaces")

    def __add__(self, other: "Operator") -> "Operator":
        self._assert_same_spaces(other)
        m = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix))
        return Operator(m, self.domain, self.codomain)

    def __sub__(self, other: "Operator") -> "Operator":
        self._assert_same_spaces(other)
        m = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix))
        return Operator(m, self.domain, self.codomain)

    def __neg__(self) -> "Operator":
        return Operator(tuple(tuple(-a for a in r) for r in self.matrix), self.domain, self.codomain)

    def scale(self, c) -> "Operator":
        cf = Fraction(c) if not isinstance(c, Fraction) else c
        return Operator(
            tuple(tuple(cf * a for a in r) for r in self.matrix), self.domain, self.codomain
        )


def make_operator(rows, domain: NormedSpace, codomain: NormedSpace) -> Operator:
    return Operator(as_matrix(rows), domain, codomain)


def zero_operator(domain: NormedSpace, codomain: NormedSpace) -> Operator:
    return Operator(tuple((_ZERO,) * domain.dim for _ in range(codomain.dim)), domain, codomain)


def identity_operator(space: NormedSpace, codomain: NormedSpace | None = None) -> Operator:
    cod = codomain if codomain is not None else space
    if cod.dim != space.dim:
        raise ValueError("identity needs equal dimensions")
    m = tuple(
        tuple(_ONE if i == j else _ZERO for j in range(space.dim)) for i in range(cod.dim)
    )
    return Operator(m, space, cod)


def rank_one(domain: NormedSpace, functional, value, codomain: NormedSpace) -> Operator:
    """The map x -> (functional . x) * value."""
    f = as_vector(functional)
    z = as_vector(value)
    if len(f) != domain.dim:
        raise ValueError("functional length differs from domain dimension")
    if len(z) != codomain.dim:
        raise ValueError("value length differs from codomain dimension")
    m = tuple(tuple(zi * fj for fj in f) for zi in z)
    return Operator(m, domain, codomain)


@dataclass(frozen=True, slots=True)
class SupportPair:
    """One extreme norming functional of an operator: evaluate the codomain
    functional at the image of the domain extreme point. rep_matrix is its
    matrix in the trace pairing, so the functional applied to an operator S
    is the entrywise sum of rep_matrix * S."""

    x: Vector
    y_star: Vector
    rep_matrix: Matrix

    def evaluate(self, op: Operator) -> Fraction:
        return dot(self.y_star, op.apply(self.x))


@dataclass(frozen=True, slots=True)
class WitnessDecomposition:
    """Convex combination of support pairs annihilating an operator subspace."""

    pairs: tuple[SupportPair, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.weights):
            raise ValueError("pair and weight counts differ")
        if sum(self.weights) != 1 or any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive and sum to one")

    def evaluate(self, op: Operator) -> Fraction:
        return sum((w * p.evaluate(op) for w, p in zip(self.weights, self.pairs)), _ZERO)


def operator_norm(op: Operator) -> Fraction:
    """Exact operator norm: the max codomain norm over domain ball vertices."""
    return max(norm(op.codomain, op.apply(v)) for v in op.domain.ball.vertices)


def norm_attainment_extremes(op: Operator) -> Matrix:
    """Domain ball vertex representatives where the norm is attained."""
    if op.is_zero:
        raise ValueError("norm attainment is undefined for the zero operator")
    value = operator_norm(op)
    return tuple(
        v for v in op.domain.ball.vertices if norm(op.codomain, op.apply(v)) == value
    )


def operator_support_extremes(op: Operator) -> tuple[SupportPair, ...]:
    """All extreme norming functionals of the operator, one per antipodal
    pair: attaining domain vertex x paired with each extreme codomain
    functional y* norming the image of x. Sorted by (x, y*)."""
    pairs = []
    for v in norm_attainment_extremes(op):
        ss = support_set(op.codomain, op.apply(v))
        for y_star in ss.extreme_functionals:
            rep = tuple(tuple(yi * xj for xj in v) for yi in y_star)
            pairs.append(SupportPair(v, y_star, rep))
    return tuple(pairs)


def operator_smoothness_order(op: Operator) -> int:
    """Number of linearly independent extreme norming functionals of the
    operator, computed as the rank of the flattened trace-pairing matrices."""
    pairs = operator_support_extremes(op)
    flat = [tuple(v for row in p.rep_matrix for v in row) for p in pairs]
    return rank(flat)


def operator_subspace_basis(domain: NormedSpace, target: Subspace) -> tuple[Operator, ...]:
    """Canonical basis of the space of operators mapping into the target
    subspace: one rank-one map per (domain coordinate, target basis column)."""
    ops = []
    for col in target.basis:
        for j in range(domain.dim):
            f = tuple(_ONE if i == j else _ZERO for i in range(domain.dim))
            ops.append(rank_one(domain, f, col, target.ambient))
    return tuple(ops)


def orthogonality_witness(
    op: Operator, ops_basis: tuple[Operator, ...] | list[Operator]
) -> WitnessDecomposition | None:
    """Certificate that the operator is orthogonal to the span of the given
    operators: a convex combination of its support pairs that evaluates to
    zero on each of them. Returns None when the feasibility LP proves no such
    combination exists (not orthogonal). The returned combination has at most
    len(ops_basis) + 1 active pairs, since it comes from a basic solution."""
    if op.is_zero:
        raise ValueError("orthogonality is undefined for the zero operator")
    pairs = operator_support_extremes(op)
    h = len(pairs)
    eq_lhs: list[list[Fraction]] = [[_ONE] * h]
    eq_rhs: list[Fraction] = [_ONE]
    for a in ops_basis:
        if a.domain != op.domain or a.codomain != op.codomain:
            raise ValueError("basis operator lives between different spaces")
        eq_lhs.append([p.evaluate(a) for p in pairs])
        eq_rhs.append(_ZERO)
    res = solve_lp(
        [_ZERO] * h, eq=eq_lhs, eq_rhs=eq_rhs, sense="min", nonneg=[True] * h
    )
    if res.status != OPTIMAL:
        return None
    kept = [(p, w) for p, w in zip(pairs, res.solution) if w > 0]
    return WitnessDecomposition(
        tuple(p for p, _ in kept), tuple(w for _, w in kept)
    )
