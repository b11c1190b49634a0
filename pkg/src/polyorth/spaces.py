"""Finite-dimensional polyhedral normed spaces and their duals.

A space is determined by its unit ball, a SymmetricPolytope. The dual unit
ball is the polar body, so dual vertices are primal facets and vice versa;
support sets, smoothness orders, and the structural predicates below all
reduce to exact polytope queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .linalg import (
    Matrix,
    Vector,
    affine_rank,
    as_matrix,
    as_vector,
    basis_vector,
    canonical_sign,
    dot,
    is_zero_vector,
    rank,
    vec_neg,
)
from .polytope import InvalidPolytope, SymmetricPolytope, polar_dual

_ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class NormedSpace:
    dim: int
    ball: SymmetricPolytope
    label: str = field(default="X", compare=False)

    def __post_init__(self) -> None:
        if self.ball.dim != self.dim:
            raise ValueError("ball dimension differs from space dimension")

    def __repr__(self) -> str:
        return f"NormedSpace({self.label}, dim={self.dim})"


@dataclass(frozen=True, slots=True)
class SupportSet:
    """Extreme points of the set of norming functionals at a point."""

    base_point: Vector
    extreme_functionals: Matrix
    span_dim: int


@dataclass(frozen=True, slots=True)
class Subspace:
    """Linear subspace of a normed space, given by independent basis columns."""

    ambient: NormedSpace
    basis: Matrix  # each entry is one basis column

    def __post_init__(self) -> None:
        for col in self.basis:
            if len(col) != self.ambient.dim:
                raise ValueError("basis column length differs from ambient dimension")
        if rank(self.basis) != len(self.basis):
            raise ValueError("basis columns are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_whole_space(self) -> bool:
        return self.dim == self.ambient.dim

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def member(self, coefficients) -> Vector:
        coeffs = as_vector(coefficients)
        if len(coeffs) != self.dim:
            raise ValueError("coefficient count differs from subspace dimension")
        out = [Fraction(0)] * self.ambient.dim
        for c, col in zip(coeffs, self.basis):
            if c:
                for i, entry in enumerate(col):
                    out[i] += c * entry
        return tuple(out)

    def contains(self, vector) -> bool:
        v = as_vector(vector)
        if is_zero_vector(v):
            return True
        return rank(self.basis) == rank(tuple(self.basis) + (v,))


def subspace(ambient: NormedSpace, columns) -> Subspace:
    return Subspace(ambient, as_matrix(columns))


def space_l1(dim: int) -> NormedSpace:
    """Sum-of-absolute-values norm; ball is the cross-polytope."""
    if dim <= 0:
        raise ValueError("dimension must be positive")
    vertices = tuple(sorted(basis_vector(dim, i) for i in range(dim)))
    facets = _sign_vectors(dim)
    return NormedSpace(dim, SymmetricPolytope(dim, facets, vertices), label=f"l1({dim})")


def space_linf(dim: int) -> NormedSpace:
    """Max-coordinate norm; ball is the cube."""
    if dim <= 0:
        raise ValueError("dimension must be positive")
    facets = tuple(sorted(basis_vector(dim, i) for i in range(dim)))
    vertices = _sign_vectors(dim)
    return NormedSpace(dim, SymmetricPolytope(dim, facets, vertices), label=f"linf({dim})")


def _sign_vectors(dim: int) -> Matrix:
    out = []
    for signs in iter_product((_ONE, -_ONE), repeat=dim - 1):
        out.append((_ONE,) + signs)
    return tuple(sorted(out))


def space_from_facets(facets, label: str = "X") -> NormedSpace:
    ball = SymmetricPolytope.from_facets(facets)
    return NormedSpace(ball.dim, ball, label=label)


def space_from_vertices(vertices, label: str = "X") -> NormedSpace:
    ball = SymmetricPolytope.from_vertices(vertices)
    return NormedSpace(ball.dim, ball, label=label)


def make_space(kind: str, dim: int | None = None, *, facets=None, vertices=None,
               label: str | None = None) -> NormedSpace:
    """Build a space from a named family or an explicit ball description.

    kind "l1" / "linf" need dim; kind "polyhedral" needs facets, vertices, or
    both (when both are given they must describe the same ball exactly).
    Asymmetric input cannot be expressed here; degenerate input is rejected
    by the polytope validator with a diagnostic.
    """
    if kind == "l1":
        if dim is None:
            raise ValueError("l1 space needs a dimension")
        sp = space_l1(dim)
    elif kind == "linf":
        if dim is None:
            raise ValueError("linf space needs a dimension")
        sp = space_linf(dim)
    elif kind == "polyhedral":
        if facets is not None and vertices is not None:
            built = SymmetricPolytope.from_facets(facets)
            claimed = tuple(sorted({canonical_sign(v) for v in as_matrix(vertices)}))
            if claimed != built.vertices:
                raise InvalidPolytope(
                    "facet and vertex lists describe different balls: "
                    f"enumerated {built.vertices}, given {claimed}"
                )
            sp = NormedSpace(built.dim, built)
        elif facets is not None:
            sp = space_from_facets(facets)
        elif vertices is not None:
            sp = space_from_vertices(vertices)
        else:
            raise ValueError("polyhedral space needs facets or vertices")
        if dim is not None and sp.dim != dim:
            raise ValueError(f"declared dimension {dim} differs from data ({sp.dim})")
    else:
        raise ValueError(f"unknown space kind {kind!r}")
    if label is not None:
        sp = NormedSpace(sp.dim, sp.ball, label=label)
    return sp


def norm(space: NormedSpace, x) -> Fraction:
    """Exact norm: the max of |f . x| over stored facet representatives."""
    v = as_vector(x)
    if len(v) != space.dim:
        raise ValueError(f"vector length {len(v)} differs from dimension {space.dim}")
    return max(abs(dot(f, v)) for f in space.ball.facets)


def dual_space(space: NormedSpace) -> NormedSpace:
    return NormedSpace(space.dim, polar_dual(space.ball), label=f"{space.label}*")


def support_set(space: NormedSpace, x) -> SupportSet:
    """Extreme norming functionals at x: the dual-ball vertices f with
    f . x equal to the norm of x, signs resolved. Undefined at zero."""
    v = as_vector(x)
    value = norm(space, v)
    if value == 0:
        raise ValueError("support set is undefined at the zero vector")
    extremes = []
    for w in space.ball.facets:  # facet reps are the dual-ball vertex reps
        t = dot(w, v)
        if t == value:
            extremes.append(w)
        elif -t == value:
            extremes.append(vec_neg(w))
    functionals = tuple(sorted(extremes))
    return SupportSet(v, functionals, affine_rank(functionals))


def smoothness_order(space: NormedSpace, x) -> int:
    """Number of linearly independent extreme norming functionals at x."""
    return support_set(space, x).span_dim


def has_l1_property(space: NormedSpace) -> bool:
    """Pairwise non-antipodal extreme points of the ball are linearly
    independent; with antipodal pairs collapsed to representatives this is
    plain linear independence of the vertex list."""
    reps = space.ball.vertices
    return rank(reps) == len(reps)


def is_l1_predual(space: NormedSpace) -> bool:
    """The dual ball is a parallelotope: exactly dim antipodal vertex pairs,
    and the dual space has the independence property above."""
    dual_vertex_reps = space.ball.facets
    return len(dual_vertex_reps) == space.dim and has_l1_property(dual_space(space))
