"""Centrally symmetric polytopes with exact dual descriptions.

A polytope here is the unit ball of a polyhedral norm: it is symmetric about
the origin, bounded, and full-dimensional. Both descriptions are stored, one
representative per antipodal pair:

  facets   f: the ball is {x : |f . x| <= 1 for every stored f}
  vertices v: the ball is conv{+-v for every stored v}

The two lists are mutually polar, so swapping them gives the polar body
exactly and involutively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .linalg import (
    Matrix,
    Vector,
    as_matrix,
    canonical_sign,
    dot,
    is_zero_vector,
    rank,
    solve_square,
    vec_neg,
)


class InvalidPolytope(ValueError):
    """Input does not describe a symmetric, bounded, full-dimensional body."""


def _canonical_reps(rows: Matrix, what: str) -> Matrix:
    reps = set()
    for row in rows:
        if is_zero_vector(row):
            raise InvalidPolytope(f"zero vector is not a valid {what}")
        reps.add(canonical_sign(row))
    return tuple(sorted(reps))


def enumerate_vertices(facets, dim: int) -> Matrix:
    """All vertices of {x : |f . x| <= 1}, one representative per antipodal
    pair, canonically signed and lexicographically sorted.

    Walks the linearly independent dim-subsets of the signed facet system,
    solves each active set exactly, and keeps feasible solutions. Intended
    for small dimension; the subset walk is pruned by an incremental echelon
    so dependent subsets are never expanded.
    """
    reps = _canonical_reps(as_matrix(facets), "facet")
    if dim <= 0:
        raise InvalidPolytope("dimension must be positive")
    if any(len(f) != dim for f in reps):
        raise InvalidPolytope("facet width differs from dimension")
    if rank(reps) < dim:
        raise InvalidPolytope("facet system is unbounded or lower-dimensional")
    signed = list(reps) + [vec_neg(f) for f in reps]
    ones = (Fraction(1),) * dim
    found: set[Vector] = set()

    def reduce_against(row: Vector, echelon: list[tuple[int, Vector]]) -> Vector:
        work = list(row)
        for pcol, erow in echelon:
            factor = work[pcol]
            if factor:
                work = [a - factor * b for a, b in zip(work, erow)]
        return tuple(work)

    def walk(start: int, chosen: list[int], echelon: list[tuple[int, Vector]]) -> None:
        if len(chosen) == dim:
            point = solve_square([signed[i] for i in chosen], ones)
            if point is None:
                return
            if all(abs(dot(f, point)) <= 1 for f in reps):
                found.add(canonical_sign(point))
            return
        remaining_needed = dim - len(chosen)
        for i in range(start, len(signed) - remaining_needed + 1):
            reduced = reduce_against(signed[i], echelon)
            pcol = next((j for j, a in enumerate(reduced) if a != 0), -1)
            if pcol < 0:
                continue
            inv = Fraction(1) / reduced[pcol]
            normalized = tuple(a * inv for a in reduced)
            walk(i + 1, chosen + [i], echelon + [(pcol, normalized)])

    walk(0, [], [])
    return tuple(sorted(found))


@dataclass(frozen=True, slots=True)
class SymmetricPolytope:
    """Unit ball of a polyhedral norm, with both descriptions stored."""

    dim: int
    facets: Matrix
    vertices: Matrix

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise InvalidPolytope("dimension must be positive")
        for what, rows in (("facet", self.facets), ("vertex", self.vertices)):
            if not rows:
                raise InvalidPolytope(f"empty {what} list")
            for row in rows:
                if len(row) != self.dim:
                    raise InvalidPolytope(f"{what} width differs from dimension")
                if is_zero_vector(row):
                    raise InvalidPolytope(f"zero vector stored as {what}")
                if canonical_sign(row) != row:
                    raise InvalidPolytope(f"{what} not canonically signed")
            if tuple(sorted(set(rows))) != rows:
                raise InvalidPolytope(f"{what} list not sorted and unique")
        if rank(self.facets) < self.dim:
            raise InvalidPolytope("facet system is unbounded or lower-dimensional")
        if rank(self.vertices) < self.dim:
            raise InvalidPolytope("vertex system is lower-dimensional")
        for v in self.vertices:
            m = max(abs(dot(f, v)) for f in self.facets)
            if m != 1:
                raise InvalidPolytope(f"vertex {v} is not on the unit sphere")
        for f in self.facets:
            m = max(abs(dot(f, v)) for v in self.vertices)
            if m != 1:
                raise InvalidPolytope(f"facet {f} is not active at any vertex")

    @classmethod
    def from_facets(cls, facets) -> "SymmetricPolytope":
        """Build from an inequality description; redundant rows are dropped.

        The vertex list is enumerated from the input, then the true facet
        list is recovered as the vertex set of the polar body, which removes
        inequalities that touch the ball only at lower-dimensional faces.
        """
        raw = as_matrix(facets)
        if not raw:
            raise InvalidPolytope("empty facet list")
        dim = len(raw[0])
        vertices = enumerate_vertices(raw, dim)
        true_facets = enumerate_vertices(vertices, dim)
        return cls(dim, true_facets, vertices)

    @classmethod
    def from_vertices(cls, vertices) -> "SymmetricPolytope":
        """Build conv(+-given points); non-extreme points are dropped."""
        raw = as_matrix(vertices)
        if not raw:
            raise InvalidPolytope("empty vertex list")
        dim = len(raw[0])
        facets = enumerate_vertices(raw, dim)
        true_vertices = enumerate_vertices(facets, dim)
        return cls(dim, facets, true_vertices)

    @classmethod
    def product(cls, left: "SymmetricPolytope", right: "SymmetricPolytope") -> "SymmetricPolytope":
        """Cartesian product (the unit ball of the sup-combination of the norms)."""
        dim = left.dim + right.dim
        lz = (Fraction(0),) * left.dim
        rz = (Fraction(0),) * right.dim
        facets = tuple(sorted(
            {f + rz for f in left.facets} | {lz + f for f in right.facets}
        ))
        verts = set()
        for a, b in iter_product(left.vertices, right.vertices):
            verts.add(a + b)
            verts.add(a + vec_neg(b))
        return cls(dim, facets, tuple(sorted(verts)))


def polar_dual(p: SymmetricPolytope) -> SymmetricPolytope:
    """Polar body: facets and vertices trade places. An exact involution."""
    return SymmetricPolytope(p.dim, facets=p.vertices, vertices=p.facets)
