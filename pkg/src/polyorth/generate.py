"""Deterministic random instance generation.

Each kind draws spaces, subspaces, and operators from a seeded generator,
then re-verifies the wanted hypotheses with the exact predicates before
returning; nothing is assumed from the construction recipe. A bounded
number of redraws guards against unlucky seeds, after which generation
reports exhaustion explicitly.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .linalg import Matrix, canonical_sign, is_zero_vector, rank
from .minimax import Instance, distance_operator_subspace, make_m_summand
from .operators import Operator, norm_attainment_extremes, operator_smoothness_order
from .polytope import InvalidPolytope
from .spaces import (
    NormedSpace,
    Subspace,
    has_l1_property,
    space_from_vertices,
    space_l1,
    space_linf,
)

_ZERO = Fraction(0)

KINDS = ("generic", "thgen", "l1prop", "linind", "prop1")


class GenerationExhausted(RuntimeError):
    """The redraw budget ran out before the hypotheses could be satisfied."""

    def __init__(self, kind: str, seed: int, budget: int):
        super().__init__(
            f"could not satisfy hypotheses for kind {kind!r} with seed {seed} "
            f"within {budget} redraws"
        )
        self.kind = kind
        self.seed = seed
        self.budget = budget


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.choice((1, 2)))


def _rand_vertex_rows(rng: random.Random, dim: int, pairs: int) -> Matrix | None:
    rows = []
    for _ in range(pairs):
        for _ in range(12):
            cand = tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))
            if not is_zero_vector(cand):
                rows.append(canonical_sign(cand))
                break
        else:
            return None
    if rank(rows) < dim:
        return None
    return tuple(rows)


def random_space(rng: random.Random, dim: int) -> NormedSpace:
    """A space of the given dimension: sum norm, max norm, a random skewed
    sum-norm ball, or (small dimensions) the hull of a few random points."""
    styles = ["l1", "linf", "skew"]
    if dim <= 3:
        styles.append("hull")
    style = rng.choice(styles)
    if dim == 1 or style == "l1":
        return space_l1(dim)
    if style == "linf":
        return space_linf(dim)
    if style == "skew":
        rows = _rand_vertex_rows(rng, dim, dim)
        if rows is None:
            return space_l1(dim)
        return space_from_vertices(rows, label=f"skew({dim})")
    rows = _rand_vertex_rows(rng, dim, dim + rng.randint(1, 2))
    if rows is None:
        return space_linf(dim)
    try:
        return space_from_vertices(rows, label=f"hull({dim})")
    except InvalidPolytope:
        return space_linf(dim)


def random_subspace(rng: random.Random, ambient: NormedSpace, k: int) -> Subspace:
    if k == 0:
        return Subspace(ambient, ())
    for _ in range(64):
        cols = tuple(
            tuple(Fraction(rng.randint(-2, 2)) for _ in range(ambient.dim))
            for _ in range(k)
        )
        if rank(cols) == k:
            return Subspace(ambient, cols)
    # fall back to coordinate directions, always independent
    cols = tuple(
        tuple(Fraction(1) if i == j else _ZERO for i in range(ambient.dim))
        for j in range(k)
    )
    return Subspace(ambient, cols)


def random_operator(rng: random.Random, domain: NormedSpace, codomain: NormedSpace) -> Operator:
    m = tuple(
        tuple(_rand_fraction(rng) for _ in range(domain.dim))
        for _ in range(codomain.dim)
    )
    return Operator(m, domain, codomain)


def _orthogonalized(rng: random.Random, domain, codomain, target) -> Operator | None:
    """T0 - (best approximation of T0): orthogonal to the maps into the
    target by construction; None when the difference degenerates to zero."""
    t0 = random_operator(rng, domain, codomain)
    diff = t0 - distance_operator_subspace(t0, target).best_approx
    return None if diff.is_zero else diff


def generate_instance(kind: str, seed: int, max_dim: int = 3, budget: int = 64) -> Instance:
    """Draw one instance of the given kind, deterministically from the seed.

    Hypothesis predicates are re-verified on the finished instance; redraws
    happen until they hold or the budget runs out (GenerationExhausted)."""
    if kind not in KINDS:
        raise ValueError(f"unknown instance kind {kind!r}")
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    # process-independent derived seed (the builtin hash is randomized)
    digest = hashlib.sha256(f"{kind}:{seed}:{max_dim}".encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    for _ in range(budget):
        inst = _draw(kind, rng, seed, max_dim)
        if inst is not None:
            return inst
    raise GenerationExhausted(kind, seed, budget)


def _draw(kind: str, rng: random.Random, seed: int, max_dim: int) -> Instance | None:
    if kind == "generic":
        X = random_space(rng, rng.randint(1, max_dim))
        Y = random_space(rng, rng.randint(1, max_dim))
        Z = random_subspace(rng, Y, rng.randint(0, Y.dim))
        T = random_operator(rng, X, Y)
        return Instance(X, Y, Z, T, seed=seed, kind=kind)

    if kind == "thgen":
        if max_dim < 2:
            raise ValueError("thgen needs codomain dimension at least 2")
        dz = rng.randint(1, max_dim - 1)
        dw = rng.randint(1, max_dim - dz)
        summand = make_m_summand(space_linf(dz), random_space(rng, dw))
        X = random_space(rng, rng.randint(1, max_dim))
        T = _orthogonalized(rng, X, summand.space, summand.summand)
        if T is None:
            return None
        inst = Instance(
            X, summand.space, summand.summand, T,
            m_summand_split=summand.split_dim, seed=seed, kind=kind,
        )
        return inst

    if kind == "l1prop":
        dx = rng.randint(1, max_dim)
        X = _random_l1_property_space(rng, dx)
        Y = random_space(rng, rng.randint(1, max_dim))
        Z = random_subspace(rng, Y, rng.randint(0, Y.dim - 1) if Y.dim > 1 else 0)
        T = _orthogonalized(rng, X, Y, Z)
        if T is None or not has_l1_property(X):
            return None
        return Instance(X, Y, Z, T, seed=seed, kind=kind)

    if kind == "linind":
        X = random_space(rng, rng.randint(1, max_dim))
        Y = random_space(rng, rng.randint(1, max_dim))
        Z = random_subspace(rng, Y, rng.randint(0, Y.dim - 1) if Y.dim > 1 else 0)
        T = _orthogonalized(rng, X, Y, Z)
        if T is None:
            return None
        attaining = norm_attainment_extremes(T)
        if rank(attaining) != len(attaining):
            return None
        return Instance(X, Y, Z, T, seed=seed, kind=kind)

    # prop1: the instance carries a plain operator; the verifier forms the
    # best approximation itself, so filter on the resulting difference here.
    X = random_space(rng, rng.randint(1, max_dim))
    Y = random_space(rng, rng.randint(1, max_dim))
    if Y.dim == 1:
        return None
    Z = random_subspace(rng, Y, rng.randint(0, Y.dim - 1))
    T = random_operator(rng, X, Y)
    diff = T - distance_operator_subspace(T, Z).best_approx
    if diff.is_zero or operator_smoothness_order(diff) != 1:
        return None
    return Instance(X, Y, Z, T, seed=seed, kind="prop1")


def _random_l1_property_space(rng: random.Random, dim: int) -> NormedSpace:
    """Image of the sum-norm ball under a random invertible map: exactly dim
    vertex pairs, always linearly independent."""
    for _ in range(64):
        rows = _rand_vertex_rows(rng, dim, dim)
        if rows is not None and rank(rows) == dim:
            return space_from_vertices(rows, label=f"l1img({dim})")
    return space_l1(dim)
