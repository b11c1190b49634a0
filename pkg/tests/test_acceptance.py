"""Acceptance suite: one test per release criterion, every comparison exact.

Each test prints as its own line under pytest -v, so the per-criterion
verdicts are readable straight off the run log. Randomized criteria use
fixed seed ranges and are fully deterministic.
"""

import random
import time
from fractions import Fraction as F
from itertools import product as iter_product

from polyorth.generate import GenerationExhausted, generate_instance, random_space, random_subspace
from polyorth.linalg import canonical_sign, dot, rank
from polyorth.lp import solve_lp
from polyorth.minimax import (
    Instance,
    distance_operator_subspace,
    local_sup,
    minimax_report,
    proximinal_transfer,
    verify_prop1,
    verify_theorem,
)
from polyorth.operators import (
    identity_operator,
    norm_attainment_extremes,
    operator_subspace_basis,
    orthogonality_witness,
    rank_one,
    zero_operator,
)
from polyorth.oracle import (
    SampleConfig,
    bj_lambda_scan,
    estimate_operator_distance,
    sample_sphere,
)
from polyorth.polytope import SymmetricPolytope, polar_dual
from polyorth.proximity import bj_orthogonal_subspace, bj_orthogonal_vec, distance_to_subspace
from polyorth.spaces import (
    dual_space,
    has_l1_property,
    is_l1_predual,
    make_space,
    norm,
    space_l1,
    space_linf,
    subspace,
)


def _collect(kind, needed, max_dim=4, start_seed=1, seed_cap=None):
    """First `needed` instances of a kind, skipping exhausted seeds."""
    cap = seed_cap if seed_cap is not None else start_seed + 2 * needed
    out = []
    seed = start_seed
    while len(out) < needed and seed < cap:
        try:
            out.append(generate_instance(kind, seed, max_dim=max_dim))
        except GenerationExhausted:
            pass
        seed += 1
    assert len(out) == needed, f"only {len(out)} usable {kind} seeds below {cap}"
    return out


def test_criterion_1_gap_nonnegative_on_500_generic_instances():
    start = time.monotonic()
    bad = []
    for seed in range(1, 501):
        inst = generate_instance("generic", seed, max_dim=4)
        rep = minimax_report(inst)
        if rep.gap < 0:
            bad.append((seed, rep.gap))
    elapsed = time.monotonic() - start
    assert bad == []
    assert elapsed < 120, f"suite took {elapsed:.1f}s"


def test_criterion_2_summand_collapse_on_100_instances():
    for inst in _collect("thgen", 100):
        rep = verify_theorem(inst, "thgen")
        assert rep.status == "verified", (inst.seed, rep)
        assert rep.metrics["gap"] == 0
        x0 = rep.witnesses["x0"]
        assert canonical_sign(x0) in inst.X.ball.vertices
        ok, _ = bj_orthogonal_subspace(inst.Y, inst.T.apply(x0), inst.Z)
        assert ok


def test_criterion_3_independent_vertex_domain_collapse_on_100_instances():
    for inst in _collect("l1prop", 100):
        assert has_l1_property(inst.X)
        rep = verify_theorem(inst, "l1prop")
        assert rep.status == "verified", (inst.seed, rep)
        assert rep.metrics["gap"] == 0
        x0 = rep.witnesses["x0"]
        assert canonical_sign(x0) in inst.X.ball.vertices
        assert canonical_sign(x0) in {
            canonical_sign(v) for v in norm_attainment_extremes(inst.T)
        }
        ok, _ = bj_orthogonal_subspace(inst.Y, inst.T.apply(x0), inst.Z)
        assert ok


def test_criterion_4_independent_attainers_collapse_on_100_instances():
    for inst in _collect("linind", 100):
        attaining = norm_attainment_extremes(inst.T)
        assert rank(attaining) == len(attaining)
        rep = verify_theorem(inst, "linind")
        assert rep.status == "verified", (inst.seed, rep)
        assert rep.metrics["gap"] == 0
        x0 = rep.witnesses["x0"]
        d_at = distance_to_subspace(
            inst.Y, inst.T.apply(x0), inst.Z, face_dim=False
        ).distance
        assert d_at == rep.metrics["d_global"]


def test_criterion_5_smooth_difference_equality_chain_on_50_instances():
    for inst in _collect("prop1", 50):
        rep = verify_prop1(inst)
        assert rep.status == "verified", (inst.seed, rep)
        d = rep.metrics["d_global"]
        assert rep.metrics["d_local"] == d
        x0 = rep.witnesses["x0"]
        y0 = rep.witnesses["y0_star"]
        assert canonical_sign(x0) in inst.X.ball.vertices
        assert canonical_sign(y0) in inst.Y.ball.facets
        assert all(dot(y0, z) == 0 for z in inst.Z.basis)
        assert distance_to_subspace(
            inst.Y, inst.T.apply(x0), inst.Z, face_dim=False
        ).distance == d
        assert dot(y0, inst.T.apply(x0)) == d


def test_criterion_6_nearest_point_transfer_on_50_triples():
    rng = random.Random(606)
    done = 0
    while done < 50:
        dim = rng.randint(2, 4)
        Y = random_space(rng, dim)
        Z = random_subspace(rng, Y, rng.randint(1, dim - 1))
        y = tuple(F(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(dim))
        if Z.contains(y):
            continue
        res = proximinal_transfer(Y, Z, y)
        assert res.ok, (Y.label, Z.basis, y, res.checks)
        done += 1


def test_criterion_7_orthogonality_equivalences_and_scan_soundness():
    # part one: the distance criterion, the convex certificate, and the
    # attaining-vertex route agree on 200 instances
    for seed in range(1, 201):
        inst = generate_instance("generic", seed, max_dim=3)
        if inst.T.is_zero:
            continue
        rep = minimax_report(inst)
        cert = orthogonality_witness(
            inst.T, operator_subspace_basis(inst.X, inst.Z)
        )
        assert (cert is not None) == rep.is_T_orthogonal, seed
        exists = any(
            bj_orthogonal_subspace(inst.Y, inst.T.apply(v), inst.Z)[0]
            for v in norm_attainment_extremes(inst.T)
        )
        if exists:
            assert rep.is_T_orthogonal, seed
        if rep.is_T_orthogonal and has_l1_property(inst.X):
            assert exists, seed

    # part two: the exact pairwise test is never refuted by the grid scan
    rng = random.Random(707)
    spaces = [
        space_l1(2),
        space_linf(2),
        make_space("polyhedral", facets=[[1, 0], [0, 1], [1, 1]]),
        space_l1(3),
        space_linf(3),
    ]
    bulk = SampleConfig(grid_steps=257)
    spot = SampleConfig()  # default fine grid
    checked = 0
    pair_no = 0
    while checked < 1000:
        pair_no += 1
        space = spaces[rng.randrange(len(spaces))]
        x = tuple(
            F(rng.randint(-5, 5), rng.choice((1, 2, 3))) for _ in range(space.dim)
        )
        y = tuple(
            F(rng.randint(-5, 5), rng.choice((1, 2, 3))) for _ in range(space.dim)
        )
        if norm(space, x) == 0:
            continue
        exact = bj_orthogonal_vec(space, x, y)
        cfg = spot if checked % 25 == 0 else bulk
        res = bj_lambda_scan(space, x, y, cfg)
        if exact:
            assert res.holds_on_grid, (space.label, x, y)
        if res.min_value < norm(space, x):
            assert not exact, (space.label, x, y)
        checked += 1


def _grid_search_op_distance(T, Z, radius=2, denom=4):
    """Independent exhaustive oracle over a rational grid of coefficient
    matrices; exact upper bound, tight when the optimum lies on the grid."""
    X, Y = T.domain, T.codomain
    k, dx = Z.dim, X.dim
    values = [F(n, denom) for n in range(-radius * denom, radius * denom + 1)]
    best = None
    for combo in iter_product(values, repeat=k * dx):
        S = zero_operator(X, Y)
        for j, col in enumerate(Z.basis):
            S = S + rank_one(X, combo[j * dx:(j + 1) * dx], col, Y)
        diff = T - S
        val = max(norm(Y, diff.apply(v)) for v in X.ball.vertices)
        if best is None or val < best:
            best = val
    return best


def test_criterion_8_sampling_oracle_soundness():
    cfg = SampleConfig(seed=3, count=4)
    sphere_cfg = SampleConfig(seed=8, count=6)
    for seed in range(1, 101):
        inst = generate_instance("generic", seed, max_dim=3)
        exact = distance_operator_subspace(inst.T, inst.Z).distance
        assert estimate_operator_distance(inst.T, inst.Z, cfg) >= exact
        loc = local_sup(inst.T, inst.Z)
        for x in sample_sphere(inst.X, sphere_cfg):
            d = distance_to_subspace(
                inst.Y, inst.T.apply(x), inst.Z, face_dim=False
            ).distance
            assert d <= loc.value

    # worked instance, cross-checked by the independent grid oracle
    X, Y = space_l1(2), space_linf(2)
    Z = subspace(Y, [(1, 0)])
    T = identity_operator(X, Y)
    rep = minimax_report(Instance(X, Y, Z, T))
    assert rep.d_global == rep.d_local == 1
    assert rep.argmax_vertices == ((F(0), F(1)),)
    assert _grid_search_op_distance(T, Z) == 1


def _gauge_via_lp(space, x):
    """Minimal total weight writing x as a signed combination of ball
    vertices: the Minkowski functional, computed independently of facets."""
    verts = space.ball.vertices
    n = len(verts)
    cols = []
    for v in verts:
        cols.append(v)
    for v in verts:
        cols.append(tuple(-c for c in v))
    rows = [tuple(col[i] for col in cols) for i in range(space.dim)]
    res = solve_lp(
        [F(1)] * (2 * n),
        eq=rows,
        eq_rhs=list(x),
        sense="min",
        nonneg=(True,) * (2 * n),
    )
    assert res.is_optimal
    return res.value


def test_criterion_9_geometry_kernel_fixtures():
    square = SymmetricPolytope.from_facets([(F(1), F(0)), (F(0), F(1))])
    cross3 = space_l1(3).ball
    cube3 = space_linf(3).ball
    hexagon = SymmetricPolytope.from_facets(
        [(F(1), F(0)), (F(0), F(1)), (F(1), F(1))]
    )

    # polar involution
    for p in (square, cross3, cube3, hexagon):
        assert polar_dual(polar_dual(p)) == p

    # vertex enumeration on the fixtures
    assert set(cube3.vertices) == {
        (F(1), F(1), F(1)), (F(1), F(1), F(-1)),
        (F(1), F(-1), F(1)), (F(1), F(-1), F(-1)),
    }
    assert set(cross3.vertices) == {
        (F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1)),
    }
    assert set(hexagon.vertices) == {
        (F(0), F(1)), (F(1), F(-1)), (F(1), F(0)),
    }

    # norm agrees with the vertex-hull gauge
    probe = [(F(1), F(1)), (F(-2), F(1)), (F(1, 2), F(-1, 3)), (F(0), F(3))]
    hexspace = make_space("polyhedral", facets=[[1, 0], [0, 1], [1, 1]])
    for space in (space_l1(2), space_linf(2), hexspace):
        for x in probe:
            assert norm(space, x) == _gauge_via_lp(space, x)
    probe3 = [(F(1), F(2), F(-1)), (F(1, 2), F(0), F(1, 2))]
    for space in (space_l1(3), space_linf(3)):
        for x in probe3:
            assert norm(space, x) == _gauge_via_lp(space, x)

    # duals of the max-norm family have independent extreme points; the
    # sum-norm space only does in dimension two
    for n in (1, 2, 3, 4):
        assert is_l1_predual(space_linf(n))
    assert is_l1_predual(space_l1(2))
    assert not is_l1_predual(space_l1(3))

    # dual of the dual returns to the original ball
    for space in (space_l1(2), space_linf(3), hexspace):
        assert dual_space(dual_space(space)).ball == space.ball
