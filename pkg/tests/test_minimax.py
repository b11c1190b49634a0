from fractions import Fraction as F
from itertools import product as iter_product

import pytest

from polyorth.linalg import as_vector, mat_vec
from polyorth.minimax import (
    Instance,
    distance_operator_subspace,
    local_sup,
    make_m_summand,
    minimax_report,
    proximinal_transfer,
    summand_factor_spaces,
    verify_generic,
    verify_prop1,
    verify_theorem,
)
from polyorth.operators import (
    identity_operator,
    make_operator,
    operator_norm,
    rank_one,
    zero_operator,
)
from polyorth.spaces import (
    make_space,
    norm,
    space_l1,
    space_linf,
    subspace,
)

L1_2 = space_l1(2)
LINF_2 = space_linf(2)


def worked_instance():
    Z = subspace(LINF_2, [(1, 0)])
    T = identity_operator(L1_2, LINF_2)
    return Instance(L1_2, LINF_2, Z, T)


def grid_search_op_distance(T, Z, radius=2, denom=4):
    """Independent oracle: exhaustive search over coefficient matrices with
    entries in a fixed rational grid. Upper-bounds the distance; equals it
    when the optimum lies on the grid."""
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


def test_operator_distance_worked_instance():
    inst = worked_instance()
    res = distance_operator_subspace(inst.T, inst.Z)
    assert res.distance == 1
    # independent grid search over the two free entries agrees
    assert grid_search_op_distance(inst.T, inst.Z) == 1
    # the best approximation maps into Z and attains the distance
    diff = inst.T - res.best_approx
    for v in inst.X.ball.vertices:
        img = res.best_approx.apply(v)
        assert img[1] == 0
    assert max(norm(inst.Y, diff.apply(v)) for v in inst.X.ball.vertices) == 1


def test_operator_distance_member_is_zero():
    Z = subspace(LINF_2, [(1, 0)])
    T = rank_one(L1_2, (1, 0), (1, 0), LINF_2)
    res = distance_operator_subspace(T, Z)
    assert res.distance == 0
    assert res.best_approx.matrix == T.matrix


def test_operator_distance_whole_codomain():
    Z = subspace(LINF_2, [(1, 0), (0, 1)])
    T = make_operator([[2, 1], [-1, 3]], L1_2, LINF_2)
    assert distance_operator_subspace(T, Z).distance == 0


def test_operator_distance_zero_subspace():
    Z = subspace(LINF_2, [])
    T = make_operator([[2, 1], [-1, 3]], L1_2, LINF_2)
    assert distance_operator_subspace(T, Z).distance == operator_norm(T)


def test_local_sup_worked_instance():
    inst = worked_instance()
    loc = local_sup(inst.T, inst.Z)
    assert loc.value == 1
    assert loc.argmax_vertices == (as_vector([0, 1]),)
    table = dict(loc.per_vertex_distances)
    assert table[as_vector([1, 0])] == 0
    assert table[as_vector([0, 1])] == 1


def test_local_sup_zero_subspace_is_norm():
    Z = subspace(LINF_2, [])
    T = make_operator([[1, -2], [0, 1]], L1_2, LINF_2)
    assert local_sup(T, Z).value == operator_norm(T)


def test_minimax_report_worked_instance():
    rep = minimax_report(worked_instance())
    assert rep.op_norm == 1
    assert rep.d_global == rep.d_local == 1
    assert rep.gap == 0
    assert rep.is_T_orthogonal
    assert rep.argmax_vertices == (as_vector([0, 1]),)


def test_minimax_report_member_operator():
    Z = subspace(LINF_2, [(1, 0)])
    T = rank_one(L1_2, (1, 1), (1, 0), LINF_2)
    rep = minimax_report(Instance(L1_2, LINF_2, Z, T))
    assert rep.d_global == rep.d_local == 0
    assert rep.gap == 0


def test_gap_nonnegative_on_spot_instances():
    hx = make_space("polyhedral", facets=[[1, 0], [0, 1], [1, 1]])
    cases = [
        (L1_2, LINF_2, [(1, 1)], [[1, 2], [0, 1]]),
        (LINF_2, hx, [(1, -1)], [[1, 0], [2, 1]]),
        (hx, L1_2, [(0, 1)], [[1, 1], [1, -1]]),
    ]
    for X, Y, cols, mat in cases:
        inst = Instance(X, Y, subspace(Y, cols), make_operator(mat, X, Y))
        assert minimax_report(inst).gap >= 0


def test_make_m_summand_cube():
    ms = make_m_summand(space_linf(2), space_linf(1))
    assert ms.space.ball == space_linf(3).ball
    assert ms.split_dim == 2
    assert ms.summand.basis == (as_vector([1, 0, 0]), as_vector([0, 1, 0]))
    # projection is the coordinate truncation, norm one
    assert mat_vec(ms.projection, (F(1), F(2), F(3))) == (F(1), F(2), F(0))


def test_make_m_summand_two_segments():
    ms = make_m_summand(space_linf(1), space_l1(1))
    assert ms.space.ball == space_linf(2).ball
    assert ms.summand.basis == (as_vector([1, 0]),)


def test_make_m_summand_hexagon_factor():
    hx = make_space("polyhedral", facets=[[1, 0], [0, 1], [1, 1]])
    ms = make_m_summand(hx, space_linf(1))
    expected = {
        as_vector([1, 0, 0]),
        as_vector([0, 1, 0]),
        as_vector([1, 1, 0]),
        as_vector([0, 0, 1]),
    }
    assert set(ms.space.ball.facets) == expected


def test_summand_certificate_round_trip():
    ms = make_m_summand(space_linf(2), space_l1(2))
    X = space_l1(2)
    T = zero_operator(X, ms.space)
    inst = Instance(X, ms.space, ms.summand, T, m_summand_split=ms.split_dim)
    factors = summand_factor_spaces(inst)
    assert factors is not None
    zf, wf = factors
    assert zf.ball == space_linf(2).ball
    assert wf.ball == space_l1(2).ball


def test_summand_certificate_rejects_wrong_split():
    # the cross-polytope ball of dimension 2 is not an inf product
    Y = space_l1(2)
    X = space_l1(2)
    inst = Instance(
        X, Y, subspace(Y, [(1, 0)]), zero_operator(X, Y), m_summand_split=1
    )
    assert summand_factor_spaces(inst) is None


def test_verify_generic_worked_instance():
    rep = verify_generic(worked_instance())
    assert rep.status == "verified"
    names = {c.name for c in rep.conclusion_checks}
    assert "gap_nonneg" in names and "james_equivalence" in names


def test_verify_thgen_worked_instance():
    inst = Instance(
        L1_2,
        LINF_2,
        subspace(LINF_2, [(1, 0)]),
        identity_operator(L1_2, LINF_2),
        m_summand_split=1,
    )
    rep = verify_theorem(inst, "thgen")
    assert rep.status == "verified"
    assert rep.witnesses["x0"] == as_vector([0, 1])
    assert rep.metrics["gap"] == 0


def test_verify_linind_dependent_attainers_not_met():
    hx = make_space("polyhedral", facets=[[1, 0], [0, 1], [1, 1]])
    # the identity attains its norm at all three vertex representatives
    T = identity_operator(hx, LINF_2)
    inst = Instance(hx, LINF_2, subspace(LINF_2, [(1, 0)]), T)
    rep = verify_theorem(inst, "linind")
    assert rep.status == "hypothesis_not_met"
    failed = [c.name for c in rep.hypothesis_checks if not c.passed]
    assert "independent_attainment" in failed


def test_verify_prop1_one_dimensional_chain():
    one = space_l1(1)
    T = make_operator([[0], [1]], one, LINF_2)
    inst = Instance(one, LINF_2, subspace(LINF_2, [(1, 0)]), T)
    rep = verify_prop1(inst)
    assert rep.status == "verified"
    assert rep.witnesses["x0"] == (F(1),)
    assert rep.witnesses["y0_star"] == (F(0), F(1))
    names = {c.name: c.passed for c in rep.conclusion_checks}
    for key in (
        "zero_gap",
        "distance_at_witness",
        "functional_value",
        "functional_annihilates_target",
        "functional_is_extreme_dual",
    ):
        assert names[key]


def test_verify_prop1_degenerate_member():
    Z = subspace(LINF_2, [(1, 0)])
    T = rank_one(L1_2, (1, 0), (1, 0), LINF_2)
    rep = verify_prop1(Instance(L1_2, LINF_2, Z, T))
    assert rep.status == "degenerate"


def test_verify_prop1_rough_difference_not_met():
    # T - best_S = identity has smoothness order 2: hypothesis fails
    Z = subspace(LINF_2, [])
    T = identity_operator(L1_2, LINF_2)
    rep = verify_prop1(Instance(L1_2, LINF_2, Z, T))
    assert rep.status == "hypothesis_not_met"


def test_transfer_halfdiag():
    Y = space_linf(2)
    res = proximinal_transfer(Y, subspace(Y, [(1, 1)]), (1, 0))
    assert res.ok
    assert res.point_distance == F(1, 2)
    assert res.nearest_point == (F(1, 2), F(1, 2))


def test_transfer_decoupled():
    Y = space_l1(2)
    res = proximinal_transfer(Y, subspace(Y, [(1, 0)]), (0, 1))
    assert res.ok
    assert res.nearest_point == (F(0), F(0))
    assert res.point_distance == 1


def test_transfer_three_dim():
    Y = space_linf(3)
    res = proximinal_transfer(Y, subspace(Y, [(1, 0, 0), (0, 1, 0)]), (0, 0, 1))
    assert res.ok
    assert res.point_distance == 1


def test_transfer_rejects_member_point():
    Y = space_linf(2)
    with pytest.raises(ValueError):
        proximinal_transfer(Y, subspace(Y, [(1, 1)]), (2, 2))


def test_instance_validation():
    Z = subspace(LINF_2, [(1, 0)])
    T = identity_operator(L1_2, LINF_2)
    with pytest.raises(ValueError):
        Instance(L1_2, L1_2, Z, T)  # Z not a subspace of that Y
    with pytest.raises(ValueError):
        Instance(L1_2, LINF_2, Z, T, m_summand_split=2)  # split must be < dim
