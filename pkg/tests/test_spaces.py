from fractions import Fraction as F

import pytest

from polyorth.linalg import as_matrix, as_vector, dot
from polyorth.lp import solve_lp
from polyorth.polytope import InvalidPolytope
from polyorth.spaces import (
    Subspace,
    dual_space,
    has_l1_property,
    is_l1_predual,
    make_space,
    norm,
    smoothness_order,
    space_from_vertices,
    space_l1,
    space_linf,
    subspace,
    support_set,
)


def gauge_oracle(space, x):
    """Independent Minkowski-gauge value: the least t with x in t * ball,
    computed as an LP over convex weights on the signed vertex list."""
    verts = [tuple(v) for v in space.ball.vertices]
    signed = verts + [tuple(-c for c in v) for v in verts]
    n = len(signed)
    # minimize sum(w) subject to sum w_i v_i = x, w >= 0
    eq = [[F(signed[i][d]) for i in range(n)] for d in range(space.dim)]
    res = solve_lp(
        [F(1)] * n,
        eq=eq,
        eq_rhs=list(x),
        nonneg=[True] * n,
        sense="min",
    )
    assert res.is_optimal
    return res.value


def hexagon_space():
    return make_space("polyhedral", facets=as_matrix([[1, 0], [0, 1], [1, 1]]))


def test_l1_and_linf_ball_reps():
    assert space_l1(2).ball.vertices == (as_vector([0, 1]), as_vector([1, 0]))
    assert space_linf(2).ball.vertices == (as_vector([1, -1]), as_vector([1, 1]))


def test_hexagon_from_vertices_round_trip():
    hx = space_from_vertices(as_matrix([[1, 0], [0, 1], [1, 1]]))
    # polar round trip validates the construction
    assert dual_space(dual_space(hx)).ball == hx.ball


def test_norm_values():
    assert norm(space_l1(2), (3, -4)) == 7
    assert norm(space_linf(2), (3, -4)) == 4
    assert norm(space_l1(3), (0, 0, 0)) == 0
    assert norm(hexagon_space(), (1, 1)) == 2


def test_norm_equals_gauge():
    spaces = [space_l1(2), space_linf(2), hexagon_space(), space_l1(3), space_linf(3)]
    points = [(1, 0), (2, -3), (F(1, 2), F(5, 7)), (0, 0)]
    for sp in spaces:
        for p in points:
            x = as_vector(list(p) + [1] * (sp.dim - 2))
            assert norm(sp, x) == gauge_oracle(sp, x)


def test_dual_space_pairs():
    assert dual_space(space_l1(2)).ball == space_linf(2).ball
    assert dual_space(space_linf(3)).ball == space_l1(3).ball
    hx = hexagon_space()
    assert dual_space(dual_space(hx)).ball == hx.ball


def test_support_sets():
    ss = support_set(space_l1(2), (1, 0))
    assert ss.extreme_functionals == (as_vector([1, -1]), as_vector([1, 1]))
    assert ss.span_dim == 2
    ss = support_set(space_l1(2), (F(1, 2), F(1, 2)))
    assert ss.extreme_functionals == (as_vector([1, 1]),)
    assert ss.span_dim == 1
    ss = support_set(space_linf(2), (1, 1))
    assert ss.extreme_functionals == (as_vector([0, 1]), as_vector([1, 0]))
    assert ss.span_dim == 2


def test_support_set_functionals_attain_the_norm():
    sp = hexagon_space()
    x = as_vector([F(2), F(-1)])
    value = norm(sp, x)
    ss = support_set(sp, x)
    for f in ss.extreme_functionals:
        assert dot(f, x) == value


def test_support_set_rejects_zero():
    with pytest.raises(ValueError):
        support_set(space_l1(2), (0, 0))


def test_smoothness_orders():
    assert smoothness_order(space_l1(2), (F(1, 2), F(1, 2))) == 1
    assert smoothness_order(space_l1(2), (1, 0)) == 2
    assert smoothness_order(space_linf(3), (1, 1, 1)) == 3


def test_has_l1_property():
    for n in (1, 2, 3):
        assert has_l1_property(space_l1(n))
    assert has_l1_property(space_linf(2))
    assert not has_l1_property(hexagon_space())


def test_is_l1_predual():
    for n in (1, 2, 3, 4):
        assert is_l1_predual(space_linf(n))
    assert is_l1_predual(space_l1(2))
    assert not is_l1_predual(space_l1(3))


def test_make_space_consistency_check():
    sq_f = as_matrix([[1, 0], [0, 1]])
    sq_v = as_matrix([[1, -1], [1, 1]])
    sp = make_space("polyhedral", facets=sq_f, vertices=sq_v)
    assert sp.ball.facets == tuple(sorted(sq_f))
    with pytest.raises(InvalidPolytope):
        make_space(
            "polyhedral",
            facets=sq_f,
            vertices=as_matrix([[0, 1], [1, 0]]),  # cross, not the square
        )


def test_subspace_validation():
    Y = space_linf(2)
    sub = subspace(Y, [(1, 1)])
    assert sub.dim == 1
    assert sub.contains((2, 2))
    assert not sub.contains((1, 0))
    assert sub.member((F(3),)) == (F(3), F(3))
    with pytest.raises(ValueError):
        Subspace(Y, as_matrix([[1, 1], [2, 2]]))  # dependent columns
    with pytest.raises(ValueError):
        Subspace(Y, as_matrix([[1, 1, 0]]))  # wrong length
    whole = subspace(Y, [(1, 0), (0, 1)])
    assert whole.is_whole_space
    empty = Subspace(Y, ())
    assert empty.is_zero and empty.dim == 0
