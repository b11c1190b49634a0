from fractions import Fraction as F

import pytest

from polyorth.linalg import (
    as_matrix,
    as_vector,
    canonical_sign,
    dot,
    frac,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    solve_linear_system,
    solve_square,
    transpose,
    vec_add,
    vec_scale,
    vec_sub,
)


def test_frac_accepts_int_and_fraction():
    assert frac(3) == F(3)
    assert frac(F(1, 2)) == F(1, 2)


def test_frac_rejects_float_and_bool():
    with pytest.raises(TypeError):
        frac(0.5)
    with pytest.raises(TypeError):
        frac(True)


def test_as_vector_normalizes():
    v = as_vector([1, F(1, 2), -2])
    assert v == (F(1), F(1, 2), F(-2))
    assert all(isinstance(c, F) for c in v)


def test_dot():
    assert dot((F(1), F(2)), (F(3), F(-1))) == F(1)


def test_vector_arithmetic():
    a, b = as_vector([1, 2]), as_vector([3, -1])
    assert vec_add(a, b) == (F(4), F(1))
    assert vec_sub(a, b) == (F(-2), F(3))
    assert vec_scale(F(1, 2), a) == (F(1, 2), F(1))


def test_matrix_products():
    m = as_matrix([[1, 2], [3, 4]])
    assert mat_vec(m, (F(1), F(1))) == (F(3), F(7))
    assert mat_mul(m, as_matrix([[1, 0], [0, 1]])) == m
    assert transpose(m) == ((F(1), F(3)), (F(2), F(4)))


def test_rank_examples():
    assert rank(as_matrix([[1, 0], [0, 1]])) == 2
    assert rank(as_matrix([[1, 0], [2, 0]])) == 1
    assert rank(as_matrix([[1, 0], [0, 1], [1, 1]])) == 2
    assert rank(()) == 0


def test_canonical_sign_flips_to_positive_lead():
    assert canonical_sign((F(0), F(-2))) == (F(0), F(2))
    assert canonical_sign((F(1), F(-2))) == (F(1), F(-2))


def test_solve_square():
    m = as_matrix([[2, 0], [0, 4]])
    assert solve_square(m, (F(2), F(2))) == (F(1), F(1, 2))
    singular = as_matrix([[1, 1], [2, 2]])
    assert solve_square(singular, (F(1), F(1))) is None


def test_solve_linear_system_rectangular():
    # x + y = 2 with one equation: any solution works, check residual
    rows = as_matrix([[1, 1]])
    sol = solve_linear_system(rows, (F(2),))
    assert sol is not None and sum(sol) == F(2)
    # inconsistent
    rows = as_matrix([[1, 1], [1, 1]])
    assert solve_linear_system(rows, (F(1), F(2))) is None


def test_nullspace():
    rows = as_matrix([[1, 1]])
    cols = nullspace(rows, 2)
    assert len(cols) == 1
    v = cols[0]
    assert v[0] + v[1] == 0 and v != (F(0), F(0))
    # full-rank square matrix has trivial nullspace
    assert nullspace(as_matrix([[1, 0], [0, 1]]), 2) == ()
