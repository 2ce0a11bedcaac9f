import random

import pytest
from hypothesis import given, settings, strategies as st

from toricctl.lattice import (
    det,
    hermite_normal_form,
    identity,
    invariant_factors,
    is_primitive,
    is_unimodular,
    mat_mul,
    mat_vec,
    matrix,
    smith_normal_form,
    solve_integer,
    xgcd,
)
from tests.oracles import is_row_hnf, random_matrix

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
V = (-1, -2, -3)


def columns(*cols):
    return tuple(zip(*cols))


entries = st.integers(-20, 20)


def matrices(rows, cols):
    return st.lists(
        st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(lambda m: tuple(tuple(r) for r in m))


# -- determinant -------------------------------------------------------------


def test_det_examples():
    assert det(identity(3)) == 1
    assert det(columns(E1, E2, V)) == -3
    assert det(columns(E2, E3, V)) == -1
    assert det(((5,),)) == 5
    assert det(((1, 2), (3, 4))) == -2


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(((1, 2, 3), (4, 5, 6)))


@given(matrices(3, 3), matrices(3, 3))
def test_det_multiplicative(a, b):
    assert det(mat_mul(a, b)) == det(a) * det(b)


def test_xgcd():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randint(-99, 99), rng.randint(-99, 99)
        g, s, t = xgcd(a, b)
        assert g == s * a + t * b
        assert g >= 0
        assert g == __import__("math").gcd(a, b)


# -- Hermite normal form ------------------------------------------------------


def test_hnf_identity():
    h, u = hermite_normal_form(identity(3))
    assert h == identity(3)
    assert u == identity(3)


def test_hnf_already_reduced():
    m = ((2, 0), (0, 3))
    h, u = hermite_normal_form(m)
    assert h == m
    assert u == identity(2)


@given(matrices(3, 3))
def test_hnf_properties_square(m):
    h, u = hermite_normal_form(m)
    assert mat_mul(u, m) == h
    assert det(u) in (1, -1)
    assert is_row_hnf(h)


@given(st.sampled_from([(2, 4), (4, 2), (1, 3), (3, 1)]).flatmap(lambda s: matrices(*s)))
def test_hnf_properties_rectangular(m):
    h, u = hermite_normal_form(m)
    assert mat_mul(u, m) == h
    assert det(u) in (1, -1)
    assert is_row_hnf(h)


# -- Smith normal form --------------------------------------------------------


def _check_snf(m):
    d, u, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    assert det(u) in (1, -1)
    assert det(v) in (1, -1)
    size = min(len(m), len(m[0]))
    diag = [d[i][i] for i in range(size)]
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    # zeros trail, chain divides
    assert diag[: len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return diag


def test_snf_examples():
    assert _check_snf(identity(3)) == [1, 1, 1]
    assert _check_snf(columns(E1, E2, V)) == [1, 1, 3]
    assert _check_snf(columns((2, 0, 0), (0, 2, 0), E3)) == [1, 2, 2]
    assert invariant_factors(columns(E1, E2, V)) == (1, 1, 3)


def test_snf_rank_deficient():
    assert _check_snf(((0, 0), (0, 0))) == [0, 0]
    assert _check_snf(((1, 2, 3), (2, 4, 6), (3, 6, 9)))[1:] == [0, 0]


@given(matrices(3, 3))
@settings(deadline=None)
def test_snf_properties(m):
    _check_snf(m)


@given(st.sampled_from([(2, 4), (4, 3), (1, 3)]).flatmap(lambda s: matrices(*s)))
@settings(deadline=None)
def test_snf_properties_rectangular(m):
    _check_snf(m)


# -- integer solving ----------------------------------------------------------


def test_solve_examples():
    assert solve_integer(identity(3), (5, -7, 11)) == (5, -7, 11)
    assert solve_integer(((2,),), (3,)) is None
    a = columns(E1, E2, V)
    x = solve_integer(a, (0, 0, -3))
    assert x is not None
    assert mat_vec(a, x) == (0, 0, -3)
    # the system is nonsingular, so the solution is unique
    assert x == (1, 2, 1)


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_integer(identity(3), (1, 2))


@given(matrices(3, 3), st.lists(st.integers(-9, 9), min_size=3, max_size=3))
@settings(deadline=None)
def test_solve_recovers_constructed_solutions(a, x):
    b = mat_vec(a, tuple(x))
    sol = solve_integer(a, b)
    assert sol is not None
    assert mat_vec(a, sol) == b


@given(matrices(3, 3), st.lists(st.integers(-30, 30), min_size=3, max_size=3))
@settings(deadline=None)
def test_solve_substitutes_back(a, b):
    sol = solve_integer(a, tuple(b))
    if sol is not None:
        assert mat_vec(a, sol) == tuple(b)


# -- primitivity and misc ------------------------------------------------------


def test_is_primitive():
    assert is_primitive((1, 0, 0))
    assert is_primitive((-1, -2, -3))
    assert not is_primitive((2, 4, 6))
    assert not is_primitive((0, 0, 0))
    assert not is_primitive(())


def test_matrix_validation():
    with pytest.raises(ValueError):
        matrix(((1, 2), (3,)))
    with pytest.raises(ValueError):
        matrix(((1, 2.5),))
    assert is_unimodular(((1, 1), (0, 1)))
    assert not is_unimodular(((2, 0), (0, 1)))
    assert not is_unimodular(((1, 0, 0), (0, 1, 0)))


def test_acceptance_style_bulk_roundtrip():
    rng = random.Random(20260808)
    for _ in range(100):
        m = random_matrix(rng)
        h, u = hermite_normal_form(m)
        assert mat_mul(u, m) == h and det(u) in (1, -1) and is_row_hnf(h)
        _check_snf(m)
