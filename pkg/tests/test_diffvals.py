"""Parametric curves, value sets of functions and differentials, basic differentials."""

from fractions import Fraction

import pytest
from hypothesis import assume, given

from conftest import P, curve
from oneplace.algebra import univariate as up
from oneplace.curves import tres
from oneplace.diffvals import (
    INFINITE,
    ParametricCurve,
    basic_differential,
    differential_degrees,
    differential_value_data,
    function_degrees,
    gap_conditions,
    implicitize,
    map_degree,
    maximize_gap,
    value,
)
from oneplace.errors import ImproperParametrizationError, PreconditionError
from oneplace.groebner import tjurina_total
from strategies import parametric_curves


def echelon_degrees(polys):
    """Degrees reachable by k-linear combinations (plain Gaussian elimination)."""
    rows = {}
    for p in polys:
        p = up.strip(list(p))
        while p:
            d = up.degree(p)
            if d not in rows:
                rows[d] = p
                break
            q = rows[d]
            p = up.strip(up.sub(p, up.scale(q, p[-1] / q[-1])))
    return set(rows)


def capped_function_degrees(c, cap):
    x, y = list(c.x), list(c.y)
    mons = []
    for a in range(cap // c.n + 1):
        for b in range(cap // max(c.m, 1) + 1):
            if a * c.n + b * c.m <= cap:
                mons.append(up.mul(up.power(x, a), up.power(y, b)))
    return echelon_degrees(mons)


def capped_differential_degrees(c, cap):
    x, y = list(c.x), list(c.y)
    dx, dy = up.derivative(x), up.derivative(y)
    forms = []
    for a in range(cap // c.n + 1):
        for b in range(cap // max(c.m, 1) + 1):
            if a * c.n + b * c.m <= cap:
                mon = up.mul(up.power(x, a), up.power(y, b))
                forms += [up.mul(mon, dx), up.mul(mon, dy)]
    return echelon_degrees(forms)


# ---------------------------------------------------------------------------
# examples


def test_implicitization_examples():
    assert implicitize(curve("t^2", "t^3")) == P("Y^2 - X^3")
    assert implicitize(curve("t", "t^2")) == P("Y - X^2")
    assert implicitize(curve("t^2 - 1", "t^3 - t")) == P("Y^2 - X^3 - X^2")


def test_value_examples():
    cusp = curve("t^2", "t^3")
    assert value(cusp, P("X")) == -2
    with pytest.raises(PreconditionError, match="vanishes identically"):
        value(cusp, P("Y^2 - X^3"))
    assert value(curve("t^2 - 1", "t^3 - t"), P("Y^2 - X^3")) == -4


def test_improper_parametrization():
    c = curve("t^4", "t^2")
    assert map_degree(c) == 2
    with pytest.raises(ImproperParametrizationError) as info:
        implicitize(c)
    assert info.value.map_degree == 2


def test_cusp_value_data():
    dv = differential_value_data(curve("t^2", "t^3"))
    assert (dv.Z, dv.M, dv.inexact_count) == (1, frozenset({-2}), 0)


def test_node_value_data():
    dv = differential_value_data(curve("t^2 - 1", "t^3 - t"))
    assert (dv.Z, dv.inexact_count) == (0, 1)


def test_nonsingular_value_data():
    dv = differential_value_data(curve("t", "t^2"))
    assert (dv.Z, dv.inexact_count, dv.M) == (0, 0, frozenset())
    assert function_degrees(curve("t", "t^2")).conductor() == 0


def test_three_node_value_data():
    dv = differential_value_data(curve("t^4", "t^3 + t"))
    assert (dv.Z, dv.inexact_count) == (0, 3)


def test_basic_differential_examples():
    b = basic_differential(curve("t^4", "t^3 + t"))
    assert Polynomial_str(b.h) == "8*t^4" and b.gap == 2
    assert basic_differential(curve("t^2", "t^3")).gap is INFINITE
    assert basic_differential(curve("t^4", "t^3 - 3*t^2")).gap == 1


def Polynomial_str(coeffs):
    from oneplace.algebra import Polynomial

    return str(Polynomial.from_univariate(list(coeffs), "t"))


def test_gap_already_maximal():
    c = curve("t^4", "t^3 + t")
    assert gap_conditions(4, 3, 2) == (True, True, True)
    new, auto = maximize_gap(c)
    assert new == c and len(auto) == 0


def test_y_move_kills_multiple_of_n():
    # eta = tau^-5 + tau^-3: the exponent -3 = -1*n asks for Y <- Y - X
    c = curve("t^3", "t^5 + t^3")
    assert basic_differential(c).gap == 2
    new, auto = maximize_gap(c)
    assert new == curve("t^3", "t^5")
    assert basic_differential(new).gap is INFINITE
    assert [m.describe() for m in auto.moves] == ["Y <- Y + (X)"]


def test_x_move_raises_the_gap():
    new, auto = maximize_gap(curve("t^4", "t^3 - 3*t^2"))
    assert auto.moves[0].kind == "X"
    assert basic_differential(new).gap > 1
    assert all(gap_conditions(4, 3, basic_differential(new).gap))


def test_principal_pair_rejected():
    with pytest.raises(PreconditionError):
        maximize_gap(curve("t^2", "t^4 + t"))


# ---------------------------------------------------------------------------
# properties


@given(parametric_curves(max_degree=4, min_degree=2))
def test_degree_sets_match_gaussian_elimination(c):
    R, H = function_degrees(c), differential_degrees(c)
    bound = R.conductor() + 2 * c.n
    cap = bound + 3 * c.n * c.m
    oracle_R = capped_function_degrees(c, cap)
    oracle_H = capped_differential_degrees(c, cap)
    assert {k for k in range(bound) if k in R} == {k for k in oracle_R if k < bound}
    assert {k for k in range(bound) if k in H} == {k for k in oracle_H if k < bound}


@given(parametric_curves(max_degree=4, min_degree=2))
def test_value_set_identities(c):
    dv = differential_value_data(c)
    C = tres(c).degree()
    assert function_degrees(c).conductor() == C
    assert 2 * (dv.Z + dv.inexact_count) == C
    assert 2 * dv.Z == 2 * tjurina_total(implicitize(c)) - C


@given(parametric_curves(max_degree=4, min_degree=2))
def test_maximize_gap_reaches_the_exclusions(c):
    assume(c.n % c.m and c.m % c.n)
    new, auto = maximize_gap(c)
    g = basic_differential(new).gap
    assert g is INFINITE or all(gap_conditions(c.n, c.m, g))
    assert g is INFINITE or g >= basic_differential(c).gap
    f_old, f_new = implicitize(c), implicitize(new)
    image = auto.apply(f_old)
    assert image == f_new * image.coefficient((0, c.n))


def test_swapped_and_transformed_round_trip():
    c = curve("t^3 + t", "t^2 - 2*t")
    assert c.swapped().swapped() == c
    assert ParametricCurve(c.x, c.y) == c
    assert c.x[0] == Fraction(0)
