"""Newton-Puiseux expansion at infinity and valuations."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from oneplace.algebra import LaurentSeries, NumberField, Polynomial, parse_polynomial
from oneplace.curves import implicit_equation
from oneplace.diffvals import value
from oneplace.errors import (
    FieldObstructionError,
    InsufficientTruncationError,
    MultiplePlacesError,
    PreconditionError,
)
from oneplace.puiseux import (
    NPExpansion,
    check_no_pure_power_terms,
    expand_at_infinity,
    expansion,
    valuation,
    verify_one_place,
)
from strategies import automorphisms, bivariate_terms, coprime_pairs, parametric_curves

H2 = "(Y^2 - X^3)^2 - X^4*Y"


def eta_terms(exp):
    return {k: exp.eta.coefficient(k) for k in exp.exponents()}


def test_cusp_expansion_is_exact():
    exp = expansion(P("Y^3 - X^2"))
    assert (exp.n, exp.m) == (3, 2)
    assert eta_terms(exp) == {-2: 1}
    assert exp.residual().is_zero()


def test_two_pair_expansion():
    exp = expansion(P(H2))
    assert (exp.n, exp.m) == (4, 6)
    assert exp.exponents()[:2] == [-6, -5]
    assert exp.eta.coefficient(-5) == Fraction(1, 2)
    assert exp.residual().is_zero()


def test_principal_pair_expansion():
    assert eta_terms(expansion(P("(Y + X^2)^3 - X^2"))) == {-6: -1, -2: 1}


def test_lower_order_exponents():
    assert eta_terms(expansion(P("(Y - X^2)^2 - X"))) == {-4: 1, -1: 1}


@pytest.mark.parametrize("f", ["Y^2 - X^2", "(Y^2 - X^3)^2 - X^5*Y", "Y^2 - X^4 - X", "X*Y - 1"])
def test_multiple_places(f):
    with pytest.raises(MultiplePlacesError, match="multiple places at infinity"):
        expansion(P(f))
    with pytest.raises(MultiplePlacesError):
        verify_one_place(P(f))


def test_separation_stops_at_the_last_characteristic_term():
    exp = verify_one_place(P(H2))
    assert exp.exponents() == [-6, -5] and exp.truncation == -4
    full = expansion(P(H2))
    assert all(full.eta.coefficient(k) == exp.eta.coefficient(k) for k in range(-6, exp.truncation))


def test_field_obstruction_with_pinned_x_coefficient():
    with pytest.raises(FieldObstructionError, match="coefficient outside working field"):
        expand_at_infinity(P("2*Y^3 - 5*X^2"), x_coeff=1)


@pytest.mark.parametrize(
    "f, c",
    [
        ("Y^6 + X^5", -1),
        ("2*Y^3 - 5*X^2", Fraction(5, 2)),
        ("(Y^2 - X^3)^2 - 2*X^4*Y", Fraction(1, 4)),
    ],
)
def test_x_coefficient_is_rescaled_to_stay_rational(f, c):
    exp = expansion(P(f))
    assert exp.x_coeff == c
    assert exp.residual().is_zero()


def test_extension_removes_obstruction():
    K = NumberField([-2, 0, 1])
    exp = expansion(parse_polynomial("Y^2 - 2*X^3", ("X", "Y"), K))
    z = K.generator()
    assert exp.eta.leading_coefficient() in (z, -z)


def test_reducible_square_needs_more_than_any_truncation():
    with pytest.raises(InsufficientTruncationError):
        expand_at_infinity(P("(Y^2 - X^3)^2"), truncation=20)


def test_pure_power_check():
    assert check_no_pure_power_terms(expansion(P("Y^3 - X^2")))
    synthetic = NPExpansion(3, 2, LaurentSeries({-2: 1, 3: 1}, 10), 10, P("Y^3 - X^2"))
    assert not check_no_pure_power_terms(synthetic)


def test_valuation_examples():
    cusp = P("Y^3 - X^2")
    assert valuation(cusp, P("X")) == -3
    assert valuation(cusp, P("Y")) == -2
    assert valuation(P(H2), P("Y^2 - X^3")) == -11


def test_valuation_of_multiple_of_f_fails():
    with pytest.raises(InsufficientTruncationError):
        valuation(P("Y^3 - X^2"), P("X*(Y^3 - X^2)"))


# ---------------------------------------------------------------------------
# properties


@given(coprime_pairs, automorphisms(max_moves=2, max_shift_degree=2))
def test_automorphic_images_have_one_place(pair, auto):
    a, b = pair
    f = auto.apply(P(f"Y^{b} - X^{a}"))
    g = implicit_equation(f)
    exp = expansion(g)
    assert exp.residual().is_zero()
    assert exp.exponents()[0] == -exp.m
    assert check_no_pure_power_terms(exp)


@given(parametric_curves(max_degree=4))
def test_valuation_matches_parameter_degree(c):
    f = implicit_equation(c)
    exp = expansion(f)
    assert check_no_pure_power_terms(exp)
    for h in (P("X"), P("Y"), P("X*Y - Y^2 + 3"), P("Y^2 + X^3 - X")):
        try:
            v = value(c, h)
        except PreconditionError:  # h vanishes on the curve
            continue
        assert valuation(f, h) == v


@given(bivariate_terms(max_degree=2, max_terms=3), bivariate_terms(max_degree=2, max_terms=3))
def test_products_never_expand(a, b):
    f, g = Polynomial(a, ("X", "Y")), Polynomial(b, ("X", "Y"))
    if f.degree("Y") == 0 or g.degree("Y") == 0:
        return
    with pytest.raises((MultiplePlacesError, InsufficientTruncationError, FieldObstructionError)):
        expansion(f * g)
    with pytest.raises((MultiplePlacesError, InsufficientTruncationError, FieldObstructionError)):
        verify_one_place(f * g)


@given(parametric_curves(max_degree=5, min_degree=2))
def test_separation_only_agrees_with_the_full_expansion(c):
    f = implicit_equation(c)
    short, full = verify_one_place(f), expansion(f)
    assert short.x_coeff == full.x_coeff
    assert all(short.eta.coefficient(k) == full.eta.coefficient(k) for k in range(-full.m, short.truncation))


@given(bivariate_terms(max_degree=3, max_terms=5))
def test_separation_only_raises_exactly_when_expansion_does(terms):
    f = Polynomial(terms, ("X", "Y"))
    if f.degree("Y") == 0 or not f.leading_coefficient("Y").is_constant():
        return
    errors = (MultiplePlacesError, InsufficientTruncationError, FieldObstructionError)
    try:
        expansion(f)
        full_ok = True
    except errors:
        full_ok = False
    try:
        verify_one_place(f)
        short_ok = True
    except errors:
        short_ok = False
    assert full_ok == short_ok


@given(st.integers(2, 6))
def test_truncation_override_only_extends(k):
    f = P("(Y - X^2)^2 - X")
    short = expand_at_infinity(f, truncation=k)
    long = expand_at_infinity(f, truncation=4 * k)
    assert all(long.eta.coefficient(e) == c for e, c in eta_terms(short).items())
