"""Elementary automorphisms: inverses, composition and the action on curves."""

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import P, T
from oneplace.algebra import Polynomial
from oneplace.automorphism import Automorphism, Move
from strategies import automorphisms, bivariate_terms, moves

X, Y = P("X"), P("Y")


def test_move_examples():
    assert Automorphism((Move("Y", 1, (0, 0, 1)),)).apply(P("Y - X^2")) == Y
    assert Automorphism((Move("swap"),)).apply(P("Y^2 - X^3")) == P("X^2 - Y^3")
    assert Automorphism((Move("X", 2, (1,)),)).apply(X) == P("2*X + 1")


def test_move_inverse_has_exact_coefficients():
    inv = Move("X", 3, (1,)).inverse()
    assert inv.scale == Fraction(1, 3) and inv.shift == (Fraction(-1, 3),)


def test_describe():
    assert Move("Y", 1, (0, 1)).describe() == "Y <- Y + (X)"
    assert Move("swap").describe() == "swap(X,Y)"


@given(automorphisms())
def test_inverse_round_trip(sigma):
    for f in (X, Y, P("X^2*Y - 3*Y + 1")):
        assert sigma.inverse().apply(sigma.apply(f)) == f
        assert sigma.apply(sigma.inverse().apply(f)) == f


@given(automorphisms(max_moves=2), automorphisms(max_moves=2), bivariate_terms(max_degree=3, max_terms=4))
def test_apply_is_sequential(a, b, terms):
    f = Polynomial(terms, ("X", "Y"))
    assert a.then(b).apply(f) == b.apply(a.apply(f))


@given(moves())
def test_move_preserves_jacobian_up_to_constant(mv):
    X1, Y1 = Automorphism((mv,)).apply(X), Automorphism((mv,)).apply(Y)
    jac = X1.diff("X") * Y1.diff("Y") - X1.diff("Y") * Y1.diff("X")
    assert jac.is_constant() and not jac.is_zero()


@given(automorphisms(max_moves=3, max_shift_degree=2), st.sampled_from(["cusp", "node", "line"]))
def test_curve_action_matches_polynomial_action(sigma, name):
    f, x, y = {
        "cusp": (P("Y^2 - X^3"), T("t^2"), T("t^3")),
        "node": (P("Y^2 - X^3 - X^2"), T("t^2 - 1"), T("t^3 - t")),
        "line": (P("Y - 2*X"), T("t"), T("2*t")),
    }[name]
    x1, y1 = sigma.apply_to_curve(x, y)
    g = sigma.apply(f)
    assert g.subs({"X": x1, "Y": y1}, variables=("t",)).is_zero()
