"""Approximate roots, characteristic data and the semigroup at infinity."""

from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P
from oneplace.curves import implicit_equation
from oneplace.errors import PreconditionError
from oneplace.semigroup import (
    approximate_root,
    characteristic_data,
    enumerate_gaps,
    from_generators,
    is_member,
    is_symmetric,
    represent,
    semigroup_conductor,
    theta,
)
from strategies import automorphisms, coprime_pairs, parametric_curves

H2 = "(Y^2 - X^3)^2 - X^4*Y"


def brute_members(r, lower):
    """All sums of non-negative multiples of the r_i lying in [lower, 0]."""
    reach = {0}
    frontier = [0]
    while frontier:
        w = frontier.pop()
        for g in r:
            v = w + g
            if v >= lower and v not in reach:
                reach.add(v)
                frontier.append(v)
    return reach


@st.composite
def two_pair_generators(draw):
    """(r0, r1, r2) with gcd chain p*n2, n2, 1, n2*r2 in <r0, r1> and |r2| < p*|r1|."""
    n2 = draw(st.integers(2, 3))
    p = draw(st.integers(2, 3))
    q = draw(st.integers(1, 4).filter(lambda q: gcd(p, q) == 1 and q != p))
    r1 = -q * n2
    r2 = -draw(st.integers(1, p * q * n2 - 1))
    assume(gcd(r2, n2) == 1)
    assume(r2 in brute_members((-p, -q), r2))
    return (-p * n2, r1, r2)


# ---------------------------------------------------------------------------
# examples


def test_approximate_roots():
    assert approximate_root(P("(Y^2 - X^3)^2 - X^5*Y"), 2) == P("Y^2 - X^3")
    assert approximate_root(P("Y^3 - X^2"), 3) == P("Y")
    f = P(H2)
    assert approximate_root(f, 1) == f


def test_cusp_data():
    cd = characteristic_data(P("Y^3 - X^2"))
    assert (cd.h, cd.r, cd.d, cd.n_seq) == (1, (-3, -2), (2, 3, 1), (2, 3))
    assert theta(cd) == -1
    assert semigroup_conductor(cd) == -2
    assert enumerate_gaps(cd) == {-1}


def test_two_pair_curve_data():
    cd = characteristic_data(P(H2))
    assert (cd.h, cd.r, cd.d, cd.n_seq) == (2, (-4, -6, -11), (6, 4, 2, 1), (3, 2, 2))
    assert list(cd.roots) == [P("X"), P("Y"), P("Y^2 - X^3")]
    assert theta(cd) == -13
    assert semigroup_conductor(cd) == -14
    assert enumerate_gaps(cd) == {-13, -9, -7, -5, -3, -2, -1}


def test_from_generators_4_6_13():
    cd = from_generators((-4, -6, -13))
    assert (cd.d, cd.n_seq) == ((6, 4, 2, 1), (3, 2, 2))
    assert theta(cd) == -15
    assert semigroup_conductor(cd) == -16
    gaps = enumerate_gaps(cd)
    assert len(gaps) == 8
    assert gaps == set(range(-16, 1)) - brute_members((-4, -6, -13), -16)


def test_implicitized_parametrization_data():
    from conftest import curve

    cd = characteristic_data(implicit_equation(curve("t^4", "t^3 + t")))
    assert (cd.h, cd.r, cd.d, cd.n_seq) == (1, (-4, -3), (3, 4, 1), (3, 4))
    assert theta(cd) == -5
    assert semigroup_conductor(cd) == -6
    assert enumerate_gaps(cd) == {-1, -2, -5}


def test_principal_pair_is_allowed():
    cd = characteristic_data(P("(Y + X^2)^3 - X^2"))
    assert (cd.r, cd.n_seq) == ((-3, -6, -2), (2, 1, 3))
    assert semigroup_conductor(cd) == -2


def test_line_has_trivial_semigroup():
    cd = characteristic_data(P("Y - X^5"))
    assert (cd.h, cd.r) == (0, (-1,))
    assert semigroup_conductor(cd) == 0 and enumerate_gaps(cd) == set()


def test_represent_examples():
    cusp = characteristic_data(P("Y^3 - X^2"))
    assert (represent(cusp, -7).b, represent(cusp, -7).member) == ((1, 2), True)
    assert (represent(cusp, -1).b, represent(cusp, -1).member) == ((-1, 2), False)
    two = characteristic_data(P(H2))
    assert represent(two, 0).b == (0, 0, 0) and represent(two, 0).member


@pytest.mark.parametrize("r", [(), (3, -2), (-4, -6), (-4, -6, -6)])
def test_invalid_generators(r):
    with pytest.raises(PreconditionError):
        from_generators(r)


# ---------------------------------------------------------------------------
# properties


def check_semigroup(cd):
    c = semigroup_conductor(cd)
    t = theta(cd)
    members = brute_members(cd.r, c - 4)
    for w in range(c - 3, 1):
        adm = represent(cd, w)
        assert sum(b * r for b, r in zip(adm.b, cd.r)) == w
        assert all(0 <= b < n for b, n in zip(adm.b[1:], cd.n_seq[1:]))
        assert adm.member == (w in members)
    assert all(w in members for w in range(c - 3, c + 1))
    assert is_symmetric(cd)
    assert t == c + 1
    assert len(enumerate_gaps(cd)) * 2 == -c


@given(coprime_pairs, automorphisms(max_moves=2, max_shift_degree=2))
def test_automorphic_images_have_the_binomial_semigroup(pair, auto):
    a, b = pair
    f = implicit_equation(auto.apply(P(f"Y^{b} - X^{a}")))
    cd = characteristic_data(f)
    check_semigroup(cd)
    assert semigroup_conductor(cd) in (-(a - 1) * (b - 1), 0)


@given(parametric_curves(max_degree=4))
def test_parametric_curves_give_symmetric_semigroups(c):
    check_semigroup(characteristic_data(implicit_equation(c)))


@given(two_pair_generators())
def test_two_pair_generator_tuples(r):
    cd = from_generators(r)
    assert cd.h == 2
    check_semigroup(cd)


@given(st.integers(2, 4), st.integers(1, 3))
def test_approximate_root_degree_bound(d, k):
    f = P(f"(Y^{k} - X)^{d} - X^{d * k - 1}")
    g = approximate_root(f, d)
    assert g.degree("Y") == k
    assert (f - g**d).degree("Y") < d * k - k
    assert not is_member(characteristic_data(P("Y^3 - X^2")), -1)
