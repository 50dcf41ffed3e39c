"""Curve-level invariants, the quasihomogeneity decision and the mu = nu + 1 families.

Invariant reports combine the Groebner lengths (mu(f;A), nu, mu(f)), the
semigroup at infinity and, for parametric input, the Taylor resultant and
the differential value sets.  Every quantity that can be computed in two
independent ways is cross-checked; a disagreement raises InvariantViolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .algebra import univariate as up
from .algebra.fields import QQ, NumberField
from .algebra.polynomial import Polynomial
from .algebra.resultant import resultant
from .automorphism import Automorphism, Move
from .diffvals import (
    INFINITE,
    ParametricCurve,
    basic_differential,
    check_proper,
    differential_value_data,
    implicitize,
)
from .errors import InvariantViolation, MultiplePlacesError, PreconditionError
from .groebner import milnor_on_curve, milnor_pencil, tjurina_total
from .puiseux import check_no_pure_power_terms, expansion, verify_one_place
from .semigroup import characteristic_data, semigroup_conductor, theta

S1, S2, S3 = "S1", "S2", "S3"
NOT_APPLICABLE = "none"


class _NotQH:
    def __repr__(self):
        return "NOT_QH"

    def __bool__(self):
        return False


NOT_QH = _NotQH()


def _check(name, left, right):
    if left != right:
        raise InvariantViolation(name, left, right)


# ---------------------------------------------------------------------------
# Taylor resultant


def divided_difference(coeffs, variables=("s", "t"), field=QQ) -> Polynomial:
    """(u(t) - u(s)) / (t - s) as a polynomial in s and t."""
    terms = {}
    for k, a in enumerate(coeffs):
        for i in range(k):
            key = (k - 1 - i, i)
            terms[key] = terms.get(key, 0) + a
    return Polynomial(terms, variables, field)


def tres(c: ParametricCurve) -> Polynomial:
    """Res_s of the divided differences of x and y, made monic in t."""
    check_proper(c)
    t = c.variable
    s = "s" if t != "s" else "u"
    ring = (s, t)
    du = divided_difference(c.x, ring, c.field)
    dv = divided_difference(c.y, ring, c.field)
    if du.is_zero() or dv.is_zero():
        raise PreconditionError("non-reduced parametrization: a coordinate is constant")
    if du.degree(s) == 0 and dv.degree(s) == 0:
        return Polynomial.constant(1, (t,), c.field)
    res = resultant(du, dv, s).drop((t,))
    if res.is_zero():
        raise PreconditionError("non-reduced parametrization: the Taylor resultant vanishes")
    return res / res.leading_coefficient(t).constant_term()


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class InvariantReport:
    kind: str
    n: int
    m: int
    mu_pencil: int
    mu_curve: int
    nu: int
    delta: int
    C_gamma: int
    theta: int
    h: int
    r: tuple
    qh: bool
    situation: str
    chi_plus_2g: int
    C_f: int | None = None
    chi_bar: int | None = None
    P_g: int | None = None
    Z: int | None = None
    inexact_count: int | None = None
    gap: object = None

    def to_json(self):
        out = {
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "mu_pencil": self.mu_pencil,
            "mu_curve": self.mu_curve,
            "nu": self.nu,
            "delta": self.delta,
            "C_gamma": self.C_gamma,
            "theta": self.theta,
            "h": self.h,
            "r": list(self.r),
            "qh": self.qh,
            "situation": self.situation,
            "chi_plus_2g": self.chi_plus_2g,
        }
        if self.kind == "parametric":
            out.update(
                C_f=self.C_f,
                chi_bar=self.chi_bar,
                P_g=self.P_g,
                Z=self.Z,
                inexact_count=self.inexact_count,
                gap="infinite" if self.gap is INFINITE else self.gap,
            )
        return out


def oriented_equation(curve):
    """(g, sigma): g monic in Y with constant leading coefficient, g = sigma(f) up to a constant.

    sigma is empty or a single swap; the swap is used when f has no Y or when
    only its leading coefficient in X is constant.
    """
    if isinstance(curve, ParametricCurve):
        return implicitize(curve), Automorphism()
    f = curve
    if len(f.variables) != 2:
        raise PreconditionError("expected a polynomial in two variables")
    xv, yv = f.variables
    if f.is_constant():
        raise PreconditionError("expected a non-constant polynomial")
    sigma = Automorphism()
    if f.degree(yv) == 0 or (
        not f.leading_coefficient(yv).is_constant() and f.leading_coefficient(xv).is_constant()
    ):
        sigma = Automorphism((Move("swap"),))
        f = sigma.apply(f)
    if not f.leading_coefficient(yv).is_constant():
        raise MultiplePlacesError(f"leading coefficient in {yv} is not constant")
    return f.monic_in(yv), sigma


def implicit_equation(curve) -> Polynomial:
    """Monic-in-Y implicit equation of a curve given either way."""
    return oriented_equation(curve)[0]


def invariant_report(curve, truncation=None) -> InvariantReport:
    parametric = isinstance(curve, ParametricCurve)
    f = implicit_equation(curve)
    xv, yv = f.variables
    exp = expansion(f, truncation)  # verifies one place at infinity
    if not check_no_pure_power_terms(exp):
        raise InvariantViolation("no pure power terms in the expansion", exp.exponents(), "none of the form n*s")
    mu_pencil = milnor_pencil(f)
    nu = tjurina_total(f)
    mu_curve = milnor_on_curve(f, mu_pencil)
    delta = mu_curve - nu
    if delta < 0:
        raise InvariantViolation("defect is non-negative", delta, ">= 0")
    cd = characteristic_data(f, truncation=truncation)
    c_gamma = semigroup_conductor(cd)
    _check("global Milnor number equals minus the semigroup conductor", mu_pencil, -c_gamma)
    qh = mu_pencil == nu
    fields = dict(
        kind="parametric" if parametric else "implicit",
        n=f.degree(yv),
        m=f.degree(xv),
        mu_pencil=mu_pencil,
        mu_curve=mu_curve,
        nu=nu,
        delta=delta,
        C_gamma=c_gamma,
        theta=theta(cd),
        h=cd.h,
        r=cd.r,
        qh=qh,
        situation=_situation(f, mu_pencil, nu),
        chi_plus_2g=mu_pencil - mu_curve,
    )
    if parametric:
        c_f = tres(curve).degree()
        chi_bar = c_f - mu_curve
        _check("mu(f;A) = nu + delta + chi_bar (P_g = 0)", mu_pencil, nu + delta + chi_bar)
        dv = differential_value_data(curve)
        _check("Z = nu - C/2", dv.Z * 2, 2 * nu - c_f)
        _check("inexact = C/2 - Z", dv.inexact_count * 2, c_f - 2 * dv.Z)
        _check("inexact = delta + chi_bar", dv.inexact_count, delta + chi_bar)
        gap = basic_differential(curve).gap if curve.n >= 1 and curve.m >= 1 else INFINITE
        fields.update(C_f=c_f, chi_bar=chi_bar, P_g=0, Z=dv.Z, inexact_count=dv.inexact_count, gap=gap)
        if qh:
            _check("quasihomogeneous curves are unibranch", chi_bar, 0)
    if qh:
        _check("quasihomogeneous curves have zero defect", delta, 0)
    return InvariantReport(**fields)


def reduced_one_place(curve):
    """(f, g, sigma): f the oriented equation, g = sigma(f) after degree reduction.

    The one-place check runs on g, which is cheaper and equivalent because
    automorphisms preserve the places at infinity; mu(f;A) and nu(f) are
    likewise automorphism invariant and may be computed on g.
    """
    f, sigma = oriented_equation(curve)
    g, reduction = reduce_degrees(f)
    verify_one_place(g)
    return f, g, sigma.then(reduction)


def is_quasihomogeneous(curve) -> bool:
    _, g, _ = reduced_one_place(curve)
    return milnor_pencil(g) == tjurina_total(g)


# ---------------------------------------------------------------------------
# automorphism synthesis


@dataclass(frozen=True)
class Synthesis:
    automorphism: Automorphism
    a: int
    b: int
    normal_form: Polynomial
    constant: object

    def to_json(self, field):
        return {
            "normal_form": {"a": self.a, "b": self.b},
            "automorphism": self.automorphism.to_json(field),
            "image": str(self.normal_form),
        }


def _top_form(f, n, m):
    """Terms of weighted degree n*m for weights (n, m) on (X, Y)."""
    top = {}
    for (i, j), c in f.terms.items():
        w = n * i + m * j
        if w > n * m:
            raise MultiplePlacesError("Newton polygon at infinity has more than one edge")
        if w == n * m:
            top[(i, j)] = c
    return top


def _principal_constant(f, n, m):
    """c with top form (Y^(n/d) - c X^(m/d))^d, checked term by term."""
    d = gcd(n, m)
    n1, m1 = n // d, m // d
    top = _top_form(f, n, m)
    # coefficient of X^m1 Y^(n - n1) is -d*c
    c = -top.get((m1, n - n1), f.field.zero) / d
    if c == 0:
        raise MultiplePlacesError("leading form is not a power of a binomial")
    # every term of weighted degree n*m has the shape X^(m1 k) Y^(n1 (d-k))
    for k in range(d + 1):
        expected = comb(d, k) * (-c) ** k
        if top.get((m1 * k, n1 * (d - k)), f.field.zero) != expected:
            raise MultiplePlacesError("leading form is not a power of a binomial")
    return c


def _monic_step(f):
    """Normalize f monic in Y, swapping the variables when Y is absent."""
    xv, yv = f.variables
    moves = []
    if f.degree(yv) == 0:
        moves.append(Move("swap"))
        f = Automorphism(tuple(moves)).apply(f)
    lc = f.leading_coefficient(yv)
    if not lc.is_constant():
        raise MultiplePlacesError(f"leading coefficient in {yv} is not constant")
    return f.monic_in(yv), moves


def reduce_degrees(f: Polynomial):
    """Principal moves until deg_Y, deg_X is a non-principal pair or f is a line.

    Returns (g, automorphism) with g = automorphism.apply(f) up to a constant,
    g monic in Y.
    """
    xv, yv = f.variables
    auto = Automorphism()
    f, moves = _monic_step(f)
    auto = auto.then(Automorphism(tuple(moves)))
    for _ in range(f.degree() * 4 + 4):
        n, m = f.degree(yv), f.degree(xv)
        if n == 1 or m == 0:
            return f, auto
        if n % m != 0 and m % n != 0:
            return f, auto
        if m % n == 0:
            c = _principal_constant(f, n, m)
            move = Move("Y", 1, tuple([0] * (m // n) + [c]))
        else:
            move = Move("swap")
        step = Automorphism((move,))
        f = step.apply(f)
        auto = auto.then(step)
        f, moves = _monic_step(f)
        auto = auto.then(Automorphism(tuple(moves)))
    raise InvariantViolation("degree reduction terminates", "iteration bound", "exceeded")


def _tschirnhaus(f, target):
    """Move killing the subleading coefficient in ``target`` (a variable name), or None."""
    k = f.degree(target)
    coeffs = f.coefficients_in(target)
    sub = coeffs.get(k - 1)
    if k < 1 or sub is None or sub.is_zero():
        return None
    lead = coeffs[k]
    if not lead.is_constant():
        return None
    other = [v for v in f.variables if v != target][0]
    shift = (sub / (k * lead.constant_term())).to_univariate(other)
    kind = "Y" if target == f.variables[1] else "X"
    return Move(kind, 1, tuple(-c for c in shift))


def synthesize_automorphism(curve):
    """An automorphism carrying f to a constant times Y^b - X^a, or NOT_QH."""
    f, g, auto = reduced_one_place(curve)
    if milnor_pencil(g) != tjurina_total(g):
        return NOT_QH
    xv, yv = f.variables
    n, m = g.degree(yv), g.degree(xv)
    if n == 1:
        p = (g - Polynomial.var(yv, g.variables, g.field)).to_univariate(xv)  # g = Y + p(X)
        auto = auto.then(Move("Y", 1, tuple(-c for c in p)))
        a, b = 1, 0
    else:
        order = (yv, xv) if n < m else (xv, yv)
        for _ in range(2 * (n + m) + 4):
            progressed = False
            for target in order:
                mv = _tschirnhaus(g, target)
                if mv is not None:
                    step = Automorphism((mv,))
                    g = step.apply(g)
                    auto = auto.then(step)
                    progressed = True
            if not progressed:
                break
        else:
            raise InvariantViolation("Tschirnhaus reduction terminates", "iteration bound", "exceeded")
        kappa = g.coefficient((0, n))
        lam = -g.coefficient((m, 0)) / kappa
        expected = (Polynomial.var(yv, g.variables, g.field) ** n - Polynomial.var(xv, g.variables, g.field) ** m * lam) * kappa
        if g != expected or gcd(n, m) != 1:
            raise InvariantViolation("quasihomogeneous curve reduces to a binomial", str(g), f"k*(Y^{n} - c*X^{m})")
        u, v = _bezout(n, m)  # u*n - v*m = 1
        moves = []
        if lam != 1:
            moves = [Move("X", lam**v, ()), Move("Y", lam**u, ())]
        auto = auto.then(Automorphism(tuple(moves)))
        a, b = m, n
    source = curve if isinstance(curve, Polynomial) else f
    image = auto.apply(source)
    X = Polynomial.var(xv, f.variables, f.field)
    Y = Polynomial.var(yv, f.variables, f.field)
    target = Y if (a, b) == (1, 0) else Y**b - X**a
    lead = image.coefficient((0, 1) if (a, b) == (1, 0) else (0, b))
    if lead == 0 or image != target * lead:
        raise InvariantViolation("synthesized automorphism maps f to the normal form", str(image), str(target))
    return Synthesis(auto, a, b, target, lead)


def _bezout(n, m):
    """(u, v) with u*n - v*m = 1 for coprime n, m."""
    u = pow(n, -1, m) if m > 1 else 1
    v = (u * n - 1) // m
    return u, v


# ---------------------------------------------------------------------------
# the mu(f;A) = nu(f) + 1 classification


def _situation(f, mu_pencil, nu):
    if mu_pencil != nu + 1:
        return NOT_APPLICABLE
    g, _ = reduce_degrees(f)
    xv, yv = g.variables
    n, m = g.degree(yv), g.degree(xv)
    h = characteristic_data(g).h
    if h != 1:
        raise InvariantViolation("mu = nu + 1 curves have h = 1", h, 1)
    small, large = sorted((n, m))
    if small == 2 and large % 2 == 1:
        return S1
    if (small, large) == (3, 4):
        return S2
    if (small, large) == (3, 5):
        return S3
    raise InvariantViolation("mu = nu + 1 degree pair is one of the three situations", (small, large), "(2,2p+1),(3,4),(3,5)")


def classify_mu_nu_gap_one(curve) -> str:
    _, g, _ = reduced_one_place(curve)
    return _situation(g, milnor_pencil(g), tjurina_total(g))


# ---------------------------------------------------------------------------
# family generators

S2_CUSPIDAL = (0, -8, -9)
S3_PAIRS = (
    (-15, 0),
    (-3, 0),
    (Fraction(-5, 2), 0),
    (Fraction(-3, 2), 0),
    (-3, 4),
    (-6, 27),
    (-7, 36),
    (Fraction(-15, 2), 40),
)


def _param(x, y, field=QQ):
    return ParametricCurve(tuple(x), tuple(y), field)


def family_generator(situation: str, **params):
    """Curves of the explicit mu = nu + 1 families.

    S1: ``g`` a univariate coefficient list (in Y) of odd degree 2p+1 >= 3,
        monic with exactly two distinct rational roots; returns g(Y) - X^2.
    S2: ``a`` in {0, -8, -9} for (t^4 + a t^2, t^3 - 3t^2), or ``a=-1`` with
        ``b`` != +-1 for ((t^2-1)(t^2+a), (t^2-1)(t+b)).
    S3: ``(a, b)`` one of the eight listed pairs for (t^5 + a t^4 + b t^2, t^3 - 3t^2);
        ``variant="cuspidal"`` with b = 0, a != 0 for (t^5 + a t^4, t^3);
        ``variant="sqrt2"`` with ``sign`` = +-1 for the nodal pair over Q(sqrt 2).
    """
    if situation == S1:
        g = [Fraction(c) for c in params["g"]]
        g = up.strip(g)
        deg = up.degree(g)
        if deg < 3 or deg % 2 == 0 or g[-1] != 1:
            raise PreconditionError("S1 needs a monic g of odd degree 2p+1 >= 3")
        core = up.monic(up.divmod_(g, up.gcd(g, up.derivative(g)))[0])
        if up.degree(core) != 2 or len(up.rational_roots(core)) != 2:
            raise PreconditionError("S1 needs g with exactly two distinct linear factors")
        X = Polynomial.var("X", ("X", "Y"))
        G = Polynomial({(0, k): c for k, c in enumerate(g)}, ("X", "Y"))
        return G - X**2
    if situation == S2:
        a = Fraction(params["a"])
        if "b" not in params:
            if a not in S2_CUSPIDAL:
                raise PreconditionError(f"S2 cuspidal parameter must be one of {S2_CUSPIDAL}")
            return _param([0, 0, a, 0, 1], [0, 0, -3, 1])
        b = Fraction(params["b"])
        if a != -1 or b in (1, -1):
            raise PreconditionError("S2 nodal family needs a = -1 and b != +-1")
        tm1 = [-1, 0, 1]
        return _param(up.mul(tm1, [a, 0, 1]), up.mul(tm1, [b, 1]))
    if situation == S3:
        variant = params.get("variant", "listed")
        if variant == "listed":
            a, b = Fraction(params["a"]), Fraction(params["b"])
            if (a, b) not in {(Fraction(p), Fraction(q)) for p, q in S3_PAIRS}:
                raise PreconditionError("S3 parameters must be one of the eight listed pairs")
            return _param([0, 0, b, 0, a, 1], [0, 0, -3, 1])
        if variant == "cuspidal":
            a = Fraction(params["a"])
            if a == 0 or Fraction(params.get("b", 0)) != 0:
                raise PreconditionError("cuspidal S3 variant needs b = 0 and a != 0")
            return _param([0, 0, 0, 0, a, 1], [0, 0, 0, 1])
        if variant == "sqrt2":
            sign = params.get("sign", 1)
            if sign not in (1, -1):
                raise PreconditionError("sign must be +1 or -1")
            K = NumberField([-2, 0, 1])
            r2 = K.generator() * sign
            tm1 = [K.coerce(-1), K.zero, K.one]
            x = up.mul(tm1, [K.one, K.zero, r2, K.one])
            y = up.mul(tm1, [K.one + r2, K.one])
            return _param(x, y, K)
        raise PreconditionError(f"unknown S3 variant {variant!r}")
    raise PreconditionError(f"unknown situation {situation!r}")
