"""Polynomial curves: implicitization, value sets of functions and differentials, gaps.

For a proper parametrization t -> (x(t), y(t)) with n = deg x, the ring
R = k[x, y] is a free k[x]-module of rank n inside k[t], and so is the module
H = R x' + R y' of coefficients h of the differentials h dt in Omega(R).
Reducing generators against each other by multiples of powers of x(t) until
their degrees are pairwise distinct modulo n (a weak Popov form for the
degree shift) exposes every attainable degree: a combination of the reduced
generators cannot cancel leading terms.  Each module's degree set is then a
union of n residue classes, each starting at the degree of its generator.

Values at infinity are v(a(t)) = -deg a and v(h dt) = -deg h - 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import univariate as up
from .algebra.fields import QQ
from .algebra.polynomial import Polynomial
from .algebra.resultant import resultant
from .automorphism import Automorphism, Move
from .errors import (
    ImproperParametrizationError,
    InvariantViolation,
    PreconditionError,
)

INFINITE = float("inf")


@dataclass(frozen=True)
class ParametricCurve:
    """t -> (x(t), y(t)) given by dense coefficient tuples, lowest degree first."""

    x: tuple
    y: tuple
    field: object = QQ
    variable: str = "t"

    def __post_init__(self):
        x = tuple(up.strip([self.field.coerce(c) for c in self.x]))
        y = tuple(up.strip([self.field.coerce(c) for c in self.y]))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if len(x) <= 1 and len(y) <= 1:
            raise PreconditionError("both coordinate functions are constant")

    @classmethod
    def from_polynomials(cls, x: Polynomial, y: Polynomial) -> ParametricCurve:
        if x.variables != y.variables or len(x.variables) != 1:
            raise PreconditionError("a parametrization needs two polynomials in one common variable")
        return cls(tuple(x.to_univariate()), tuple(y.to_univariate()), x.field, x.variables[0])

    @property
    def n(self) -> int:
        return up.degree(list(self.x))

    @property
    def m(self) -> int:
        return up.degree(list(self.y))

    def x_poly(self) -> Polynomial:
        return Polynomial.from_univariate(list(self.x), self.variable, self.field)

    def y_poly(self) -> Polynomial:
        return Polynomial.from_univariate(list(self.y), self.variable, self.field)

    def swapped(self) -> ParametricCurve:
        return ParametricCurve(self.y, self.x, self.field, self.variable)

    def transformed(self, auto: Automorphism) -> ParametricCurve:
        x, y = auto.apply_to_curve(self.x_poly(), self.y_poly())
        return ParametricCurve.from_polynomials(x, y)

    def to_json(self):
        return {"x": str(self.x_poly()), "y": str(self.y_poly())}


def map_degree(c: ParametricCurve) -> int:
    """Number of parameter values over a generic point of the image."""
    x, y = list(c.x), list(c.y)
    n, m = c.n, c.m
    if n <= 0 or m <= 0:
        return max(n, m)
    # a value t0 is special only over singular points; there are at most (n-1)(m-1) of them
    best = None
    for t0 in range((n - 1) * (m - 1) + 2):
        gx = up.sub(x, [up.evaluate(x, t0)])
        gy = up.sub(y, [up.evaluate(y, t0)])
        k = up.degree(up.gcd(gx, gy))
        best = k if best is None else min(best, k)
        if best == 1:
            break
    return best


def check_proper(c: ParametricCurve):
    k = map_degree(c)
    if k != 1:
        raise ImproperParametrizationError(k)


def implicitize(c: ParametricCurve, variables=("X", "Y")) -> Polynomial:
    """The irreducible f with f(x(t), y(t)) = 0, monic in the second variable."""
    check_proper(c)
    xv, yv = variables
    field = c.field
    if c.n <= 0:
        return Polynomial.var(xv, variables, field) - c.x[0] if c.x else Polynomial.var(xv, variables, field)
    if c.m <= 0:
        y0 = c.y[0] if c.y else field.zero
        return Polynomial.var(yv, variables, field) - y0
    ring = (c.variable, xv, yv)
    t = c.variable
    xt = Polynomial.from_univariate(list(c.x), t, field).embed(ring)
    yt = Polynomial.from_univariate(list(c.y), t, field).embed(ring)
    X = Polynomial.var(xv, ring, field)
    Y = Polynomial.var(yv, ring, field)
    res = resultant(xt - X, yt - Y, t).drop(variables)
    if res.degree(yv) != c.n:
        raise InvariantViolation("deg_Y of the implicit equation", res.degree(yv), c.n)
    return res.monic_in(yv)


def evaluate_on(c: ParametricCurve, h: Polynomial) -> list:
    """h(x(t), y(t)) as a dense coefficient list."""
    out = []
    xs, ys = list(c.x), list(c.y)
    xpow, ypow = {0: [c.field.one]}, {0: [c.field.one]}

    def pw(cache, base, k):
        if k not in cache:
            cache[k] = up.mul(pw(cache, base, k - 1), base)
        return cache[k]

    for (i, j), coeff in h.terms.items():
        term = up.scale(up.mul(pw(xpow, xs, i), pw(ypow, ys, j)), coeff)
        out = up.add(out, term)
    return up.strip(out)


def value(c: ParametricCurve, h: Polynomial) -> int:
    """v(h) = -deg_t h(x(t), y(t))."""
    p = evaluate_on(c, h)
    if not p:
        raise PreconditionError("h vanishes identically on the curve")
    return -up.degree(p)


# ---------------------------------------------------------------------------
# value sets


def reduced_degrees(gens, xt):
    """Residue class -> least degree in the k[x]-module spanned by ``gens``."""
    n = up.degree(xt)
    if n < 1:
        raise PreconditionError("x(t) must be non-constant")
    lcx = xt[-1]
    xpow = [[lcx / lcx]]
    slots = {}
    pending = [up.strip(list(g)) for g in gens]
    while pending:
        p = pending.pop()
        while p:
            d = up.degree(p)
            q = slots.get(d % n)
            if q is None:
                slots[d % n] = p
                break
            if up.degree(q) > d:
                slots[d % n], p = p, q
                continue
            k = (d - up.degree(q)) // n
            while len(xpow) <= k:
                xpow.append(up.mul(xpow[-1], xt))
            factor = p[-1] / (q[-1] * lcx**k)
            p = up.strip(up.sub(p, up.scale(up.mul(xpow[k], q), factor)))
    return {r: up.degree(q) for r, q in slots.items()}


@dataclass(frozen=True)
class DegreeSet:
    """Union of residue classes r + n*N starting at degree starts[r]."""

    n: int
    starts: dict

    def __contains__(self, k):
        if k < 0:
            return False
        s = self.starts.get(k % self.n)
        return s is not None and k >= s

    def conductor(self):
        """Least c with every k >= c in the set."""
        if len(self.starts) < self.n:
            return INFINITE
        return max(max(self.starts.values()) - self.n + 1, 0)

    def missing(self):
        """The finitely many non-negative integers outside the set."""
        c = self.conductor()
        if c is INFINITE:
            raise PreconditionError("degree set has infinitely many gaps")
        return [k for k in range(c) if k not in self]


@dataclass(frozen=True)
class DifferentialValueData:
    gamma: frozenset
    gamma_star: frozenset
    gamma_prime: frozenset
    M: frozenset
    Z: int
    inexact_count: int
    lower_bound: int
    function_degrees: DegreeSet
    differential_degrees: DegreeSet

    def to_json(self):
        return {
            "Z": self.Z,
            "inexact_count": self.inexact_count,
            "M": sorted(self.M),
            "inexact_values": sorted(self.gamma_star - self.gamma_prime),
            "value_window_lower_bound": self.lower_bound,
        }


def function_degrees(c: ParametricCurve) -> DegreeSet:
    xt, yt = list(c.x), list(c.y)
    n = c.n
    gens = []
    p = [c.field.one]
    for _ in range(n):
        gens.append(p)
        p = up.mul(p, yt)
    return DegreeSet(n, reduced_degrees(gens, xt))


def differential_degrees(c: ParametricCurve) -> DegreeSet:
    xt, yt = list(c.x), list(c.y)
    dx, dy = up.derivative(xt), up.derivative(yt)
    n = c.n
    gens = []
    p = [c.field.one]
    for _ in range(n):
        gens.append(up.mul(p, dx))
        gens.append(up.mul(p, dy))
        p = up.mul(p, yt)
    return DegreeSet(n, reduced_degrees(gens, xt))


def differential_value_data(c: ParametricCurve) -> DifferentialValueData:
    check_proper(c)
    if c.n < 1:
        c = c.swapped()
    R = function_degrees(c)
    H = differential_degrees(c)
    cond = R.conductor()
    lower = -cond - 2
    gamma = frozenset(-d for d in range(cond + 3) if d in R)
    gamma_star = frozenset(-k - 2 for k in range(cond + 1) if k in H)
    gamma_prime = frozenset(-d - 1 for d in range(1, cond + 2) if d in R)
    if not gamma_prime <= gamma_star:
        raise InvariantViolation("exact values lie among differential values", sorted(gamma_prime - gamma_star), [])
    M = frozenset(-k - 2 for k in range(cond + 1) if k not in H)
    inexact = gamma_star - gamma_prime
    return DifferentialValueData(gamma, gamma_star, gamma_prime, M, len(M), len(inexact), lower, R, H)


# ---------------------------------------------------------------------------
# basic differentials and gaps


@dataclass(frozen=True)
class BasicDifferential:
    """beta(x, y; v) = v(x) x dy - v(y) y dx written as h(t) dt."""

    h: tuple
    gap: object  # int or INFINITE
    n: int
    m: int

    def to_json(self, field, variable="t"):
        return {
            "form": str(Polynomial.from_univariate(list(self.h), variable, field)),
            "gap": "infinite" if self.gap is INFINITE else self.gap,
        }


def basic_differential(c: ParametricCurve) -> BasicDifferential:
    n, m = c.n, c.m
    if n < 1 or m < 1:
        raise PreconditionError("basic differentials need non-constant x and y")
    xt, yt = list(c.x), list(c.y)
    h = up.strip(up.sub(up.scale(up.mul(yt, up.derivative(xt)), m), up.scale(up.mul(xt, up.derivative(yt)), n)))
    gap = INFINITE if not h else n + m - 1 - up.degree(h)
    return BasicDifferential(tuple(h), gap, n, m)


def gap_conditions(n: int, m: int, q) -> tuple:
    """The three exclusions: -m+q not in nZ, -n+q not in mZ, n+m-q not in nN + mN."""
    if q is INFINITE:
        return (True, True, True)
    first = (q - m) % n != 0
    second = (q - n) % m != 0
    target = n + m - q
    third = not any(target - a * n >= 0 and (target - a * n) % m == 0 for a in range(target // n + 1)) if target >= 0 else True
    return (first, second, third)


def maximize_gap(c: ParametricCurve):
    """Very elementary moves raising the gap until the three exclusions hold.

    Returns the transformed curve and the automorphism that carries the old
    implicit equation to the new one.
    """
    n, m = c.n, c.m
    if n < 1 or m < 1 or n % m == 0 or m % n == 0:
        raise PreconditionError("degrees form a principal pair; reduce degrees first")
    auto = Automorphism()
    field = c.field
    for _ in range(n * m + 1):
        beta = basic_differential(c)
        q = beta.gap
        if q is INFINITE:
            return c, auto
        first, second, _ = gap_conditions(n, m, q)
        lc_h = beta.h[-1]
        if not first:
            # -m+q = -l n: kill the x^l term of y
            l = (m - q) // n
            u = lc_h / (q * n * c.x[-1] ** (l + 1))
            move = Move("Y", 1, tuple([field.zero] * l + [u]))
        elif not second:
            l = (n - q) // m
            u = -lc_h / (q * m * c.y[-1] ** (l + 1))
            move = Move("X", 1, tuple([field.zero] * l + [u]))
        else:
            return c, auto
        step = Automorphism((move,))
        nc = c.transformed(step)
        if (nc.n, nc.m) != (n, m):
            raise InvariantViolation("degrees preserved by gap moves", (nc.n, nc.m), (n, m))
        new_gap = basic_differential(nc).gap
        if not new_gap > q:
            raise InvariantViolation("gap strictly increases", new_gap, f"> {q}")
        c, auto = nc, auto.then(step)
    raise InvariantViolation("gap maximization iterations", n * m + 1, f"<= {n * m}")
