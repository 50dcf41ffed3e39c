"""Newton-Puiseux expansion at the place at infinity.

With ``n = deg_Y f`` and ``m = deg_X f`` we put ``x = c tau^-n`` and look for
``y = eta(tau) = tau^-m * (a_0 + a_1 tau + ...)``.  Multiplying through by
``tau^(n m)`` turns ``f(tau^-n, tau^-m Z)`` into a polynomial ``F(tau, Z)``
that is monic of degree n in Z, so the search is for a power-series root of
F.  It proceeds in Newton-polygon stages, one monomial at a time; every stage
checks that the conjugates of the root under ``tau -> zeta*tau`` account for
all roots of F in the current cluster, which is exactly the one-place
condition.

The constant c starts at 1.  When a stage with cluster size d and edge
(Z^k - b)^g asks for a k-th root that is missing from the field, c is
multiplied by mu^(n/d) with mu a power of b.  Replacing c by c*lambda
multiplies the coefficient of tau^E by lambda^(-E/n), so this keeps every
earlier coefficient in the field and turns b into a k-th power (the stage
exponent over g is coprime to k); the expansion then restarts.  The place at
infinity is fixed by Galois, hence rational, and this search finds a
rational uniformizer for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from .algebra.polynomial import Polynomial
from .algebra.series import LaurentSeries, evaluate_polynomial
from .errors import (
    FieldObstructionError,
    InsufficientTruncationError,
    InvariantViolation,
    MultiplePlacesError,
    PreconditionError,
)

MAX_DOUBLINGS = 4


def default_truncation(n, m):
    return 2 * n * m + 2


@dataclass(frozen=True)
class NPExpansion:
    """x = x_coeff * tau^-n, y = eta(tau), with eta known modulo tau^truncation."""

    n: int
    m: int
    eta: LaurentSeries
    truncation: int
    polynomial: Polynomial
    x_coeff: object = 1

    @property
    def x(self) -> LaurentSeries:
        return LaurentSeries.monomial(self.x_coeff, -self.n, self.eta.field)

    def substitute(self, h: Polynomial) -> LaurentSeries:
        xv, yv = h.variables
        return evaluate_polynomial(h, {xv: self.x, yv: self.eta})

    def residual(self) -> LaurentSeries:
        """f(x, eta): vanishes below its propagated precision."""
        return self.substitute(self.polynomial)

    def exponents(self):
        return self.eta.exponents()

    def second_exponent(self):
        """The first exponent of eta after -m, or None when eta = tau^-m exactly."""
        exps = self.exponents()
        return exps[1] if len(exps) > 1 else None

    def to_json(self):
        field = self.eta.field
        return {"n": self.n, "m": self.m, "x_coeff": field.render(field.coerce(self.x_coeff)), "eta": self.eta.to_json()}


def normalize_monic(f: Polynomial) -> Polynomial:
    """f divided by its leading coefficient in the second variable."""
    if len(f.variables) != 2:
        raise PreconditionError("expected a polynomial in two variables")
    yv = f.variables[1]
    if f.degree(yv) < 1:
        raise PreconditionError(f"f does not involve {yv}")
    lc = f.leading_coefficient(yv)
    if not lc.is_constant():
        raise MultiplePlacesError(f"leading coefficient in {yv} is not constant")
    return f.monic_in(yv)


def _scaled_coefficients(f, n, m, N, x_coeff):
    """Coefficients in Z of F(tau, Z) = tau^(nm) f(c tau^-n, tau^-m Z), as dense lists mod tau^N."""
    zero = f.field.zero
    cols = [[zero] * N for _ in range(n + 1)]
    for (i, j), c in f.terms.items():
        w = n * m - n * i - m * j
        if w < 0:
            raise MultiplePlacesError("Newton polygon at infinity has more than one edge")
        if w < N:
            cols[j][w] = cols[j][w] + c * x_coeff**i
    return cols


def _order(col):
    for k, c in enumerate(col):
        if c != 0:
            return k
    return None


def _shift(cols, a, e, N):
    """Coefficients of F(tau, Z + a tau^e)."""
    n = len(cols) - 1
    zero = cols[0][0] * 0
    out = [[zero] * N for _ in range(n + 1)]
    apow = [1]
    for _ in range(n):
        apow.append(apow[-1] * a)
    for i in range(n + 1):
        ci = cols[i]
        for j in range(i + 1):
            s = i - j
            coef = comb(i, j) * apow[s]
            off = e * s
            if off >= N:
                continue
            target = out[j]
            for k in range(N - off):
                if ci[k] != 0:
                    target[k + off] = target[k + off] + coef * ci[k]
    return out


def _edge_constant(edge, d, k, g, field, stage):
    """Check edge == lc*(Z^k - b)^g for the edge coefficients (index j -> coeff) and return b."""
    lc = edge[d]
    b = -edge[d - k] / (g * lc) if d - k in edge else field.zero
    if b == 0:
        raise MultiplePlacesError(f"edge polynomial is not a pure power at stage {stage}")
    for j in range(d + 1):
        expected = field.zero
        if j % k == 0:
            r = j // k
            expected = lc * comb(g, r) * (-b) ** (g - r)
        if edge.get(j, field.zero) != expected:
            raise MultiplePlacesError(f"edge polynomial is not a pure power at stage {stage}")
    return b


class _Rescale(Exception):
    """Restart with another coefficient of x and prescribed earlier roots."""

    def __init__(self, x_coeff, roots):
        super().__init__()
        self.x_coeff = x_coeff
        self.roots = roots


def expand_at_infinity(f: Polynomial, truncation: int | None = None, x_coeff=None, separation_only=False) -> NPExpansion:
    """Expansion of the unique place at infinity of f, exact modulo tau^truncation.

    With ``separation_only`` the search stops once a single root is left,
    which already decides the one-place question; the returned truncation is
    then just past the last computed exponent.
    """
    f = normalize_monic(f)
    xv, yv = f.variables
    n, m = f.degree(yv), f.degree(xv)
    field = f.field
    if truncation is None:
        truncation = default_truncation(n, m)
    if m == 0:
        if n != 1:
            raise MultiplePlacesError(f"f is a polynomial in {yv} alone of degree {n}")
        c = -f.constant_term()
        return NPExpansion(1, 0, LaurentSeries({0: c}, truncation, field), truncation, f)
    if x_coeff is not None:
        return _expand(f, n, m, truncation, field.coerce(x_coeff), rescale=False, separation_only=separation_only)
    c, roots = field.one, {}
    for _ in range(n):  # every restart settles one more stage
        try:
            return _expand(f, n, m, truncation, c, rescale=True, roots=roots, separation_only=separation_only)
        except _Rescale as r:
            c, roots = r.x_coeff, r.roots
    return _expand(f, n, m, truncation, c, rescale=False, roots=roots, separation_only=separation_only)


def _expand(f, n, m, truncation, x_coeff, rescale, roots=None, separation_only=False):
    """One NP run with x = x_coeff * tau^-n; ``roots`` prescribes the edge root at given exponents."""
    roots = roots or {}
    field = f.field
    P = truncation + m  # precision wanted for Z-root (= tau^m * eta)
    N = n * P + 1
    cols = _scaled_coefficients(f, n, m, N, x_coeff)
    eta = {}
    d, prev, stage = n, -1, 0
    while True:
        orders = [_order(c) for c in cols]
        # roots of order > prev are counted by the first minimiser of ord c_j + j*prev
        scores = [(o + j * prev) if o is not None else None for j, o in enumerate(orders)]
        best = min(s for s in scores if s is not None)
        lead = scores.index(best)
        if lead != d:
            raise MultiplePlacesError(f"{lead} roots continue the expansion where {d} were expected (stage {stage})")
        od = orders[d]
        if orders[0] is None:
            if d == 1:
                break  # the remaining correction lies beyond tau^N
            raise InsufficientTruncationError("cluster did not separate within the working precision")
        rise = orders[0] - od
        if rise % d:
            raise MultiplePlacesError(f"non-integral slope {rise}/{d} at stage {stage}")
        e = rise // d
        if e <= prev:
            raise MultiplePlacesError(f"slope did not increase at stage {stage}")
        if e >= P:
            if d > 1:
                raise InsufficientTruncationError("cluster did not separate within the requested truncation")
            break
        edge = {}
        for j in range(d + 1):
            need = od + e * (d - j)
            if orders[j] is not None and orders[j] < need:
                raise MultiplePlacesError(f"Newton polygon has several segments at stage {stage}")
            if orders[j] == need:
                edge[j] = cols[j][need]
        g = gcd(d, e - m)
        k = d // g
        b = _edge_constant(edge, d, k, g, field, stage)
        a = roots[e] if e in roots else field.kth_root(b, k)
        if a is None:
            if rescale and k > 1:
                # tau -> s*tau with s^-n = mu^(n/d) multiplies the coefficient at
                # tau^(e-m) by mu^(-(e-m)/d): integral powers for the earlier
                # exponents (multiples of d), and b by mu^(-(e-m)/g); mu = b^w
                # makes the new b a k-th power.
                mu = b ** pow(((e - m) // g) % k, -1, k)
                moved = {ei: ai * mu ** (-(ei - m) // d) for ei, ai in eta.items()}
                raise _Rescale(x_coeff * mu ** (n // d), moved)
            raise FieldObstructionError(f"no {k}-th root of {field.render(b)}")
        if a**k != b:
            raise InvariantViolation("prescribed edge root", field.render(a**k), field.render(b))
        eta[e] = a
        cols = _shift(cols, a, e, N)
        d, prev = g, e
        stage += 1
        if d == 1 and separation_only:
            truncation = e - m + 1
            break
        if d == 1:
            # only a simple root remains: ord c_0 = ord c_1 + (next exponent) suffices
            o1 = _order(cols[1])
            if o1 is not None and N > o1 + P + 1:
                N = o1 + P + 1
                cols = [c[:N] for c in cols]
    series = LaurentSeries({k - m: c for k, c in eta.items()}, truncation, field)
    return NPExpansion(n, m, series, truncation, f, x_coeff)


@lru_cache(maxsize=256)
def _cached_expansion(f: Polynomial, truncation: int) -> NPExpansion:
    return expand_at_infinity(f, truncation)


def expansion(f: Polynomial, truncation: int | None = None) -> NPExpansion:
    """expand_at_infinity with the default truncation, doubled on demand."""
    fm = normalize_monic(f)
    xv, yv = fm.variables
    if truncation is None:
        truncation = default_truncation(fm.degree(yv), fm.degree(xv))
    for _ in range(MAX_DOUBLINGS):
        try:
            return _cached_expansion(fm, truncation)
        except InsufficientTruncationError:
            truncation *= 2
    return _cached_expansion(fm, truncation)


def verify_one_place(f: Polynomial) -> NPExpansion:
    """Expand only until the cluster of roots separates, doubling the precision on demand.

    Raises MultiplePlacesError (or FieldObstructionError) exactly when
    ``expansion`` would; the returned series is short.
    """
    fm = normalize_monic(f)
    xv, yv = fm.variables
    n, m = fm.degree(yv), fm.degree(xv)
    limit = default_truncation(n, m) * 2**MAX_DOUBLINGS
    truncation = max(n, m) + 1
    while True:
        try:
            return expand_at_infinity(fm, truncation, separation_only=True)
        except InsufficientTruncationError:
            if truncation >= limit:
                raise
            truncation = min(2 * truncation, limit)


def check_no_pure_power_terms(exp: NPExpansion) -> bool:
    """True when eta has no term tau^(n s) with s > 0."""
    return not any(e > 0 and e % exp.n == 0 for e in exp.exponents())


def valuation_at_infinity(exp: NPExpansion, h: Polynomial) -> int:
    """ord_tau h(tau^-n, eta); raises InsufficientTruncationError on cancellation."""
    if h.variables != exp.polynomial.variables:
        h = h.embed(exp.polynomial.variables) if set(h.variables) <= set(exp.polynomial.variables) else h
    if h.is_zero():
        raise PreconditionError("valuation of the zero polynomial")
    if exp.polynomial.field != h.field:
        h = h.with_field(exp.polynomial.field)
    return exp.substitute(h).order()


def valuation(f: Polynomial, h: Polynomial, truncation: int | None = None) -> int:
    """v(h) at the place at infinity of f, enlarging the truncation as needed."""
    fm = normalize_monic(f)
    xv, yv = fm.variables
    t = truncation or default_truncation(fm.degree(yv), fm.degree(xv))
    for _ in range(MAX_DOUBLINGS + 2):
        try:
            return valuation_at_infinity(expansion(fm, t), h)
        except InsufficientTruncationError:
            t *= 2
    raise InsufficientTruncationError(f"valuation still undetermined at truncation {t}")
