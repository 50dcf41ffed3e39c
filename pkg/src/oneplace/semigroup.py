"""Approximate roots, characteristic sequences and the value semigroup at infinity.

Values at the place at infinity are negative, so the semigroup is written
with non-positive integers: r_0 = v(X) = -n, r_1 = v(Y) = -m, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .algebra.polynomial import Polynomial
from .errors import InvariantViolation, PreconditionError
from .puiseux import normalize_monic, valuation


@dataclass(frozen=True)
class CharacteristicData:
    """The sequences r_i, d_i, n_i of a curve with one place at infinity.

    ``d`` is (d_0, ..., d_{h+1}) with d_0 = m, ``n_seq`` is (n_0, ..., n_h)
    with n_0 = d_0 / d_2 (d_0 / d_1 when h = 0).
    """

    h: int
    r: tuple
    d: tuple
    n_seq: tuple
    roots: tuple = field(default=(), compare=False, repr=False)

    def to_json(self):
        return {
            "h": self.h,
            "r": list(self.r),
            "d": list(self.d),
            "n": list(self.n_seq),
            "approximate_roots": [str(g) for g in self.roots],
        }


@dataclass(frozen=True)
class AdmissibleTuple:
    b: tuple
    member: bool


def from_generators(r) -> CharacteristicData:
    """CharacteristicData determined by r = (r_0, ..., r_h) alone (no polynomial)."""
    r = tuple(int(x) for x in r)
    if not r or any(x >= 0 for x in r):
        raise PreconditionError("semigroup generators must be negative integers")
    if len(r) == 1:
        if r[0] != -1:
            raise PreconditionError("a single generator must be -1")
        return CharacteristicData(0, r, (0, 1), (0,))
    d = [-r[1], -r[0]]
    g = -r[0]
    for x in r[1:]:
        g = gcd(g, x)
        d.append(g)
    if d[-1] != 1:
        raise PreconditionError("generators are not coprime")
    for i in range(2, len(d) - 1):
        if d[i + 1] >= d[i]:
            raise PreconditionError("gcd sequence is not strictly decreasing")
    h = len(r) - 1
    n_seq = [d[0] // d[2]] + [d[i] // d[i + 1] for i in range(1, h + 1)]
    return CharacteristicData(h, r, tuple(d), tuple(n_seq))


def approximate_root(f: Polynomial, d: int) -> Polynomial:
    """The monic g of Y-degree n/d with deg_Y(f - g^d) < n - n/d."""
    f = normalize_monic(f)
    yv = f.variables[1]
    n = f.degree(yv)
    if d <= 0 or n % d:
        raise PreconditionError(f"{d} does not divide deg_Y f = {n}")
    if d == 1:
        return f
    k = n // d
    g = Polynomial.var(yv, f.variables, f.field) ** k
    for _ in range(k + 1):
        rem = f - g**d
        if rem.degree(yv) < n - k:
            return g
        q, _ = rem.divmod_monic(g ** (d - 1), yv)
        g = g + q / d
    raise InvariantViolation("approximate root iterations", k + 1, "converged")


def characteristic_data(f: Polynomial, value=None, truncation=None) -> CharacteristicData:
    """r_i = v(g_i) over the approximate roots g_i, until the gcd reaches 1.

    ``value`` maps a polynomial to its value at infinity; by default the
    Newton-Puiseux expansion of f is used.
    """
    f = normalize_monic(f)
    xv, yv = f.variables
    n, m = f.degree(yv), f.degree(xv)
    if value is None:
        value = lambda h: valuation(f, h, truncation)  # noqa: E731
    X = Polynomial.var(xv, f.variables, f.field)
    Y = Polynomial.var(yv, f.variables, f.field)
    if n == 1:
        return CharacteristicData(0, (-1,), (m, 1), (m,), (X, Y))
    r = [-n, -m]
    d = [m, n, gcd(n, m)]
    roots = [X, Y]
    while d[-1] > 1:
        g = approximate_root(f, d[-1])
        ri = value(g)
        nxt = gcd(d[-1], ri)
        if nxt >= d[-1]:
            raise InvariantViolation("strictly decreasing gcd sequence", d[-1], nxt)
        r.append(ri)
        roots.append(g)
        d.append(nxt)
    h = len(r) - 1
    n_seq = [d[0] // d[2]] + [d[i] // d[i + 1] for i in range(1, h + 1)]
    return CharacteristicData(h, tuple(r), tuple(d), tuple(n_seq), tuple(roots))


def theta(cd: CharacteristicData) -> int:
    return -cd.r[0] + sum((cd.n_seq[i] - 1) * cd.r[i] for i in range(1, cd.h + 1))


def semigroup_conductor(cd: CharacteristicData) -> int:
    c = theta(cd) - 1
    if c % 2:
        raise InvariantViolation("semigroup conductor is even", c, "even")
    return c


def represent(cd: CharacteristicData, w: int) -> AdmissibleTuple:
    """The unique w = sum b_i r_i with 0 <= b_i < n_i for i >= 1."""
    b = [0] * (cd.h + 1)
    rest = w
    for i in range(cd.h, 0, -1):
        ni = cd.n_seq[i]
        below = cd.d[i + 1]
        if ni > 1:
            unit = (cd.r[i] // below) % ni
            b[i] = ((rest // below) * pow(unit, -1, ni)) % ni
        rest -= b[i] * cd.r[i]
    if rest % cd.r[0]:
        raise InvariantViolation("admissible representation", rest, f"multiple of {cd.r[0]}")
    b[0] = rest // cd.r[0]
    return AdmissibleTuple(tuple(b), b[0] >= 0)


def is_member(cd: CharacteristicData, w: int) -> bool:
    return represent(cd, w).member


def enumerate_gaps(cd: CharacteristicData):
    c = semigroup_conductor(cd)
    gaps = {w for w in range(c, 1) if not is_member(cd, w)}
    if 2 * len(gaps) != -c:
        raise InvariantViolation("gap count equals -C/2", len(gaps), -c // 2)
    return gaps


def is_symmetric(cd: CharacteristicData) -> bool:
    """Exactly one of p, Theta - p lies in the semigroup for every p in [C, Theta]."""
    t = theta(cd)
    return all(is_member(cd, p) != is_member(cd, t - p) for p in range(semigroup_conductor(cd), t + 1))
