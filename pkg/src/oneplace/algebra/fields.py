"""Coefficient fields: the rationals and simple extensions Q(z).

Rationals are plain :class:`fractions.Fraction` values.  Elements of
Q(z) are :class:`AlgebraicNumber` instances holding their coordinates in
the power basis 1, z, ..., z^(d-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from . import univariate as up


def render_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class Rationals:
    """The field Q.  A singleton; use :data:`QQ`."""

    kind = "base-rationals"
    degree = 1
    generator_name = None
    minpoly = None

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, AlgebraicNumber):
            raise TypeError("cannot coerce an algebraic number into QQ")
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def generator(self):
        raise PreconditionError("the rationals have no extension generator")

    def coordinates(self, value):
        return (Fraction(value),)

    def render(self, value) -> str:
        return render_rational(value)

    def kth_root(self, value, k):
        """A k-th root of ``value`` inside the field, or ``None``."""
        value = Fraction(value)
        if k == 1:
            return value
        return _rational_kth_root(value, k)

    def describe(self):
        return {"kind": self.kind}


QQ = Rationals()


def _integer_kth_root(n: int, k: int):
    if n < 0:
        if k % 2 == 0:
            return None
        r = _integer_kth_root(-n, k)
        return None if r is None else -r
    lo, hi = 0, 1
    while hi**k < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def _rational_kth_root(q: Fraction, k: int):
    num = _integer_kth_root(q.numerator, k)
    if num is None:
        return None
    den = _integer_kth_root(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


class NumberField:
    """Q(z) = Q[z]/(minpoly) for a monic irreducible minpoly of degree 2..4."""

    kind = "simple-extension"

    def __init__(self, minpoly, generator_name="z"):
        coeffs = up.strip([Fraction(c) for c in minpoly])
        if len(coeffs) < 3:
            raise PreconditionError("minimal polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise PreconditionError("minimal polynomial must be monic")
        d = len(coeffs) - 1
        if d > 4:
            raise PreconditionError("extensions of degree > 4 are not supported")
        if up.rational_roots(coeffs):
            raise PreconditionError("minimal polynomial has a rational root")
        if d == 4 and up.has_rational_quadratic_factor(coeffs):
            raise PreconditionError("minimal polynomial has a rational quadratic factor")
        self.minpoly = tuple(coeffs)
        self.degree = d
        self.generator_name = generator_name

    def __repr__(self):
        return f"NumberField({self.render_minpoly()})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NF", self.minpoly))

    def render_minpoly(self):
        z = self.generator_name
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.minpoly[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (z if i == 1 else f"{z}^{i}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def element(self, coords):
        return AlgebraicNumber(self, coords)

    def coerce(self, value):
        if isinstance(value, AlgebraicNumber):
            if value.field != self:
                raise TypeError("algebraic number from a different field")
            return value
        return AlgebraicNumber(self, (Fraction(value),))

    @property
    def zero(self):
        return AlgebraicNumber(self, ())

    @property
    def one(self):
        return AlgebraicNumber(self, (Fraction(1),))

    def generator(self):
        return AlgebraicNumber(self, (Fraction(0), Fraction(1)))

    def coordinates(self, value):
        return self.coerce(value).coords

    def render(self, value):
        """Coordinate vector in the power basis 1, z, ..., z^(d-1), padded to length d."""
        coords = list(self.coordinates(value))
        coords += [Fraction(0)] * (self.degree - len(coords))
        return [render_rational(c) for c in coords]

    def kth_root(self, value, k):
        """A k-th root of ``value`` in the field, or ``None`` when none is found.

        Rational roots of rational elements are found in any field; in a
        quadratic field square roots (hence 2^j-th roots) of arbitrary
        elements are found as well.
        """
        value = self.coerce(value)
        if k == 1:
            return value
        if value.is_rational():
            r = _rational_kth_root(value.coords[0] if value.coords else Fraction(0), k)
            if r is not None:
                return self.coerce(r)
        if self.degree == 2 and k % 2 == 0:
            r = self._quadratic_sqrt(value)
            if r is not None:
                return self.kth_root(r, k // 2)
        return None

    def _quadratic_sqrt(self, value):
        """Square root in a quadratic field, written over w = z + p/2 with w^2 = D."""
        q, p = self.minpoly[0], self.minpoly[1]
        D = p * p / 4 - q
        w = self.generator() + p / 2
        # value = a + b*w
        coords = list(value.coords) + [Fraction(0)] * (2 - len(value.coords))
        b = coords[1]
        a = coords[0] - b * p / 2
        if b == 0:
            s = _rational_kth_root(a, 2)
            if s is not None:
                return self.coerce(s)
            s = _rational_kth_root(a / D, 2)
            return None if s is None else w * s
        # (c + d*w)^2 = c^2 + d^2*D + 2cd*w
        disc = _rational_kth_root(a * a - b * b * D, 2)
        if disc is None:
            return None
        for c2 in ((a + disc) / 2, (a - disc) / 2):
            c = _rational_kth_root(c2, 2)
            if c:
                return c + (b / (2 * c)) * w
        return None

    def describe(self):
        return {"kind": self.kind, "minpoly": self.render_minpoly(), "generator": self.generator_name}


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    field: NumberField
    coords: tuple

    def __post_init__(self):
        coords = [Fraction(c) for c in self.coords]
        if len(coords) >= self.field.degree:
            coords = up.rem(coords, list(self.field.minpoly))
        object.__setattr__(self, "coords", tuple(up.strip(coords)))

    def _lift(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise TypeError("mixing elements of different number fields")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other != 0 else ()
        return NotImplemented

    def is_rational(self):
        return len(self.coords) <= 1

    def __eq__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return NotImplemented
        return self.coords == tuple(c)

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0] if self.coords else Fraction(0))
        return hash(self.coords)

    def __bool__(self):
        return bool(self.coords)

    def __add__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.field, up.add(list(self.coords), list(c)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.field, up.sub(list(self.coords), list(c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._lift(other)
        if c is NotImplemented:
            return NotImplemented
        return AlgebraicNumber(self.field, up.mul(list(self.coords), list(c)))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coords:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = up.ext_gcd(list(self.coords), list(self.field.minpoly))
        # minpoly irreducible, so the gcd is 1
        return AlgebraicNumber(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, AlgebraicNumber):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return AlgebraicNumber(self.field, tuple(c / other for c in self.coords))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return f"AlgebraicNumber({self.field.render_minpoly()}: {[str(c) for c in self.coords]})"

    def __str__(self):
        from .polynomial import Polynomial

        p = Polynomial.from_univariate(list(self.coords), self.field.generator_name, QQ)
        return str(p)


def make_field(minpoly=None, generator_name="z"):
    """QQ when ``minpoly`` is None, else the number field it defines."""
    if minpoly is None:
        return QQ
    return NumberField(minpoly, generator_name)
