"""Very elementary automorphisms of k[X, Y] and their action on curves.

A move is a substitution: ``Y <- c*Y + l(X)`` sends Y to c*Y + l(X) and fixes
X (likewise with the roles exchanged), ``swap`` exchanges X and Y.  An
Automorphism is a sequence of moves; applying it to f substitutes move by
move, so ``apply(f) = f o s_1 o s_2 o ...``.  The zero set transforms by the
inverse maps, which is what ``apply_to_curve`` does to a parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import univariate as up
from .algebra.polynomial import Polynomial

KINDS = ("swap", "X", "Y")


@dataclass(frozen=True)
class Move:
    kind: str
    scale: object = 1
    shift: tuple = ()  # coefficients of l, lowest degree first

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind != "swap" and self.scale == 0:
            raise ValueError("a move needs a nonzero scale")
        object.__setattr__(self, "shift", tuple(up.strip(list(self.shift))))

    def images(self, variables, field):
        """Images of the two variables under the substitution."""
        xv, yv = variables
        X = Polynomial.var(xv, variables, field)
        Y = Polynomial.var(yv, variables, field)
        if self.kind == "swap":
            return {xv: Y, yv: X}
        if self.kind == "Y":
            return {xv: X, yv: Y * self.scale + _univariate(self.shift, X)}
        return {xv: X * self.scale + _univariate(self.shift, Y), yv: Y}

    def inverse(self) -> Move:
        if self.kind == "swap":
            return self
        inv = Fraction(1) / self.scale
        return Move(self.kind, inv, tuple(-c * inv for c in self.shift))

    def is_identity(self):
        return self.kind != "swap" and self.scale == 1 and not self.shift

    def to_json(self, field):
        out = {"kind": self.kind}
        if self.kind != "swap":
            out["scale"] = field.render(field.coerce(self.scale))
            out["shift"] = [field.render(field.coerce(c)) for c in self.shift]
        return out

    def describe(self, variables=("X", "Y")):
        xv, yv = variables
        if self.kind == "swap":
            return f"swap({xv},{yv})"
        target, other = (yv, xv) if self.kind == "Y" else (xv, yv)
        l = Polynomial.from_univariate(list(self.shift), other) if self.shift else None
        scale = "" if self.scale == 1 else f"({self.scale})*"
        rest = f" + ({l})" if l is not None else ""
        return f"{target} <- {scale}{target}{rest}"


def _univariate(coeffs, var_poly):
    out = var_poly.zero_like()
    power = var_poly.const_like(1)
    for c in coeffs:
        if c != 0:
            out = out + power * c
        power = power * var_poly
    return out


@dataclass(frozen=True)
class Automorphism:
    moves: tuple = ()

    def then(self, other: Automorphism | Move) -> Automorphism:
        more = (other,) if isinstance(other, Move) else other.moves
        return Automorphism(self.moves + tuple(m for m in more if not m.is_identity()))

    def inverse(self) -> Automorphism:
        return Automorphism(tuple(m.inverse() for m in reversed(self.moves)))

    def apply(self, f: Polynomial) -> Polynomial:
        for mv in self.moves:
            f = f.subs(mv.images(f.variables, f.field))
        return f

    def apply_to_curve(self, x, y):
        """Transform a parametrization (two polynomials in t) by the inverse maps."""
        for mv in self.moves:
            inv = mv.inverse()
            if inv.kind == "swap":
                x, y = y, x
            elif inv.kind == "Y":
                y = y * inv.scale + _univariate(inv.shift, x)
            else:
                x = x * inv.scale + _univariate(inv.shift, y)
        return x, y

    def to_json(self, field):
        return [m.to_json(field) for m in self.moves]

    def __len__(self):
        return len(self.moves)
