"""Truncated Laurent series in one variable.

A series is exact modulo terms of order >= ``prec``; ``prec=None`` marks an
exact (finite) Laurent polynomial.  Arithmetic propagates the weakest
precision of its inputs.
"""

from __future__ import annotations

from ..errors import InsufficientTruncationError
from .fields import QQ


def _min_prec(*values):
    known = [v for v in values if v is not None]
    return min(known) if known else None


class LaurentSeries:
    __slots__ = ("terms", "prec", "field", "var")

    def __init__(self, terms, prec=None, field=QQ, var="tau"):
        clean = {}
        for k, c in dict(terms).items():
            if prec is not None and k >= prec:
                continue
            c = field.coerce(c)
            if c != 0:
                clean[int(k)] = c
        self.terms = clean
        self.prec = prec
        self.field = field
        self.var = var

    @classmethod
    def _raw(cls, terms, prec, field, var):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.prec = prec
        obj.field = field
        obj.var = var
        return obj

    @classmethod
    def monomial(cls, coeff, exponent, field=QQ, var="tau", prec=None):
        return cls({exponent: coeff}, prec, field, var)

    def like(self, terms, prec):
        return LaurentSeries(terms, prec, self.field, self.var)

    # -- queries ---------------------------------------------------------------
    def is_zero(self):
        """True when no term is known below the precision."""
        return not self.terms

    def order(self):
        """Order of the series; raises when it vanishes up to its precision."""
        if not self.terms:
            if self.prec is None:
                raise ValueError("order of the zero series")
            raise InsufficientTruncationError(f"series vanishes below order {self.prec}")
        return min(self.terms)

    def leading_coefficient(self):
        return self.terms[self.order()]

    def coefficient(self, k):
        if self.prec is not None and k >= self.prec:
            raise InsufficientTruncationError(f"coefficient of order {k} beyond precision {self.prec}")
        return self.terms.get(k, self.field.zero)

    def exponents(self):
        return sorted(self.terms)

    def truncate(self, prec):
        p = prec if self.prec is None else min(prec, self.prec)
        return LaurentSeries._raw({k: c for k, c in self.terms.items() if k < p}, p, self.field, self.var)

    # -- arithmetic --------------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries({0: other}, None, self.field, self.var)

    def __add__(self, other):
        other = self._wrap(other)
        prec = _min_prec(self.prec, other.prec)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return self.like(terms, prec)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw({k: -c for k, c in self.terms.items()}, self.prec, self.field, self.var)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = self.field.coerce(other)
            return LaurentSeries._raw(
                {k: v * c for k, v in self.terms.items() if v * c != 0}, self.prec, self.field, self.var
            )
        prec = self._product_prec(other)
        terms = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                if prec is not None and k >= prec:
                    continue
                terms[k] = terms.get(k, 0) + a * b
        return self.like(terms, prec)

    __rmul__ = __mul__

    def _product_prec(self, other):
        cands = []
        if self.prec is not None:
            cands.append(self.prec + (other._min_exp()))
        if other.prec is not None:
            cands.append(other.prec + (self._min_exp()))
        return min(cands) if cands else None

    def _min_exp(self):
        if self.terms:
            return min(self.terms)
        # vanishing series: everything known is zero up to prec
        return self.prec if self.prec is not None else 0

    def shift(self, k):
        """Multiply by var^k."""
        return LaurentSeries._raw(
            {e + k: c for e, c in self.terms.items()},
            None if self.prec is None else self.prec + k,
            self.field,
            self.var,
        )

    def inverse(self):
        v = self.order()
        a0 = self.terms[v]
        if self.prec is None:
            raise ValueError("inverse of an exact series needs an explicit precision; truncate first")
        rel = self.prec - v  # relative precision
        inv0 = 1 / a0
        # unit part u = 1 + ..., coefficients u[k] for k < rel
        u = [self.terms.get(v + k, 0) * inv0 for k in range(rel)]
        w = [self.field.zero] * rel
        w[0] = self.field.one
        for k in range(1, rel):
            s = 0
            for j in range(1, k + 1):
                if u[j] != 0:
                    s = s + u[j] * w[k - j]
            w[k] = -s
        terms = {k - v: w[k] * inv0 for k in range(rel) if w[k] != 0}
        return self.like(terms, rel - v)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self * (1 / self.field.coerce(other))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentSeries({0: 1}, None, self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.terms == other.terms and self.prec == other.prec

    def agrees_with(self, other, through):
        """True when both series coincide for every order < ``through``."""
        for k in set(self.terms) | set(other.terms):
            if k < through and self.terms.get(k, 0) != other.terms.get(k, 0):
                return False
        return True

    def __repr__(self):
        body = " + ".join(f"({c})*{self.var}^{k}" for k, c in sorted(self.terms.items())) or "0"
        tail = "" if self.prec is None else f" + O({self.var}^{self.prec})"
        return f"LaurentSeries({body}{tail})"

    def to_json(self):
        return {
            "variable": self.var,
            "truncation": self.prec,
            "terms": [[k, self.field.render(c)] for k, c in sorted(self.terms.items())],
        }


def evaluate_polynomial(poly, values: dict):
    """Evaluate a Polynomial at LaurentSeries values, caching powers of each variable."""
    field = poly.field
    var_series = [values[v] for v in poly.variables]
    total = None
    powers = [dict() for _ in var_series]

    def pw(j, k):
        d = powers[j]
        if k not in d:
            if k == 0:
                d[k] = LaurentSeries({0: 1}, None, field, var_series[j].var)
            elif k == 1:
                d[k] = var_series[j]
            else:
                d[k] = pw(j, k // 2) * pw(j, k - k // 2)
        return d[k]

    for exp, c in poly.terms.items():
        term = None
        for j, k in enumerate(exp):
            if k:
                term = pw(j, k) if term is None else term * pw(j, k)
        if term is None:
            term = LaurentSeries({0: c}, None, field, var_series[0].var)
        else:
            term = term * c
        total = term if total is None else total + term
    if total is None:
        return LaurentSeries({}, None, field, var_series[0].var if var_series else "tau")
    return total

