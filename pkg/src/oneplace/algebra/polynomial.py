"""Sparse multivariate polynomials over QQ or a simple number field."""

from __future__ import annotations

from fractions import Fraction

from . import univariate as up
from .fields import QQ, AlgebraicNumber


def grlex_key(exp):
    """Sort key for graded lexicographic order, earlier variables least significant."""
    return (sum(exp), tuple(reversed(exp)))


class Polynomial:
    """An immutable sparse polynomial.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Treat it as read-only.
    """

    __slots__ = ("variables", "terms", "field", "_hash")

    def __init__(self, terms, variables, field=QQ):
        variables = tuple(variables)
        nv = len(variables)
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != nv:
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = field.coerce(c)
            if c != 0:
                clean[exp] = c
        self.variables = variables
        self.terms = clean
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms, variables, field):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj.field = field
        obj._hash = None
        return obj

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, variables, field=QQ):
        return cls._raw({}, tuple(variables), field)

    @classmethod
    def constant(cls, c, variables, field=QQ):
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables, field)

    @classmethod
    def var(cls, name, variables, field=QQ):
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls({exp: 1}, variables, field)

    @classmethod
    def from_univariate(cls, coeffs, variable, field=QQ):
        return cls({(i,): c for i, c in enumerate(coeffs) if c != 0}, (variable,), field)

    # -- basic queries -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), self.field.zero)

    def index(self, var):
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None

    def degree(self, var=None):
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.index(var)
        return max(e[i] for e in self.terms)

    def weighted_degree(self, weights):
        if not self.terms:
            return None
        return max(sum(w * e for w, e in zip(weights, exp)) for exp in self.terms)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def sorted_terms(self):
        """Terms in decreasing graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_coefficient(self, var):
        """The coefficient of the highest power of ``var``, as a polynomial."""
        d = self.degree(var)
        return self.coefficients_in(var).get(d, self.zero_like())

    def coefficients_in(self, var):
        """Map k -> coefficient of var^k (polynomials in the same variables, free of var)."""
        i = self.index(var)
        out = {}
        for exp, c in self.terms.items():
            k = exp[i]
            rest = exp[:i] + (0,) + exp[i + 1 :]
            out.setdefault(k, {})[rest] = c
        return {k: Polynomial._raw(t, self.variables, self.field) for k, t in out.items()}

    @classmethod
    def from_coefficients_in(cls, coeffs, var, variables, field=QQ):
        variables = tuple(variables)
        i = variables.index(var)
        terms = {}
        for k, poly in coeffs.items():
            for exp, c in poly.terms.items():
                e = exp[:i] + (exp[i] + k,) + exp[i + 1 :]
                terms[e] = terms.get(e, 0) + c
        return cls(terms, variables, field)

    def to_univariate(self, var=None):
        """Dense coefficient list (low degree first) of a univariate polynomial."""
        if var is None:
            if len(self.variables) != 1:
                raise ValueError("to_univariate needs a variable for multivariate input")
            var = self.variables[0]
        i = self.index(var)
        if any(e[j] for e in self.terms for j in range(len(e)) if j != i):
            raise ValueError("polynomial is not univariate in " + var)
        d = self.degree(var)
        out = [self.field.zero] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def free_variables(self):
        return tuple(v for j, v in enumerate(self.variables) if any(e[j] for e in self.terms))

    # -- arithmetic ----------------------------------------------------------
    def zero_like(self):
        return Polynomial._raw({}, self.variables, self.field)

    def const_like(self, c):
        return Polynomial.constant(c, self.variables, self.field)

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            if other.field != self.field:
                if other.field == QQ:
                    return Polynomial(other.terms, self.variables, self.field)
                if self.field == QQ:
                    raise TypeError("mixing polynomials over different fields")
                raise TypeError("mixing polynomials over different fields")
            return other
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return self.const_like(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s == 0:
                    del terms[e]
                else:
                    terms[e] = s
        return Polynomial._raw(terms, self.variables, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self.terms.items()}, self.variables, self.field)

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return self.scale(other)
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        terms = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        terms = {e: c for e, c in terms.items() if c != 0}
        return Polynomial._raw(terms, self.variables, self.field)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.coerce(c)
        if c == 0:
            return self.zero_like()
        return Polynomial._raw({e: v * c for e, v in self.terms.items()}, self.variables, self.field)

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            return self.exact_div(c)
        c = self.field.coerce(c)
        return self.scale(1 / c)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.const_like(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return self == self.const_like(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- calculus / substitution ----------------------------------------------
    def diff(self, var):
        i = self.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                terms[ne] = c * e[i]
        return Polynomial._raw(terms, self.variables, self.field)

    def subs(self, mapping, variables=None):
        """Substitute polynomials for variables.

        ``mapping`` sends variable names to Polynomials (all in the target
        ``variables``, default: same as self) or scalars.  Unmapped variables
        are kept and must exist in the target ring.
        """
        target = tuple(variables) if variables is not None else self.variables
        images = []
        for v in self.variables:
            img = mapping.get(v)
            if img is None:
                img = Polynomial.var(v, target, self.field)
            elif not isinstance(img, Polynomial):
                img = Polynomial.constant(img, target, self.field)
            elif img.variables != target:
                raise ValueError("substitution images must live in the target ring")
            images.append(img)
        # cache powers per variable
        cache = [dict() for _ in images]

        def pw(j, k):
            d = cache[j]
            if k not in d:
                if k == 0:
                    d[k] = Polynomial.constant(1, target, self.field)
                elif k == 1:
                    d[k] = images[j]
                else:
                    d[k] = pw(j, k // 2) * pw(j, k - k // 2)
            return d[k]

        acc = {}
        for exp, c in self.terms.items():
            term = None
            for j, k in enumerate(exp):
                if k:
                    term = pw(j, k) if term is None else term * pw(j, k)
            if term is None:
                z = (0,) * len(target)
                acc[z] = acc.get(z, 0) + c
                continue
            for e, v in term.terms.items():
                acc[e] = acc.get(e, 0) + c * v
        return Polynomial(acc, target, self.field)

    def evaluate(self, values):
        """Evaluate at scalars; ``values`` maps every variable to a field element."""
        total = self.field.zero
        for exp, c in self.terms.items():
            t = c
            for v, k in zip(self.variables, exp):
                if k:
                    t = t * values[v] ** k
            total = total + t
        return total

    def rename(self, variables):
        return Polynomial._raw(dict(self.terms), tuple(variables), self.field)

    def embed(self, variables):
        """View self inside a ring with a superset of variables."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for j, k in zip(idx, e):
                ne[j] = k
            terms[tuple(ne)] = c
        return Polynomial._raw(terms, variables, self.field)

    def drop(self, variables):
        """Restrict to a subset of variables; the dropped ones must not occur."""
        variables = tuple(variables)
        idx = [self.variables.index(v) for v in variables]
        keep = set(idx)
        terms = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j not in keep):
                raise ValueError("cannot drop a variable that occurs")
            terms[tuple(e[j] for j in idx)] = c
        return Polynomial._raw(terms, variables, self.field)

    def with_field(self, field):
        return Polynomial(self.terms, self.variables, field)

    # -- normalization -------------------------------------------------------
    def monic_in(self, var):
        """Divide by the leading coefficient in ``var``, which must be a constant."""
        lc = self.leading_coefficient(var)
        if not lc.is_constant():
            raise ValueError(f"leading coefficient in {var} is not constant")
        return self / lc.constant_term()

    def leading_term_grlex(self):
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def make_monic_grlex(self):
        if not self.terms:
            return self
        return self / self.leading_term_grlex()[1]

    # -- division ----------------------------------------------------------------
    def divmod_monic(self, g, var):
        """Division by ``g`` whose leading coefficient in ``var`` is constant."""
        dg = g.degree(var)
        lc = g.leading_coefficient(var)
        if not lc.is_constant():
            raise ValueError("divisor is not monic in " + var)
        inv = 1 / lc.constant_term()
        gc = g.coefficients_in(var)
        rc = self.coefficients_in(var)
        qc = {}
        zero = self.zero_like()
        for k in range(self.degree(var), dg - 1, -1):
            c = rc.get(k)
            if c is None or c.is_zero():
                continue
            q = c.scale(inv)
            qc[k - dg] = q
            for j, gj in gc.items():
                rc[k - dg + j] = rc.get(k - dg + j, zero) - q * gj
        quo = Polynomial.from_coefficients_in(qc, var, self.variables, self.field)
        rem = Polynomial.from_coefficients_in(
            {k: v for k, v in rc.items() if k < dg}, var, self.variables, self.field
        )
        return quo, rem

    def exact_div(self, other):
        """Exact division; raises ArithmeticError when ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.zero_like()
        # lex leading terms
        lt_e = max(other.terms)
        lt_c = other.terms[lt_e]
        inv = 1 / lt_c
        rem = dict(self.terms)
        quo = {}
        while rem:
            e = max(rem)
            c = rem[e]
            diff = tuple(a - b for a, b in zip(e, lt_e))
            if any(d < 0 for d in diff):
                raise ArithmeticError("inexact polynomial division")
            q = c * inv
            quo[diff] = q
            for oe, oc in other.terms.items():
                ne = tuple(a + b for a, b in zip(oe, diff))
                v = rem.get(ne, 0) - q * oc
                if v == 0:
                    rem.pop(ne, None)
                else:
                    rem[ne] = v
        return Polynomial._raw(quo, self.variables, self.field)

    def taylor_shift(self, var, shift):
        """``self`` with ``var`` replaced by ``var + shift`` (shift free of var)."""
        coeffs = self.coefficients_in(var)
        x = Polynomial.var(var, self.variables, self.field)
        out = self.zero_like()
        base = x + shift
        for k, c in coeffs.items():
            out = out + c * base**k
        return out

    # -- rendering -----------------------------------------------------------------
    def _render_coeff(self, c):
        if isinstance(c, AlgebraicNumber):
            if c.is_rational():
                return None, (c.coords[0] if c.coords else Fraction(0))
            return "(" + str(c) + ")", None
        return None, Fraction(c)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, exp) if k
            )
            text, rat = self._render_coeff(c)
            if text is not None:
                body = text + ("*" + mono if mono else "")
                pieces.append(("+", body))
                continue
            sign = "-" if rat < 0 else "+"
            mag = abs(rat)
            mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag_s}*{mono}"
            else:
                body = mag_s
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.variables})"

    def term_list(self):
        """Deterministic serializable term list: ``[[exponents], coefficient], ...``."""
        out = []
        for exp, c in self.sorted_terms():
            out.append([list(exp), self.field.render(c)])
        return out


def univariate_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    var = p.variables[0]
    g = up.gcd(p.to_univariate(), q.to_univariate())
    return Polynomial.from_univariate(g, var, p.field)
