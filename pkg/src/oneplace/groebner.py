"""Gröbner bases in two variables and lengths of zero-dimensional quotients.

The Milnor number of the pencil, the Tjurina number and the affine Milnor
number are all dimensions of quotients of k[X, Y]; they are computed here
with plain Buchberger under graded reverse lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra.polynomial import Polynomial
from .errors import InfiniteDimensionError, PreconditionError

INFINITE = float("inf")
ORDER = "grevlex"


def grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _lm(terms):
    return max(terms, key=grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(terms):
    lm = _lm(terms)
    inv = 1 / terms[lm]
    return {e: c * inv for e, c in terms.items()}


def _sub_mul(f, g, coeff, shift):
    """f - coeff * x^shift * g, in place on the dict f."""
    for e, c in g.items():
        ne = tuple(a + b for a, b in zip(e, shift))
        v = f.get(ne)
        v = -coeff * c if v is None else v - coeff * c
        if v == 0:
            f.pop(ne, None)
        else:
            f[ne] = v


def _reduce(f, basis, full=True):
    """Normal form of term dict ``f`` modulo ``basis`` (list of (lm, monic dict))."""
    f = dict(f)
    rem = {}
    while f:
        lm = _lm(f)
        c = f[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                _sub_mul(f, g, c, shift)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[lm] = c
            del f[lm]
    return rem


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis under grevlex; generators are monic."""

    generators: tuple
    variables: tuple
    field: object
    order: str = ORDER

    def leading_monomials(self):
        return [_lm(g.terms) for g in self.generators]

    def is_unit(self):
        return any(g.is_constant() for g in self.generators)

    def normal_form(self, p: Polynomial) -> Polynomial:
        basis = [(_lm(g.terms), g.terms) for g in self.generators]
        return Polynomial._raw(_reduce(p.terms, basis), self.variables, self.field)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()


def groebner(gens) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens]
    if not gens:
        raise PreconditionError("groebner needs at least one generator to fix the ring")
    variables = gens[0].variables
    field = gens[0].field
    for g in gens:
        if g.variables != variables:
            raise PreconditionError("generators live in different rings")
    polys = [_monic(g.terms) for g in gens if not g.is_zero()]
    if not polys:
        return GroebnerBasis((), variables, field)

    basis = []  # list of (lm, terms)
    pairs = []

    def add(h):
        hlm = _lm(h)
        idx = len(basis)
        basis.append((hlm, h))
        for i in range(idx):
            pairs.append((i, idx))

    for p in polys:
        r = _reduce(p, basis)
        if r:
            add(_monic(r))
    while pairs:
        # lowest lcm degree first
        pairs.sort(key=lambda ij: grevlex_key(_lcm(basis[ij[0]][0], basis[ij[1]][0])), reverse=True)
        i, j = pairs.pop()
        lmi, gi = basis[i]
        lmj, gj = basis[j]
        if gi is None or gj is None:
            continue
        lcm = _lcm(lmi, lmj)
        # product criterion
        if all(min(a, b) == 0 for a, b in zip(lmi, lmj)):
            continue
        # chain criterion
        skip = False
        for k, (lmk, gk) in enumerate(basis):
            if k in (i, j) or gk is None:
                continue
            if _divides(lmk, lcm) and _pair_done(pairs, i, k) and _pair_done(pairs, j, k):
                skip = True
                break
        if skip:
            continue
        s = {}
        _sub_mul(s, gi, -1, tuple(a - b for a, b in zip(lcm, lmi)))
        _sub_mul(s, gj, 1, tuple(a - b for a, b in zip(lcm, lmj)))
        live = [(lm, g) for lm, g in basis if g is not None]
        r = _reduce(s, live)
        if r:
            r = _monic(r)
            if all(e == 0 for e in _lm(r)):
                one = {(0,) * len(variables): field.one}
                return GroebnerBasis((Polynomial._raw(one, variables, field),), variables, field)
            add(r)
    return GroebnerBasis(_interreduce([g for _, g in basis if g is not None], variables, field), variables, field)


def _pair_done(pairs, a, b):
    key = (min(a, b), max(a, b))
    return key not in pairs


def _interreduce(polys, variables, field):
    # drop redundant leading monomials
    polys = sorted(polys, key=lambda g: grevlex_key(_lm(g)))
    minimal = []
    for g in polys:
        lm = _lm(g)
        if not any(_divides(_lm(h), lm) for h in minimal):
            minimal = [h for h in minimal if not _divides(lm, _lm(h))]
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = [(_lm(h), h) for j, h in enumerate(minimal) if j != k]
        lm = _lm(g)
        tail = {e: c for e, c in g.items() if e != lm}
        red = _reduce(tail, others)
        red[lm] = g[lm]
        out.append(_monic(red))
    out.sort(key=lambda g: grevlex_key(_lm(g)))
    return tuple(Polynomial._raw(g, variables, field) for g in out)


def standard_monomials(gb: GroebnerBasis):
    """Monomials outside the leading-term ideal; INFINITE when there are infinitely many."""
    if gb.is_unit():
        return []
    lms = gb.leading_monomials()
    nv = len(gb.variables)
    bounds = []
    for i in range(nv):
        pure = [lm[i] for lm in lms if all(lm[j] == 0 for j in range(nv) if j != i) and lm[i] > 0]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    out = []
    for exp in product(*(range(b) for b in bounds)):
        if not any(_divides(lm, exp) for lm in lms):
            out.append(exp)
    out.sort(key=grevlex_key)
    return out


def quotient_dimension(gb: GroebnerBasis):
    """Vector-space dimension of k[X,Y]/I, or INFINITE."""
    mons = standard_monomials(gb)
    if mons is INFINITE:
        return INFINITE
    return len(mons)


def _partials(f: Polynomial):
    if len(f.variables) != 2:
        raise PreconditionError("expected a polynomial in two variables")
    if f.is_constant():
        raise PreconditionError("expected a non-constant polynomial")
    x, y = f.variables
    return f.diff(x), f.diff(y)


def jacobian_basis(f: Polynomial) -> GroebnerBasis:
    return groebner(list(_partials(f)))


def milnor_pencil(f: Polynomial) -> int:
    """dim k[X,Y]/(f_X, f_Y)."""
    dim = quotient_dimension(jacobian_basis(f))
    if dim is INFINITE:
        raise InfiniteDimensionError("pencil has a non-reduced member")
    return dim


def tjurina_total(f: Polynomial) -> int:
    """dim k[X,Y]/(f, f_X, f_Y)."""
    fx, fy = _partials(f)
    dim = quotient_dimension(groebner([f, fx, fy]))
    if dim is INFINITE:
        raise InfiniteDimensionError("f has a multiple factor")
    return dim


def milnor_on_curve(f: Polynomial, mu_pencil=None) -> int:
    """Sum of local Milnor numbers over the points of the curve f = 0.

    Computed as dim k[X,Y]/(f_X, f_Y, f^N) with N = mu_pencil + 1: at
    critical points on the curve f^N already lies in the local Jacobian
    ideal, while off the curve f is a local unit and kills the component.
    """
    jb = jacobian_basis(f)
    if mu_pencil is None:
        mu_pencil = quotient_dimension(jb)
        if mu_pencil is INFINITE:
            raise InfiniteDimensionError("pencil has a non-reduced member")
    power = jb.normal_form(f.const_like(1))
    for _ in range(mu_pencil + 1):
        power = jb.normal_form(power * f)
    return quotient_dimension(groebner(list(jb.generators) + [power]))
