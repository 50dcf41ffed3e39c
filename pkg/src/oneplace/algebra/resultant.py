"""Resultants over polynomial rings and squarefree decomposition.

Sign convention: ``Res(p, q) = lc(p)^deg(q) * prod q(roots of p)``, which is
the determinant of the Sylvester matrix with the rows of ``p`` on top.
With this convention ``Res_Y(Y^3 - X^2, 3*Y^2) = 27*X^4``.
"""

from __future__ import annotations

from ..errors import PreconditionError
from . import univariate as up
from .polynomial import Polynomial

SYLVESTER_MAX_DEGREE = 4


def _coeff_list(p: Polynomial, var):
    """Coefficients of p in var, highest degree first, as polynomials free of var."""
    coeffs = p.coefficients_in(var)
    d = p.degree(var)
    zero = p.zero_like()
    return [coeffs.get(k, zero) for k in range(d, -1, -1)]


def sylvester_matrix(p: Polynomial, q: Polynomial, var):
    a = _coeff_list(p, var)
    b = _coeff_list(q, var)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = p.zero_like()
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix):
    """Fraction-free determinant over a polynomial ring (exact divisions only)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    a = [list(row) for row in matrix]
    one = a[0][0].const_like(1)
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0].zero_like()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _prem(a, b):
    """Pseudo-remainder ``lc(b)^(deg a - deg b + 1) * a mod b`` on coefficient lists.

    Lists are highest degree first with polynomial entries.
    """
    db = len(b) - 1
    lb = b[0]
    e = len(a) - len(b) + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        lead = r[0]
        r = [x * lb for x in r]
        for j in range(len(b)):
            r[j] = r[j] - lead * b[j]
        r = r[1:]
        e -= 1
        while r and r[0].is_zero():
            r = r[1:]
    if e > 0 and r:
        f = lb**e
        r = [x * f for x in r]
    return r


def subresultant_resultant(p: Polynomial, q: Polynomial, var):
    """Resultant via the subresultant pseudo-remainder sequence (Collins-Brown-Traub)."""
    A = _coeff_list(p, var)
    B = _coeff_list(q, var)
    zero = p.zero_like()
    one = p.const_like(1)
    da, db = len(A) - 1, len(B) - 1
    s = 1
    if da < db:
        A, B = B, A
        da, db = db, da
        if da % 2 == 1 and db % 2 == 1:
            s = -1
    if db == 0:
        return B[0] ** da * s
    g = one
    h = one
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        A = B
        if not R:
            return zero
        divisor = g * h**delta
        B = [c.exact_div(divisor) for c in R]
        g = A[0]
        if delta >= 1:
            h = (g**delta).exact_div(h ** (delta - 1))
        if len(B) - 1 == 0:
            break
    da = len(A) - 1
    lcB = B[0]
    if da == 0:
        res = one
    else:
        res = (lcB**da).exact_div(h ** (da - 1))
    return res * s


def resultant(p: Polynomial, q: Polynomial, var, method=None):
    """Resultant of p and q with respect to ``var``; a polynomial free of var.

    ``method`` is ``"sylvester"``, ``"subresultant"`` or ``None`` (Sylvester
    up to degree 4, subresultants beyond).
    """
    if p.variables != q.variables:
        raise ValueError("resultant operands must share variables")
    dp, dq = p.degree(var), q.degree(var)
    if p.is_zero() or q.is_zero():
        raise PreconditionError("resultant with the zero polynomial is undefined")
    if dp == 0 and dq == 0:
        raise PreconditionError("resultant of two polynomials constant in " + var)
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp
    if method is None:
        method = "sylvester" if max(dp, dq) <= SYLVESTER_MAX_DEGREE else "subresultant"
    if method == "sylvester":
        return bareiss_determinant(sylvester_matrix(p, q, var))
    if method == "subresultant":
        return subresultant_resultant(p, q, var)
    raise ValueError(f"unknown resultant method {method!r}")


def squarefree_decomposition(p: Polynomial):
    """Monic squarefree, pairwise coprime factors with multiplicities.

    ``p == lc(p) * prod(f**m for f, m in result)``; multiplicities strictly
    increase.  The decomposition groups by multiplicity only; it does not
    factor further.
    """
    if len(p.variables) != 1:
        raise ValueError("squarefree_decomposition expects a univariate polynomial")
    if p.is_zero():
        raise PreconditionError("squarefree decomposition of zero")
    var = p.variables[0]
    parts = up.squarefree(p.to_univariate())
    return [(Polynomial.from_univariate(f, var, p.field), m) for f, m in parts]
