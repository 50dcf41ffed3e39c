"""Dense univariate polynomials over a field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.  Coefficients are any
field elements supporting ``+ - * /`` and comparison with ``0``.
"""

from fractions import Fraction
from math import comb, isqrt, lcm
from math import gcd as igcd


def strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return strip(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if c == 0:
        return []
    return strip([c * a for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return strip(out)


def power(p, e):
    result = [1]
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = list(p)
    dq = len(q) - 1
    inv = 1 / q[-1] if not isinstance(q[-1], int) else Fraction(1, q[-1])
    quot = [0] * max(len(p) - dq, 0)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i]
        if c == 0:
            continue
        c = c * inv
        quot[i - dq] = c
        for j in range(dq + 1):
            p[i - dq + j] = p[i - dq + j] - c * q[j]
    return strip(quot), strip(p[:dq])


def rem(p, q):
    return divmod_(p, q)[1]


def monic(p):
    if not p:
        return []
    lc = p[-1]
    if lc == 1:
        return list(p)
    inv = 1 / lc if not isinstance(lc, int) else Fraction(1, lc)
    return [c * inv for c in p]


def gcd(p, q):
    """Monic greatest common divisor."""
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def ext_gcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = list(p), list(q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [], []
    lc = r0[-1]
    inv = 1 / lc if not isinstance(lc, int) else Fraction(1, lc)
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p):
    return strip([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p, q):
    """``p(q(t))``."""
    acc = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c] if c != 0 else [])
    return acc


def taylor_shift(p, a):
    """``p(t + a)``."""
    n = len(p)
    out = [0] * n
    for i, c in enumerate(p):
        if c == 0:
            continue
        apow = 1
        for j in range(i, -1, -1):
            out[j] = out[j] + c * comb(i, j) * apow
            apow = apow * a
    return strip(out)


def squarefree(p):
    """Yun's algorithm: monic pairwise-coprime squarefree factors with multiplicities.

    Returns ``[(factor, multiplicity), ...]`` with multiplicities strictly
    increasing; ``p == lc(p) * prod(factor**multiplicity)``.
    """
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    if len(p) == 1:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def integer_normalize(p):
    """Scale a rational polynomial to a primitive integer polynomial (positive lc)."""
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def rational_roots(p):
    """Distinct rational roots of a rational polynomial (rational root theorem)."""
    p = strip(p)
    if len(p) <= 1:
        return []
    roots = []
    shift = 0
    while p[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
    q = integer_normalize(p[shift:])
    if len(q) == 1:
        return roots
    a0, an = q[0], q[-1]
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and evaluate(q, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def has_rational_quadratic_factor(p):
    """True when a rational quartic splits as a product of two rational quadratics."""
    q = integer_normalize(p)
    if len(q) != 5:
        raise ValueError("expected a quartic")
    # lc^3 * q(x / lc) is monic with integer coefficients
    lc = q[-1]
    e0, e1, e2, e3 = (q[i] * lc ** (3 - i) for i in range(4))
    # (x^2 + p x + r)(x^2 + u x + s): p+u=e3, r+s+pu=e2, ps+ru=e1, rs=e0
    if e0 == 0:
        return True
    for r in _divisors(e0):
        for r_ in (r, -r):
            s = e0 // r_
            if r_ != s:
                num = e1 - e3 * r_
                den = s - r_
                if num % den:
                    continue
                pc = num // den
                u = e3 - pc
                if r_ + s + pc * u == e2:
                    return True
            else:
                if r_ * e3 != e1:
                    continue
                # p + u = e3, p u = e2 - 2r
                disc = e3 * e3 - 4 * (e2 - 2 * r_)
                if disc >= 0 and isqrt(disc) ** 2 == disc and (e3 + isqrt(disc)) % 2 == 0:
                    return True
    return False
