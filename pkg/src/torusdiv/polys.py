"""Dense univariate polynomial arithmetic over Z and Q.

Polynomials are coefficient lists [a_0, a_1, ..., a_n] with exact int or
Fraction entries and a nonzero leading coefficient ([] is the zero
polynomial).  Provides exact division, primitive-PRS gcd, the subresultant
resultant, cyclotomic polynomials, and exact polynomial square roots.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .numth import classical_mobius, divisors


def trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p) -> int:
    """Degree, with deg(0) == -1."""
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def psub(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


def pneg(p):
    return [-c for c in p]


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def pscale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def peval(p, x):
    y = 0
    for c in reversed(p):
        y = y * x + c
    return y


def pdivmod_field(p, q):
    """Quotient and remainder in Q[x]; coefficients become Fractions."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    d = deg(q)
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - d, 0)
    while deg(r) >= d:
        k = deg(r) - d
        c = r[-1] / lead
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        trim(r)
    return trim(quot), r


def pdiv_exact(p, q):
    """Exact division p / q; raises if the remainder is nonzero.

    Integer inputs give integer output when the division is exact over Z.
    """
    quot, rem = pdivmod_field(p, q)
    if rem:
        raise ValueError("polynomial division is not exact")
    return _defract(quot)


def _defract(p):
    out = []
    for c in p:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                return [Fraction(a) for a in p]
            out.append(c.numerator)
        else:
            out.append(c)
    return out


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, int(c))
    return g


def primitive(p):
    """Primitive part with positive leading coefficient (int polys)."""
    if not p:
        return []
    g = content(p)
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def pgcd_int(p, q):
    """Primitive gcd in Z[x] via the primitive polynomial remainder sequence."""
    a = primitive([int(c) for c in p]) if p else []
    b = primitive([int(c) for c in q]) if q else []
    if not a:
        return b
    if not b:
        return a
    if deg(a) < deg(b):
        a, b = b, a
    while b:
        # pseudo-remainder keeps everything in Z[x]
        r = a
        d = deg(b)
        lead = b[-1]
        while deg(r) >= d and r:
            k = deg(r) - d
            c = r[-1]
            r = psub(pscale(r, lead), pscale([0] * k + b, c))
        a, b = b, primitive(r)
    return primitive(a)


def prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    db = deg(b)
    lead = b[-1]
    r = list(a)
    for _ in range(deg(a) - db + 1):
        if r and deg(r) >= db:
            k = deg(r) - db
            c = r[-1]
            r = psub(pscale(r, lead), pscale([0] * k + b, c))
        else:
            r = pscale(r, lead)
    return r


def resultant(p, q) -> int:
    """Resultant of integer polynomials via the subresultant PRS.

    Classical subresultant bookkeeping (Cohen, Algorithm 3.3.7); every
    intermediate division is exact over Z.
    """
    a = [int(c) for c in p]
    b = [int(c) for c in q]
    if not a or not b:
        return 0
    if deg(a) == 0:
        return a[0] ** deg(b)
    if deg(b) == 0:
        return b[0] ** deg(a)
    s = 1
    if deg(a) < deg(b):
        if deg(a) % 2 == 1 and deg(b) % 2 == 1:
            s = -s
        a, b = b, a
    ca, cb = abs(content(a)), abs(content(b))
    t = ca ** deg(b) * cb ** deg(a)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    g, h = 1, 1
    while True:
        da, db = deg(a), deg(b)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = prem(a, b)
        if not r:
            return 0
        div = g * h**delta
        a, b = b, [c // div for c in r]
        g = a[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if deg(b) == 0:
            break
    da = deg(a)
    return s * t * (b[0] ** da // h ** (da - 1))


def xn1(n: int):
    """x^n - 1."""
    p = [0] * (n + 1)
    p[0] = -1
    p[n] = 1
    return p


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple:
    """The m-th cyclotomic polynomial, as a coefficient tuple over Z.

    Built from prod_(d|m) Phi_d = x^m - 1 by exact division, so the whole
    divisor tower is verified as a side effect.
    """
    p = xn1(m)
    for d in divisors(m):
        if d < m:
            p = pdiv_exact(p, list(cyclotomic(d)))
    return tuple(p)


def cyclotomic_mobius(m: int):
    """Independent construction: prod_(d|m) (x^(m/d) - 1)^mu(d)."""
    num, den = [1], [1]
    for d in divisors(m):
        mu = classical_mobius(d)
        if mu == 1:
            num = pmul(num, xn1(m // d))
        elif mu == -1:
            den = pmul(den, xn1(m // d))
    return pdiv_exact(num, den)


def pgcd_rational(p, q):
    """Gcd in Q[x], returned as a primitive integer polynomial."""
    a = _clear_denominators(p)
    b = _clear_denominators(q)
    return pgcd_int(a, b)


def _clear_denominators(p):
    denom = 1
    for c in p:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
    return [int(c * denom) for c in p]


def poly_sqrt(p):
    """Exact square root in Q[x], or None if p is not a perfect square."""
    if not p:
        return []
    n = deg(p)
    if n % 2 == 1:
        return None
    coeffs = [Fraction(c) for c in p]
    lead = coeffs[-1]
    if lead < 0:
        return None
    root_lead = _fraction_sqrt(lead)
    if root_lead is None:
        return None
    m = n // 2
    r = [Fraction(0)] * (m + 1)
    r[m] = root_lead
    # solve for coefficients from the top down: matching degree n - k
    for k in range(1, m + 1):
        acc = Fraction(0)
        for i in range(1, k):
            acc += r[m - i] * r[m - k + i]
        r[m - k] = (coeffs[n - k] - acc) / (2 * root_lead)
    if pmul(r, r) != [Fraction(c) for c in p]:
        return None
    return _defract(r)


def _fraction_sqrt(x: Fraction):
    from math import isqrt

    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def compose(p, q):
    """p(q(x)) by Horner's rule."""
    out = []
    for c in reversed(p):
        out = padd(pmul(out, q), [c])
    return out
