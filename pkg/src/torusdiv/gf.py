"""Arithmetic in small finite field extensions F_(p^k).

Used by the scanning layer: the n-th roots of unity live in F_(p^k) for
k the multiplicative order of p mod n, so products of a polynomial over a
torsion subgroup can be computed mod p without big integers.  Elements
are coefficient tuples mod an irreducible modulus polynomial, found by a
seeded random search with a deterministic irreducibility test.
"""

import random
from functools import lru_cache

from .errors import InternalInvariantError
from .numth import factorint, multiplicative_order


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _polmod(a, h, p):
    a = [c % p for c in a]
    dh = len(h) - 1
    inv = pow(h[-1], -1, p)
    while len(a) - 1 >= dh:
        c = a[-1] * inv % p
        if c:
            k = len(a) - 1 - dh
            for i, b in enumerate(h):
                a[k + i] = (a[k + i] - c * b) % p
        a.pop()
        _trim(a)
    return a


def _polmulmod(a, b, h, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polmod(out, h, p)


def _polpowmod(a, e, h, p):
    result = [1]
    base = _polmod(list(a), h, p)
    while e:
        if e & 1:
            result = _polmulmod(result, base, h, p)
        base = _polmulmod(base, base, h, p)
        e >>= 1
    return result


def _polgcd(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    _trim(a)
    _trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b) and r:
            c = r[-1] * inv % p
            k = len(r) - len(b)
            for i, x in enumerate(b):
                r[k + i] = (r[k + i] - c * x) % p
            r.pop()
            _trim(r)
        a, b = b, r
    return a


def _is_irreducible(h, p, k):
    # x^(p^k) == x mod h, and x^(p^(k/q)) - x coprime to h for prime q | k
    x = [0, 1]
    xp = _polpowmod(x, p**k, h, p)
    if _trim([(a - b) % p for a, b in _pad(xp, x)]):
        return False
    for q in factorint(k):
        xq = _polpowmod(x, p ** (k // q), h, p)
        diff = _trim([(a - b) % p for a, b in _pad(xq, x)])
        g = _polgcd(diff, h, p)
        if len(g) - 1 > 0:
            return False
    return True


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


@lru_cache(maxsize=None)
def field_modulus(p: int, k: int) -> tuple:
    """A monic irreducible polynomial of degree k over F_p (deterministic)."""
    if k == 1:
        return (0, 1)
    rng = random.Random(p * 1000003 + k)
    while True:
        h = [rng.randrange(p) for _ in range(k)] + [1]
        if _is_irreducible(h, p, k):
            return tuple(h)


class GFExt:
    """The field F_(p^k); elements are coefficient tuples of length <= k."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.modulus = list(field_modulus(p, k))
        self.size = p**k

    def constant(self, c: int):
        c %= self.p
        return (c,) if c else ()

    def add(self, a, b):
        return tuple(_trim([(x + y) % self.p for x, y in _pad(list(a), list(b))]))

    def mul(self, a, b):
        return tuple(_polmulmod(list(a), list(b), self.modulus, self.p))

    def scale(self, a, c: int):
        c %= self.p
        return tuple(_trim([x * c % self.p for x in a]))

    def pow(self, a, e: int):
        return tuple(_polpowmod(list(a), e, self.modulus, self.p))

    def is_zero(self, a) -> bool:
        return not any(a)

    def as_prime_field(self, a):
        """The value as an integer mod p if it lies in F_p, else None."""
        if not any(a):
            return 0
        if all(c == 0 for c in a[1:]):
            return a[0]
        return None

    def root_of_unity(self, n: int):
        """An element of multiplicative order exactly n (requires n | p^k - 1)."""
        if (self.size - 1) % n != 0:
            raise ValueError(f"no order-{n} root of unity in F_{self.p}^{self.k}")
        rng = random.Random(self.p * 2000003 + self.k * 7 + n)
        cof = (self.size - 1) // n
        qs = list(factorint(n))
        while True:
            z = tuple(_trim([rng.randrange(self.p) for _ in range(self.k)]))
            if self.is_zero(z):
                continue
            w = self.pow(z, cof)
            if self.is_zero(w):
                continue
            if all(self.pow(w, n // q) != (1,) for q in qs):
                if self.pow(w, n) != (1,):
                    raise InternalInvariantError("root of unity search failed")
                return w


@lru_cache(maxsize=None)
def field_for_roots(p: int, n: int) -> tuple:
    """(field, order-n root) for the smallest extension of F_p containing mu_n."""
    if n % p == 0:
        raise ValueError("p divides n: the n-th roots of unity are not distinct")
    k = multiplicative_order(p, n) if n > 1 else 1
    field = GFExt(p, k)
    return field, field.root_of_unity(n) if n > 1 else (1,)
