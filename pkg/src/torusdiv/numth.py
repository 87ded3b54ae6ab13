"""Elementary number theory helpers shared across the package.

Everything here is exact integer arithmetic: trial factorization with a
configurable bound, deterministic-for-64-bit Miller-Rabin, divisor lists,
Euler totient, unit groups and multiplicative orders.
"""

from math import gcd, isqrt

# Miller-Rabin with these bases is deterministic below 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def trial_factor(n: int, bound: int = 10**6) -> tuple[dict[int, int], int]:
    """Factor n by trial division up to `bound`.

    Returns (prime -> exponent, unfactored cofactor). n must be positive.
    """
    if n <= 0:
        raise ValueError("trial_factor expects a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d <= bound and d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        d += 6
    if n > 1 and (d * d > n or n <= bound * bound):
        # no divisor up to min(bound, sqrt(n)), so the cofactor is prime
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


def factorint(n: int) -> dict[int, int]:
    """Full factorization by trial division; intended for small n."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    factors, rest = trial_factor(n, bound=isqrt(n) + 1)
    if rest > 1:
        factors[rest] = factors.get(rest, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    """Sorted list of positive divisors."""
    n = abs(n)
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    result = n
    for p in factorint(n):
        result = result // p * (p - 1)
    return result


def units_mod(m: int) -> list[int]:
    """The unit group (Z/mZ)^*, sorted. units_mod(1) == [0] (the identity)."""
    if m == 1:
        return [0]
    return [k for k in range(1, m) if gcd(k, m) == 1]


def multiplicative_order(a: int, m: int) -> int:
    """Order of a modulo m; requires gcd(a, m) == 1."""
    if m == 1:
        return 1
    a %= m
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    order = totient(m)
    for p in factorint(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def gcd_list(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def classical_mobius(n: int) -> int:
    """Moebius function on the divisor lattice of the integers."""
    mu = 1
    for _, e in factorint(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu
