"""Exact univariate polynomial arithmetic, checked against slow oracles."""

import random
from fractions import Fraction

from torusdiv import polys


def sylvester_resultant(p, q):
    """Oracle: resultant as the Sylvester determinant over Q."""
    n, m = polys.deg(p), polys.deg(q)
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return p[0] ** m
    if m == 0:
        return q[0] ** n
    size = n + m
    rows = []
    for i in range(m):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(p)):
            row[i + j] = Fraction(c)
        rows.append(row)
    for i in range(n):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(q)):
            row[i + j] = Fraction(c)
        rows.append(row)
    # fraction-free enough: plain Gaussian elimination over Q
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            f = rows[r][col] * inv
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return det.numerator


def random_poly(rng, max_deg, lo=-9, hi=9):
    d = rng.randint(0, max_deg)
    p = [rng.randint(lo, hi) for _ in range(d + 1)]
    return polys.trim(p)


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(7)
    checked = 0
    while checked < 60:
        p = random_poly(rng, 6)
        q = random_poly(rng, 6)
        if not p or not q:
            continue
        assert polys.resultant(p, q) == sylvester_resultant(p, q)
        checked += 1


def test_resultant_of_xn_minus_1_is_product_over_roots():
    # Res(x^n - 1, g) = prod over n-th roots of g, exactly
    rng = random.Random(11)
    for _ in range(20):
        g = random_poly(rng, 4)
        if not g:
            continue
        n = rng.randint(1, 8)
        assert polys.resultant(polys.xn1(n), g) == sylvester_resultant(
            polys.xn1(n), g
        )


def test_cyclotomic_small_values():
    assert list(polys.cyclotomic(1)) == [-1, 1]
    assert list(polys.cyclotomic(2)) == [1, 1]
    assert list(polys.cyclotomic(6)) == [1, -1, 1]
    assert list(polys.cyclotomic(12)) == [1, 0, -1, 0, 1]


def test_cyclotomic_product_identity():
    from torusdiv.numth import divisors

    for m in range(1, 101):
        prod = [1]
        for d in divisors(m):
            prod = polys.pmul(prod, list(polys.cyclotomic(d)))
        assert prod == polys.xn1(m)


def test_cyclotomic_matches_mobius_construction():
    for m in range(1, 41):
        assert list(polys.cyclotomic(m)) == polys.cyclotomic_mobius(m)


def test_exact_division_detects_nonexactness():
    import pytest

    with pytest.raises(ValueError):
        polys.pdiv_exact([1, 1, 1], [1, 1])


def test_gcd_recovers_common_factor():
    rng = random.Random(3)
    for _ in range(30):
        common = random_poly(rng, 3)
        if polys.deg(common) < 1:
            continue
        a = polys.pmul(common, random_poly(rng, 3) or [1])
        b = polys.pmul(common, random_poly(rng, 3) or [2])
        g = polys.pgcd_int(a, b)
        polys.pdiv_exact(g, polys.primitive(common))


def test_poly_sqrt_roundtrip():
    rng = random.Random(5)
    for _ in range(30):
        p = random_poly(rng, 4)
        if not p:
            continue
        sq = polys.pmul(p, p)
        r = polys.poly_sqrt(sq)
        assert r is not None
        assert polys.pmul(r, r) == sq
    assert polys.poly_sqrt([1, 1]) is None
    assert polys.poly_sqrt([0, 0, -1]) is None


def test_compose_linear():
    # p(2T + 4) for p = T^2 + 1
    assert polys.compose([1, 0, 1], [4, 2]) == [17, 16, 4]
