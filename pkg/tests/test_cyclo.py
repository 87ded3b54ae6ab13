"""Cyclotomic integer arithmetic and root-of-unity products."""

import random

import pytest

from torusdiv.cyclo import (
    CycNum,
    as_integer,
    conjugate_product,
    eval_at,
    galois_apply,
    product_over_roots,
    product_over_roots_direct,
    ring_product_over_roots,
)
from torusdiv.laurent import LaurentPoly, parse_poly
from torusdiv.lattice import torsion_point
from torusdiv.numth import units_mod


def test_ring_ops_conductor_4():
    i = CycNum.root_power(4, 1)
    assert (i * i).as_integer() == -1
    assert (i + (-i)).is_zero()
    with pytest.raises(ValueError):
        i + CycNum.root_power(3, 1)


def test_basis_reduction_conductor_5():
    # x * x^3 = x^4 reduces to -(1 + x + x^2 + x^3) mod Phi_5
    a = CycNum.root_power(5, 1)
    b = CycNum.root_power(5, 3)
    assert (a * b).coeffs == (-1, -1, -1, -1)
    assert (a * b) == CycNum.root_power(5, 4)


def test_eval_examples():
    f = parse_poly("X1 - X2 - 4")
    assert eval_at(f, torsion_point(2, 2, (1, 0))).as_integer() == -6
    assert eval_at(parse_poly("2*X1 - 1"), torsion_point(1, 1, (0,))).as_integer() == 1
    assert eval_at(parse_poly("X1^2"), torsion_point(1, 4, (1,))).as_integer() == -1


def test_galois_examples():
    alpha = CycNum.root_power(4, 1)
    assert galois_apply(1, alpha) == alpha
    assert galois_apply(3, alpha) == -alpha
    assert galois_apply(2, CycNum.root_power(5, 1)) == CycNum.root_power(5, 2)
    with pytest.raises(ValueError):
        galois_apply(2, alpha)


def test_galois_is_ring_homomorphism():
    rng = random.Random(1)
    for _ in range(30):
        m = rng.randint(2, 20)
        a = CycNum(m, [rng.randint(-5, 5) for _ in range(m)])
        b = CycNum(m, [rng.randint(-5, 5) for _ in range(m)])
        for k in units_mod(m):
            assert (a * b).galois(k) == a.galois(k) * b.galois(k)
            assert (a + b).galois(k) == a.galois(k) + b.galois(k)


def test_as_integer():
    three = CycNum.constant(12, 3)
    assert as_integer(three) == 3
    assert as_integer(CycNum.root_power(4, 1)) is None
    i = CycNum.root_power(4, 1)
    assert as_integer(i * (-i)) == 1


def test_galois_eval_commutation_random():
    rng = random.Random(2)
    for _ in range(40):
        arity = rng.randint(1, 2)
        terms = {}
        for _ in range(rng.randint(1, 5)):
            e = tuple(rng.randint(-3, 3) for _ in range(arity))
            terms[e] = terms.get(e, 0) + rng.randint(-9, 9)
        f = LaurentPoly(arity, terms)
        if f.is_zero():
            continue
        m = rng.randint(1, 24)
        xi = torsion_point(arity, m, [rng.randrange(m) for _ in range(arity)])
        alpha = eval_at(f, xi)
        for k in units_mod(xi.modulus):
            kk = k if xi.modulus > 1 else 1
            assert galois_apply(kk, alpha) == eval_at(f, xi.power(kk))


def test_norm_descends_to_integers():
    rng = random.Random(3)
    for _ in range(30):
        m = rng.randint(1, 24)
        alpha = CycNum(m, [rng.randint(-9, 9) for _ in range(max(m, 1))])
        value = conjugate_product(alpha)
        assert isinstance(value, int)


def test_product_over_roots_examples():
    # the classical sequence: |prod (2z - 1)| over mu_4 is 2^4 - 1
    g = parse_poly("2*X1 - 1")
    assert abs(product_over_roots(g, 4)) == 15
    # signed value: even n flips the sign of a^n - b^n
    assert product_over_roots(g, 4) == -15
    assert product_over_roots(parse_poly("X1 - 1"), 3, skip_zeros=True) == 3
    assert product_over_roots(parse_poly("X1 - 2"), 1) == -1
    # without skipping, a vanishing factor kills the product
    assert product_over_roots(parse_poly("X1 - 1"), 3, skip_zeros=False) == 0


def test_resultant_path_equals_direct_path():
    rng = random.Random(4)
    checked = 0
    while checked < 100:
        terms = {}
        for _ in range(rng.randint(1, 5)):
            e = (rng.randint(-3, 5),)
            terms[e] = terms.get(e, 0) + rng.randint(-9, 9)
        g = LaurentPoly(1, terms)
        if g.is_zero():
            continue
        n = rng.randint(1, 30)
        skip = rng.random() < 0.5
        assert product_over_roots(g, n, skip) == product_over_roots_direct(g, n, skip)
        checked += 1


def test_ring_product_matches_integer_product():
    rng = random.Random(5)
    for _ in range(40):
        deg = rng.randint(0, 5)
        dense = [rng.randint(-9, 9) for _ in range(deg + 1)]
        if not any(dense):
            continue
        n = rng.randint(1, 20)
        g = LaurentPoly(1, {(e,): c for e, c in enumerate(dense)})
        assert ring_product_over_roots(dense, n) == product_over_roots_direct(
            g, n, False
        )


def test_monomial_products():
    # prod of c*z^k over mu_n: c^n times a unit from the root product
    g = LaurentPoly(1, {(1,): 3})
    assert product_over_roots(g, 2) == -9  # 3z at z=1,-1: 3 * -3
    assert product_over_roots(g, 3) == 27


def test_embed_consistency():
    a = CycNum.root_power(3, 1)
    b = a.embed(12)
    assert b.conductor == 12
    assert (b * b * b).as_integer() == 1
    with pytest.raises(ValueError):
        a.embed(10)
