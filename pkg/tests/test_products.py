"""Subgroup products, their factorizations, and divisibility behavior."""

import math
import random

import pytest

from torusdiv.errors import ResourceCapError
from torusdiv.laurent import LaurentPoly, parse_poly
from torusdiv.lattice import (
    enumerate_cyclic_subgroups,
    generators,
    mu_n,
    mu_torus,
    subgroup,
    subgroups_of,
    subgroups_of_order,
    torsion_point,
    trivial_subgroup,
)
from torusdiv.numth import units_mod
from torusdiv.products import (
    FactoredProduct,
    conjugate_orbit_product,
    divisibility_check,
    factor_by_orbits,
    primitive_product,
    primitive_product_mobius,
    stabilizer_index,
    strong_divisibility_check,
    subgroup_product,
    subgroup_product_direct,
    torus_product,
)

FXY = parse_poly("X1 - X2 - 4")
MERSENNE = parse_poly("2*X1 - 1")


def random_laurent(rng, arity, max_terms=5, coeff=9, span=3):
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = tuple(rng.randint(-span, span) for _ in range(arity))
            terms[e] = terms.get(e, 0) + rng.randint(-coeff, coeff)
        f = LaurentPoly(arity, terms)
        if not f.is_zero():
            return f


def random_subgroup(rng, arity, max_order):
    return rng.choice(subgroups_of_order(arity, rng.randint(1, max_order)))


# ------------------------------------------------------------ exact examples


def test_paper_example_values():
    assert torus_product(FXY, 2) == 2**6 * 3
    assert torus_product(FXY, 4) == 2**16 * 3 * 5**3 * 13**2
    assert (
        torus_product(FXY, 6)
        == 2**18 * 3**6 * 5**2 * 7**5 * 13**2 * 19**2 * 31**2
    )


def test_w_routes_agree():
    for n in (1, 2, 3, 4, 6):
        full = mu_torus(2, n)
        a = torus_product(FXY, n)
        b = subgroup_product(FXY, full)
        c = subgroup_product_direct(FXY, full)
        assert a == b == c


def test_w_classical_and_zero_skipping():
    assert abs(subgroup_product(MERSENNE, mu_n(4))) == 15
    assert subgroup_product(parse_poly("X1 - 1"), mu_n(3)) == 3
    assert torus_product(parse_poly("X1 - 1"), 1) == 1  # empty product


def test_v_examples():
    assert primitive_product(FXY, mu_torus(2, 2)) == 1  # not cyclic
    assert primitive_product(FXY, subgroup(2, 2, [(1, 1)])) == -4
    assert primitive_product(FXY, trivial_subgroup(2)) == -4


def test_stabilizer_index_examples():
    # a support monomial of full order leaves nothing to collapse
    xi = torsion_point(1, 8, (1,))
    assert stabilizer_index(xi, [(1,), (0,)]) == (8, 1)
    # the even-support example: values of order 4 under an order-8 point
    assert stabilizer_index(xi, [(2,), (0,)]) == (4, 2)
    # support {1, 5} at i: the two monomials give the same value
    assert stabilizer_index(torsion_point(1, 4, (1,)), [(1,), (5,)]) == (4, 1)


def test_conjugate_orbit_product_examples():
    assert conjugate_orbit_product(parse_poly("X1 + X1^5"), torsion_point(1, 4, (1,))) == 4
    assert conjugate_orbit_product(parse_poly("X1 + 2"), torsion_point(1, 3, (1,))) == 3
    assert conjugate_orbit_product(FXY, torsion_point(2, 1, (0, 0))) == -4
    # vanishing evaluation reports 0
    assert conjugate_orbit_product(parse_poly("X1 - 1"), torsion_point(1, 1, (0,))) == 0


def test_factor_by_orbits_mersenne():
    rows = factor_by_orbits(MERSENNE, mu_n(6))
    by_order = {r.subgroup.order: r for r in rows}
    assert {o: r.value for o, r in by_order.items()} == {1: 1, 2: -3, 3: 7, 6: 3}
    assert all(r.exponent == 1 for r in rows)
    # magnitudes match the classical cyclotomic values at 2
    from torusdiv.polys import cyclotomic, peval

    for o, r in by_order.items():
        assert abs(r.value) == abs(peval(list(cyclotomic(o)), 2))
    prod = 1
    for r in rows:
        prod *= r.value**r.exponent
    assert prod == subgroup_product(MERSENNE, mu_n(6))


def test_factor_by_orbits_fxy():
    rows = factor_by_orbits(FXY, mu_torus(2, 2))
    values = sorted(r.value for r in rows)
    assert values == [-6, -4, -4, -2]
    prod = 1
    for r in rows:
        prod *= r.value**r.exponent
    assert prod == 192


def test_factor_by_orbits_trivial():
    rows = factor_by_orbits(FXY, trivial_subgroup(2))
    assert len(rows) == 1 and rows[0].value == -4


def test_factor_rows_flag_vanishing():
    f = parse_poly("X1 - 1")
    rows = factor_by_orbits(f, mu_n(6))
    flagged = [r for r in rows if r.vanished]
    assert len(flagged) == 1 and flagged[0].subgroup.order == 1


# ------------------------------------------------------ randomized identities


def test_product_of_primitive_parts_identity():
    rng = random.Random(31)
    count = 0
    while count < 25:
        arity = rng.randint(1, 2)
        f = random_laurent(rng, arity)
        sub = random_subgroup(rng, arity, 24)
        prod = 1
        for s in subgroups_of(sub):
            prod *= primitive_product(f, s)
        assert prod == subgroup_product(f, sub)
        count += 1


def test_primitive_product_dual_formulas_agree():
    rng = random.Random(32)
    count = 0
    while count < 15:
        arity = rng.randint(1, 2)
        f = random_laurent(rng, arity)
        sub = random_subgroup(rng, arity, 18)
        assert primitive_product(f, sub) == primitive_product_mobius(f, sub)
        count += 1


def test_conjugate_power_identity_and_well_definedness():
    rng = random.Random(33)
    count = 0
    while count < 20:
        arity = rng.randint(1, 2)
        f = random_laurent(rng, arity)
        cyc = rng.choice(enumerate_cyclic_subgroups(arity, 24))
        xi = generators(cyc)[0]
        c = conjugate_orbit_product(f, xi)
        _d, s = stabilizer_index(xi, f.support())
        if c != 0:
            assert primitive_product(f, cyc) == c**s
        for k in units_mod(cyc.exponent):
            assert conjugate_orbit_product(f, xi.power(k)) == c
        count += 1


def test_divisibility_is_a_poset_morphism():
    rng = random.Random(34)
    count = 0
    while count < 15:
        arity = rng.randint(1, 2)
        f = random_laurent(rng, arity)
        big = random_subgroup(rng, arity, 24)
        for small in subgroups_of(big):
            assert divisibility_check(f, small, big)
        count += 1


def test_divisibility_examples():
    assert divisibility_check(FXY, mu_torus(2, 2), mu_torus(2, 4))
    assert divisibility_check(MERSENNE, mu_n(2), mu_n(6))
    assert divisibility_check(FXY, mu_torus(2, 2), mu_torus(2, 2))
    with pytest.raises(ValueError):
        divisibility_check(FXY, mu_torus(2, 4), mu_torus(2, 2))


def test_closed_form_one_variable():
    rng = random.Random(35)
    count = 0
    while count < 20:
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        n = rng.randint(1, 40)
        if a == 0 or b == 0 or abs(a) == abs(b):
            continue
        f = LaurentPoly(1, {(1,): a, (0,): -b})
        w = torus_product(f, n)
        assert abs(w) == abs(a**n - b**n)
        assert w == (-1) ** n * (b**n - a**n)
        count += 1


# --------------------------------------------------------- strong divisibility


def test_strong_divisibility_fails_for_fxy():
    holds, g, meet = strong_divisibility_check(
        FXY, mu_torus(2, 4), mu_torus(2, 6), torus_n=(4, 6)
    )
    assert not holds
    assert g.value() == 2**16 * 3 * 5**2 * 13**2
    assert meet.value() == 2**6 * 3


def test_strong_divisibility_trivial_and_classical():
    holds, _, _ = strong_divisibility_check(FXY, mu_torus(2, 2), mu_torus(2, 2))
    assert holds
    holds, g, meet = strong_divisibility_check(MERSENNE, mu_n(4), mu_n(6))
    assert holds
    assert g.value() == 3 and abs(meet.value()) == 3


def test_mersenne_strong_divisibility_oracle():
    # gcd(2^a - 1, 2^b - 1) = 2^gcd(a,b) - 1
    rng = random.Random(36)
    for _ in range(10):
        a, b = rng.randint(1, 20), rng.randint(1, 20)
        holds, g, meet = strong_divisibility_check(MERSENNE, mu_n(a), mu_n(b))
        assert g.value() == 2 ** math.gcd(a, b) - 1
        assert holds


# ------------------------------------------------------------ factored values


def test_factored_product_roundtrip():
    fp = FactoredProduct.from_integer(2**16 * 3 * 5**3 * 13**2)
    assert fp.value() == 2**16 * 3 * 5**3 * 13**2
    assert str(fp) == "2^16 * 3 * 5^3 * 13^2"
    assert FactoredProduct.from_integer(-15).value() == -15
    assert str(FactoredProduct.from_integer(1)) == "1"
    assert str(FactoredProduct.from_integer(0)) == "0"


def test_factored_product_remainder():
    # two large primes beyond the trial bound stay unfactored
    p, q = 1000003, 1000033
    fp = FactoredProduct.from_integer(p * q, bound=10**3)
    assert fp.remainder == p * q or fp.probable
    assert fp.value() == p * q


def test_factored_product_probable_prime():
    p = 10**9 + 7
    fp = FactoredProduct.from_integer(2 * p, bound=10**3)
    assert fp.value() == 2 * p
    assert p in dict(fp.factors)
    assert p in fp.probable


def test_resource_caps():
    with pytest.raises(ResourceCapError):
        subgroup_product(FXY, mu_torus(2, 100), cap=100)
    with pytest.raises(ResourceCapError):
        torus_product(FXY, 100, cap=100)


def test_three_variable_cascade_agrees_with_direct():
    rng = random.Random(37)
    checked = 0
    while checked < 8:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(-2, 2) for _ in range(3))
            terms[e] = terms.get(e, 0) + rng.randint(-5, 5)
        f = LaurentPoly(3, terms)
        if f.is_zero():
            continue
        n = rng.randint(1, 3)
        assert torus_product(f, n) == subgroup_product_direct(f, mu_torus(3, n))
        checked += 1
    # vanishing factors force the exact fallback with point-by-point skips
    f = LaurentPoly(3, {(1, 0, 0): 1, (0, 0, 0): -1})
    assert torus_product(f, 2) == 16


def test_cyclic_generator_formulas():
    # for a cyclic group <xi> of order n: the primitive product runs over
    # the unit powers of xi, the full product over all powers (zeros
    # skipped); both checked against direct cyclotomic accumulation
    from torusdiv.cyclo import CycNum, eval_at

    rng = random.Random(38)
    count = 0
    while count < 12:
        arity = rng.randint(1, 2)
        f = random_laurent(rng, arity)
        cyc = rng.choice(enumerate_cyclic_subgroups(arity, 12))
        xi = generators(cyc)[0]
        n = cyc.exponent
        acc_v = CycNum.constant(n, 1)
        acc_w = CycNum.constant(n, 1)
        for d in range(n):
            val = eval_at(f, xi.power(d)).embed(n)
            if val.is_zero():
                continue
            acc_w = acc_w * val
            if n == 1 or math.gcd(d, n) == 1:
                acc_v = acc_v * val
        assert acc_w.as_integer() == subgroup_product(f, cyc)
        assert acc_v.as_integer() == primitive_product(f, cyc)
        count += 1
