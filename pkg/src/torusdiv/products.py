"""The central objects: subgroup products of a Laurent polynomial.

For a nonzero integer Laurent polynomial f and a finite subgroup S of the
torsion N-torus:

* subgroup_product(f, S)   -- product of f over all points of S, skipping
                              vanishing factors (the empty product is 1);
* torus_product(f, n)      -- the same for S = mu_n^N, computed by
                              eliminating one variable per pass against
                              x^n - 1 and finishing with the resultant
                              fast path, with an exact fallback when a
                              vanishing factor is detected mid-way;
* primitive_product(f, S)  -- product over the generators of a cyclic S
                              (1 when S is not cyclic), the factor that
                              Moebius inversion attaches to S;
* conjugate_orbit_product  -- the Galois-descended factor attached to a
                              single torsion point, the atomic piece of
                              the canonical factorization.

All values are exact arbitrary-precision integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import (
    CycNum,
    conjugate_product,
    eval_at,
    product_over_roots,
    ring_product_over_roots,
)
from .errors import InternalInvariantError, ResourceCapError
from .laurent import LaurentPoly
from .lattice import (
    MAX_ELEMENTS,
    FiniteSubgroup,
    TorsionPoint,
    contains,
    cyclic_subgroups_of,
    generators,
    is_cyclic,
    intersection,
    mobius,
    mu_torus,
    subgroups_of,
)
from .mpoly import SymPoly
from .numth import is_probable_prime, trial_factor, units_mod

FACTOR_BOUND = 10**6


# ------------------------------------------------------- factored rendering


@dataclass(frozen=True)
class FactoredProduct:
    """sign * prod p^e * remainder, with the remainder left unfactored."""

    sign: int
    factors: tuple[tuple[int, int], ...]
    remainder: int
    probable: tuple[int, ...] = ()

    @classmethod
    def from_integer(cls, value: int, bound: int = FACTOR_BOUND):
        if value == 0:
            return cls(0, (), 1)
        sign = 1 if value > 0 else -1
        fac, rest = trial_factor(abs(value), bound)
        probable = ()
        if rest > 1 and is_probable_prime(rest):
            fac[rest] = fac.get(rest, 0) + 1
            probable = (rest,)
            rest = 1
        return cls(sign, tuple(sorted(fac.items())), rest, probable)

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v * self.remainder

    def __str__(self):
        if self.sign == 0:
            return "0"
        parts = []
        for p, e in self.factors:
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        if self.remainder > 1:
            parts.append(f"{self.remainder} (unfactored)")
        if not parts:
            parts = ["1"]
        body = " * ".join(parts)
        return body if self.sign > 0 else f"-{body}"

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "factors": [[p, e] for p, e in self.factors],
            "remainder": self.remainder,
            "probable_primes": list(self.probable),
        }


# ------------------------------------------------------------ core products


def _check_arity(f: LaurentPoly, sub) -> None:
    if f.arity != sub.arity:
        raise ValueError("arity mismatch between polynomial and subgroup")
    if f.is_zero():
        raise ValueError("products of the zero polynomial are undefined")


def primitive_product(f: LaurentPoly, sub: FiniteSubgroup):
    """Product of f over the generators of sub; 1 if sub is not cyclic.

    Over Q the generators form a single Galois orbit, so either every
    factor vanishes (empty product) or none does and the product is the
    full conjugate product of one evaluation.
    """
    _check_arity(f, sub)
    if not is_cyclic(sub):
        return 1
    xi = generators(sub)[0]
    alpha = eval_at(f, xi)
    if alpha.is_zero():
        return 1
    return conjugate_product(alpha)


def subgroup_product(f: LaurentPoly, sub: FiniteSubgroup, cap: int = MAX_ELEMENTS):
    """Product of f over the points of sub with vanishing factors skipped."""
    _check_arity(f, sub)
    if sub.order > cap:
        raise ResourceCapError(f"subgroup of order {sub.order} exceeds cap {cap}")
    total = 1
    for cyc in cyclic_subgroups_of(sub, cap=cap):
        total *= primitive_product(f, cyc)
    return total


def subgroup_product_direct(f: LaurentPoly, sub: FiniteSubgroup, cap: int = MAX_ELEMENTS):
    """Same value as subgroup_product, evaluated point by point.

    Slower than the orbit route; serves as its independent cross-check.
    """
    from .lattice import elements

    _check_arity(f, sub)
    m = sub.exponent
    prod = CycNum.constant(m, 1)
    for pt in elements(sub, cap=cap):
        value = eval_at(f, pt).embed(m)
        if value.is_zero():
            continue
        prod = prod * value
    result = prod.as_integer()
    if result is None:
        raise InternalInvariantError("point product failed to descend to Z")
    return result


def torus_product(f: LaurentPoly, n: int, cap: int = MAX_ELEMENTS):
    """Product of f over mu_n^N (vanishing factors skipped), exactly."""
    return torus_product_with_flag(f, n, cap=cap)[0]


def torus_product_with_flag(f: LaurentPoly, n: int, cap: int = MAX_ELEMENTS):
    """(product over mu_n^N, whether any vanishing factor was skipped).

    One torus variable is eliminated per pass: the product of the current
    polynomial over x_k in mu_n is a polynomial in the remaining variables,
    assembled divisor-by-divisor from Galois-conjugate products.  The last
    variable goes through the univariate resultant path.  If a vanishing
    factor is detected (a cyclotomic factor shared with x^n - 1, or an
    identically vanishing layer), the whole computation falls back to the
    exact subgroup enumeration, which skips zeros point by point.
    """
    if f.is_zero():
        raise ValueError("products of the zero polynomial are undefined")
    if n < 1:
        raise ValueError("n must be positive")
    if n**f.arity > cap:
        raise ResourceCapError(f"mu_{n}^{f.arity} exceeds cap {cap}")
    if f.arity == 1:
        dense, _shift = f.as_dense_univariate()
        from .polys import pgcd_int, xn1

        had_zeros = len(pgcd_int(xn1(n), dense)) - 1 > 0
        return product_over_roots(f, n, skip_zeros=True), had_zeros
    cleared, _shift = f.cleared()
    # the unit correction for clearing is a product of n-th roots raised
    # to n^(N-1), which is an even power here, hence exactly 1
    current = SymPoly((), {})
    for exps, c in cleared.items():
        mono = SymPoly(
            tuple(f"X{i + 1}" for i in range(f.arity)),
            {tuple(exps): 1},
        )
        current = current + SymPoly.coerce(c) * mono
    for k in range(f.arity, 1, -1):
        result = ring_product_over_roots(current.coeffs_in(f"X{k}"), n)
        if result == 0:
            return subgroup_product(f, mu_torus(f.arity, n), cap=cap), True
        current = SymPoly.coerce(result)
    dense = [SymPoly.coerce(c) for c in current.coeffs_in("X1")]
    if all(c.is_constant() for c in dense):
        from .polys import pgcd_int, xn1

        dense_int = [c.constant_value() for c in dense]
        if len(pgcd_int(xn1(n), dense_int)) - 1 > 0:
            return subgroup_product(f, mu_torus(f.arity, n), cap=cap), True
        g = LaurentPoly(1, {(e,): c for e, c in enumerate(dense_int)})
        return product_over_roots(g, n, skip_zeros=False), False
    # coefficients live in a polynomial ring (one-parameter family): stay
    # on the generic conjugate-product path for the last variable too
    result = ring_product_over_roots(dense, n)
    if result == 0:
        return subgroup_product(f, mu_torus(f.arity, n), cap=cap), True
    return result, False


def stabilizer_index(xi: TorsionPoint, support) -> tuple[int, int]:
    """(d, s) for a torsion point and a monomial support.

    d is the order of the subgroup generated by the monomial values of xi
    on the support; s counts the units k = 1 mod d of Z/ord(xi), which is
    the degree of the cyclotomic field of xi over the field generated by
    those monomial values.
    """
    n = xi.modulus
    g = n
    for exps in support:
        g = gcd(g, xi.pairing(exps))
    d = n // g
    if n == 1:
        return 1, 1
    s = sum(1 for k in units_mod(n) if k % d == 1 % d)
    return d, s


def _coset_reps(n: int, d: int) -> list[int]:
    """Units of Z/n representing the unit classes of Z/d (d divides n)."""
    if n == 1:
        return [1]
    reps = []
    for u in units_mod(d) if d > 1 else [0]:
        k = u
        while gcd(k, n) != 1:
            k += d
        reps.append(k)
    return reps


def conjugate_orbit_product(f: LaurentPoly, xi: TorsionPoint):
    """Product of the distinct Galois conjugates of f(xi); an exact integer.

    The conjugates are taken over the field generated by the monomial
    values of xi on the support of f, so each distinct conjugate appears
    exactly once.  The value is 0 exactly when f(xi) = 0.
    """
    if f.is_zero():
        raise ValueError("products of the zero polynomial are undefined")
    alpha = eval_at(f, xi)
    if alpha.is_zero():
        return 0
    n = xi.modulus
    if n == 1:
        return alpha.as_integer()
    d, _s = stabilizer_index(xi, f.support())
    prod = CycNum.constant(n, 1)
    for k in _coset_reps(n, d):
        prod = prod * alpha.galois(k)
    value = prod.as_integer()
    if value is None:
        raise InternalInvariantError(
            "conjugate orbit product failed to descend to Z"
        )
    return value


@dataclass(frozen=True)
class OrbitFactor:
    """One row of the canonical factorization of a subgroup product."""

    subgroup: FiniteSubgroup
    point: TorsionPoint
    value: int
    exponent: int
    vanished: bool


def factor_by_orbits(
    f: LaurentPoly, sub: FiniteSubgroup, cap: int = MAX_ELEMENTS
) -> list[OrbitFactor]:
    """Factor the subgroup product into conjugate-orbit pieces.

    Over Q each cyclic subgroup contributes a single orbit (all its
    generators are conjugate), with multiplicity the stabilizer index.
    Vanishing orbits are reported with value 0 and excluded from the
    reconstruction, which is verified against the subgroup product.
    """
    _check_arity(f, sub)
    rows = []
    total = 1
    for cyc in cyclic_subgroups_of(sub, cap=cap):
        xi = generators(cyc)[0]
        _d, s = stabilizer_index(xi, f.support())
        value = conjugate_orbit_product(f, xi)
        vanished = value == 0
        if not vanished:
            total *= value**s
        rows.append(OrbitFactor(cyc, xi, value, s, vanished))
    if total != subgroup_product(f, sub, cap=cap):
        raise InternalInvariantError(
            "orbit factors do not reconstruct the subgroup product"
        )
    return rows


def primitive_product_mobius(
    f: LaurentPoly, sub: FiniteSubgroup, cap: int = MAX_ELEMENTS
):
    """The Moebius-inversion form of primitive_product (dual formula).

    Computes prod over subgroups S' <= S of W(S')^mu(S', S) in exact
    rational arithmetic; the result must be an integer.
    """
    _check_arity(f, sub)
    acc = Fraction(1)
    for small in subgroups_of(sub, cap=cap):
        e = mobius(small, sub, cap=cap)
        if e == 0:
            continue
        w = subgroup_product(f, small, cap=cap)
        acc *= Fraction(w) ** e
    if acc.denominator != 1:
        raise InternalInvariantError("Moebius product is not an integer")
    return acc.numerator


def divisibility_check(
    f: LaurentPoly, small: FiniteSubgroup, big: FiniteSubgroup
) -> bool:
    """Whether the product over `small` divides the product over `big`.

    True for every nested pair; exposed as a test surface.
    """
    if not contains(big, small):
        raise ValueError("small is not contained in big")
    w_small = subgroup_product(f, small)
    w_big = subgroup_product(f, big)
    return w_big % w_small == 0


def strong_divisibility_check(
    f: LaurentPoly,
    a: FiniteSubgroup,
    b: FiniteSubgroup,
    cap: int = MAX_ELEMENTS,
    torus_n: tuple[int, int] | None = None,
):
    """Compare gcd(W(a), W(b)) with W(a meet b) as ideals of Z.

    Returns (holds, gcd as FactoredProduct, meet value as FactoredProduct).
    When a and b are full torus groups mu_n^N, pass torus_n=(n_a, n_b) to
    route the two big products through the elimination fast path.
    """
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    if torus_n is not None:
        wa = torus_product(f, torus_n[0], cap=cap)
        wb = torus_product(f, torus_n[1], cap=cap)
    else:
        wa = subgroup_product(f, a, cap=cap)
        wb = subgroup_product(f, b, cap=cap)
    meet = intersection(a, b)
    w_meet = subgroup_product(f, meet, cap=cap)
    g = gcd(wa, wb)
    return g == abs(w_meet), FactoredProduct.from_integer(g), FactoredProduct.from_integer(w_meet)
