"""Symbolic coefficient computations and the X + 1/X + Y + 1/Y + T family.

Two symbolic layers share the SymPoly type:

* generic coefficients: every monomial position m in a prescribed support
  carries its own indeterminate a(m); the conjugate-orbit factors expand
  to integer-coefficient polynomials in those symbols and multiply back
  to the full subgroup product;
* the one-parameter family p_T = X + 1/X + Y + 1/Y + T, whose torus
  products are integer polynomials in T of degree n^2 with a large
  dihedral symmetry, giving an almost-8th-power factorization and big
  common factors between the T and 2T+4 members.
"""

import warnings
from dataclasses import dataclass
from math import lcm

from .cyclo import CycNum, eval_at
from .errors import InternalInvariantError, ResourceCapError
from .laurent import LaurentPoly
from .lattice import (
    FiniteSubgroup,
    TorsionPoint,
    cyclic_subgroups_of,
    generators,
    intersection,
    is_cyclic,
    torsion_point,
)
from .mpoly import SymPoly
from .polys import compose, pdivmod_field, pgcd_int, poly_sqrt
from .products import _coset_reps, stabilizer_index, torus_product

PT_FAMILY_CAP = 8


def coeff_symbol(exps) -> str:
    """The indeterminate name attached to a monomial position."""
    return "a(" + ",".join(str(e) for e in exps) + ")"


def generic_poly(support) -> LaurentPoly:
    """The generic Laurent polynomial with the given monomial support."""
    support = [tuple(m) for m in support]
    if not support:
        raise ValueError("empty monomial support")
    arity = len(support[0])
    return LaurentPoly(
        arity, {m: SymPoly.variable(coeff_symbol(m)) for m in support}
    )


def _warn_if_no_constant(support) -> None:
    if all(any(e != 0 for e in m) for m in support):
        warnings.warn(
            "support has no constant monomial: conjugate-orbit factors may "
            "factor further",
            stacklevel=3,
        )


def generic_conjugate_product(support, xi: TorsionPoint) -> SymPoly:
    """Conjugate-orbit factor of the generic polynomial at a torsion point.

    Expands the product of the Galois conjugates of f(xi) over the field
    generated by the monomial values of xi; the result is a polynomial in
    the coefficient symbols with integer coefficients, of degree the
    number of conjugates.
    """
    support = [tuple(m) for m in support]
    _warn_if_no_constant(support)
    f = generic_poly(support)
    if f.arity != xi.arity:
        raise ValueError("support arity does not match the point")
    alpha = eval_at(f, xi)
    n = xi.modulus
    if n == 1:
        value = alpha.as_constant()
    else:
        d, _s = stabilizer_index(xi, support)
        prod = CycNum.constant(n, 1)
        for k in _coset_reps(n, d):
            prod = prod * alpha.galois(k)
        value = prod.as_constant()
    if value is None:
        raise InternalInvariantError("generic conjugate product did not descend")
    value = SymPoly.coerce(value)
    if any(isinstance(c, bool) or not isinstance(c, int) for c in value.terms.values()):
        raise InternalInvariantError("generic conjugate product is not integral")
    return value


def generic_primitive_product(support, sub: FiniteSubgroup) -> SymPoly:
    """Product of the generic polynomial over the generators of sub.

    Equals the conjugate-orbit factor of one generator raised to the
    stabilizer index; the unit polynomial for non-cyclic sub.
    """
    if not is_cyclic(sub):
        return SymPoly.constant(1)
    xi = generators(sub)[0]
    support = [tuple(m) for m in support]
    _d, s = stabilizer_index(xi, support)
    return generic_conjugate_product(support, xi) ** s


@dataclass(frozen=True)
class GenericOrbitFactor:
    subgroup: FiniteSubgroup
    point: TorsionPoint
    value: SymPoly
    exponent: int


def generic_orbit_factorization(support, sub: FiniteSubgroup) -> list[GenericOrbitFactor]:
    """All conjugate-orbit factors of the generic subgroup product."""
    rows = []
    for cyc in cyclic_subgroups_of(sub):
        xi = generators(cyc)[0]
        _d, s = stabilizer_index(xi, [tuple(m) for m in support])
        rows.append(
            GenericOrbitFactor(cyc, xi, generic_conjugate_product(support, xi), s)
        )
    return rows


def generic_subgroup_product(support, sub: FiniteSubgroup) -> SymPoly:
    """Expanded generic subgroup product (use factored form when possible)."""
    total = SymPoly.constant(1)
    for row in generic_orbit_factorization(support, sub):
        total = total * row.value**row.exponent
    return total


# ----------------------------------------------------- linear-form analysis


def _normalized_forms(support, sub: FiniteSubgroup, conductor: int):
    """Linear forms of the generic polynomial at the generators of sub.

    Each generator gives the form sum_m w^(t_m) a_m with w of the common
    conductor; forms are compared after dividing out the unit on a fixed
    reference monomial, so equal sets mean a shared linear-form factor.
    """
    m0 = sorted(support)[0]
    forms = set()
    for xi in generators(sub):
        s = conductor // xi.modulus
        ts = {m: xi.pairing(m) * s % conductor for m in support}
        base = ts[m0]
        forms.add(tuple((ts[m] - base) % conductor for m in sorted(support)))
    return forms


def coprimality_check(support, a: FiniteSubgroup, b: FiniteSubgroup) -> bool:
    """Whether the generic primitive products of two cyclic subgroups are coprime.

    Works at the linear-form level: the primitive products are products of
    the forms attached to generators, and two forms agree up to a unit
    exactly when their normalized exponent tuples agree.  No multivariate
    gcd is ever computed.
    """
    support = [tuple(m) for m in support]
    if not (is_cyclic(a) and is_cyclic(b)):
        raise ValueError("coprimality check expects cyclic subgroups")
    if a == b:
        warnings.warn("coprimality check called with equal subgroups")
        return False
    conductor = lcm(a.exponent, b.exponent)
    return not (
        _normalized_forms(support, a, conductor)
        & _normalized_forms(support, b, conductor)
    )


def strong_div_symbolic(support, a: FiniteSubgroup, b: FiniteSubgroup) -> bool:
    """Verify the strong divisibility identity for the generic polynomial.

    gcd(W(a), W(b)) = W(a meet b) holds at the factored level when (i) the
    cyclic subgroups shared by a and b are exactly those of the meet, and
    (ii) every other pair of distinct cyclic subgroups has coprime
    primitive products.  Returns True when both are verified.
    """
    support = [tuple(m) for m in support]
    if len(support) < 2:
        raise ValueError("the support must contain at least two monomials")
    _warn_if_no_constant(support)
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    cyc_a = cyclic_subgroups_of(a)
    cyc_b = cyclic_subgroups_of(b)
    meet = intersection(a, b)
    shared = set(cyc_a) & set(cyc_b)
    if shared != set(cyclic_subgroups_of(meet)):
        return False
    conductor = lcm(a.exponent, b.exponent)
    forms_a = {s: _normalized_forms(support, s, conductor) for s in cyc_a}
    forms_b = {s: _normalized_forms(support, s, conductor) for s in cyc_b}
    for sa in cyc_a:
        for sb in cyc_b:
            if sa == sb:
                continue
            if forms_a[sa] & forms_b[sb]:
                return False
    return True


# ------------------------------------------------------------- the T family


def pt_poly(shift: tuple[int, int] = (1, 0)) -> LaurentPoly:
    """X + 1/X + Y + 1/Y + (u*T + v) for (u, v) = shift.

    pt_poly() is the T member; pt_poly((2, 4)) is the 2T+4 member.
    """
    u, v = shift
    t_term = SymPoly.variable("T") * u + v
    return LaurentPoly(
        2,
        {
            (1, 0): 1,
            (-1, 0): 1,
            (0, 1): 1,
            (0, -1): 1,
            (0, 0): t_term,
        },
    )


def pt_w(n: int, cap: int = PT_FAMILY_CAP) -> SymPoly:
    """The torus product of the T family member, as a polynomial in T.

    Degree n^2, computed by the same variable elimination as the integer
    torus products but over Z[T]; no factor can vanish since every factor
    has a monic T term.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ResourceCapError(f"family products are capped at n <= {cap}")
    value = torus_product(pt_poly(), n)
    value = SymPoly.coerce(value)
    if value.degree_in("T") != n * n:
        raise InternalInvariantError("family product has the wrong degree")
    return value


_D4_MATRICES = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((-1, 0), (0, -1)),
    ((0, -1), (-1, 0)),
    ((-1, 0), (0, 1)),
    ((1, 0), (0, -1)),
    ((0, -1), (1, 0)),
    ((0, 1), (-1, 0)),
)


def d4_orbit(u: int, v: int, n: int) -> frozenset:
    return frozenset(
        ((a * u + b * v) % n, (c * u + d * v) % n) for (a, b), (c, d) in _D4_MATRICES
    )


@dataclass(frozen=True)
class OrbitStats:
    """Census of the dihedral action on the n x n torsion grid."""

    n: int
    free_orbits: int
    free_points: int
    stabilized_points: int


def pt_orbit_stats(n: int) -> OrbitStats:
    """Count free (size-8) dihedral orbits on mu_n^2 by direct enumeration."""
    reps = _free_orbit_reps(n)
    free_points = 8 * len(reps)
    return OrbitStats(n, len(reps), free_points, n * n - free_points)


def _free_orbit_reps(n: int) -> list[tuple[int, int]]:
    reps = []
    for u in range(n):
        for v in range(n):
            orbit = d4_orbit(u, v, n)
            if len(orbit) == 8 and (u, v) == min(orbit):
                reps.append((u, v))
    return reps


def pt_eighth_power(n: int, cap: int = PT_FAMILY_CAP) -> tuple[SymPoly, SymPoly]:
    """Split the family product as A * B^8 with B from the free orbits.

    B is the product of the family polynomial over one representative per
    free dihedral orbit; the family polynomial is dihedral-invariant and
    the free orbits are permuted by the Galois action, so B descends to
    Z[T] with degree the number of free orbits.  A = W / B^8 exactly.
    """
    w = pt_w(n, cap=cap)
    f = pt_poly()
    prod = CycNum.constant(n, SymPoly.constant(1))
    reps = _free_orbit_reps(n)
    for rep in reps:
        alpha = eval_at(f, torsion_point(2, n, rep)).embed(n)
        prod = prod * alpha
    b = prod.as_constant()
    if b is None:
        raise InternalInvariantError("orbit product did not descend to Z[T]")
    b = SymPoly.coerce(b)
    if b.degree_in("T") != len(reps):
        raise InternalInvariantError("orbit product has the wrong degree")
    b8 = b**8
    quot, rem = pdivmod_field(w.to_dense("T"), b8.to_dense("T"))
    if rem:
        raise InternalInvariantError("eighth power does not divide the product")
    a = SymPoly.from_dense("T", quot)
    return a, b


def pt_gcd_lower_bound(n: int, cap: int = PT_FAMILY_CAP) -> tuple[SymPoly, int]:
    """Gcd of the 2T+4 and T members' products in Q[T], content-normalized."""
    w_t = pt_w(n, cap=cap).to_dense("T")
    w_shift = compose(w_t, [4, 2])
    g = pgcd_int(w_t, w_shift)
    return SymPoly.from_dense("T", g), len(g) - 1


def pt_shift_identity_check() -> bool:
    """The diagonal specialization identity behind the common factor.

    The 2T+4 member evaluated at (Z, Z) equals twice the T member at
    (1, Z), as Laurent polynomials in Z over Z[T].
    """
    lhs = pt_poly((2, 4)).transform_monomials([[1, 1]])
    rhs = 2 * pt_poly().transform_monomials([[0, 1]])
    return lhs == rhs


def pt_fourth_power_check(n: int, cap: int = PT_FAMILY_CAP) -> tuple[bool, str]:
    """Whether A_n divided by the first (odd n) or second (even n) product
    is an exact fourth power in Z[T].

    Returns (ok, reason); reason distinguishes a failed division from a
    failed square root.
    """
    a, _b = pt_eighth_power(n, cap=cap)
    base = pt_w(1) if n % 2 == 1 else pt_w(2)
    quot, rem = pdivmod_field(a.to_dense("T"), base.to_dense("T"))
    if rem:
        return False, "base product does not divide the cofactor"
    half = poly_sqrt(quot)
    if half is None:
        return False, "cofactor quotient is not a square"
    quarter = poly_sqrt(half)
    if quarter is None:
        return False, "square root of the quotient is not a square"
    return True, ""
