"""Exact arithmetic in Z[x]/(Phi_m(x)) and products over roots of unity.

CycNum holds a coefficient vector of length phi(m) in the power basis of
the m-th cyclotomic field; reduction mod Phi_m is applied after every
operation, so a Galois-stable product can be recognized exactly as a
rational integer.  The coefficient entries may be ints or any exact ring
elements with +/-/* (the symbolic layer passes SymPoly), which is what
lets one engine serve the integer, generic-coefficient and one-parameter
computations.

product_over_roots is the resultant fast path for one variable: the
product of g over mu_n equals Res(x^n - 1, g~) up to the unit from
clearing denominators, with vanishing factors removed exactly through a
gcd with x^n - 1.
"""

from functools import lru_cache
from math import gcd

from .errors import InternalInvariantError
from .laurent import LaurentPoly
from .lattice import TorsionPoint
from .numth import divisors, totient, units_mod
from .polys import cyclotomic, pgcd_int, pdiv_exact, resultant, xn1

cyclotomic_poly = cyclotomic


@lru_cache(maxsize=None)
def _phi(m: int) -> int:
    return totient(m)


def _reduce(vec, m: int):
    """Reduce a coefficient list modulo Phi_m; returns length phi(m)."""
    phi = _phi(m)
    mod = cyclotomic(m)
    vec = list(vec)
    if len(vec) < phi:
        vec += [0] * (phi - len(vec))
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c == 0:
            continue
        vec[i] = 0
        base = i - phi
        for j in range(phi):
            vec[base + j] = vec[base + j] - c * mod[j]
    return vec[:phi]


class CycNum:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs, reduce: bool = True):
        self.conductor = conductor
        self.coeffs = tuple(_reduce(coeffs, conductor)) if reduce else tuple(coeffs)

    @classmethod
    def zero(cls, m: int):
        return cls(m, [0] * _phi(m), reduce=False)

    @classmethod
    def constant(cls, m: int, c):
        vec = [0] * _phi(m)
        vec[0] = c
        return cls(m, vec, reduce=False)

    @classmethod
    def root_power(cls, m: int, e: int, c=1):
        """c * w^e for the canonical primitive m-th root w."""
        vec = [0] * m
        vec[e % m] = c
        return cls(m, vec)

    def _check(self, other):
        if self.conductor != other.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other):
        self._check(other)
        return CycNum(
            self.conductor,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            reduce=False,
        )

    def __sub__(self, other):
        self._check(other)
        return CycNum(
            self.conductor,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
            reduce=False,
        )

    def __neg__(self):
        return CycNum(self.conductor, [-a for a in self.coeffs], reduce=False)

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            return CycNum(
                self.conductor, [a * other for a in self.coeffs], reduce=False
            )
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                out[i + j] = out[i + j] + x * y
        return CycNum(self.conductor, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return (
                self.conductor == other.conductor and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def galois(self, k: int) -> "CycNum":
        """The automorphism w -> w^k; k must be a unit mod the conductor."""
        m = self.conductor
        if m > 1 and gcd(k, m) != 1:
            raise ValueError(f"{k} is not a unit modulo {m}")
        vec = [0] * m if m > 1 else [0]
        for j, c in enumerate(self.coeffs):
            vec[(j * k) % m] = vec[(j * k) % m] + c
        return CycNum(m, vec)

    def embed(self, conductor: int) -> "CycNum":
        """Embed into the cyclotomic field of a multiple conductor."""
        m = self.conductor
        if conductor == m:
            return self
        if conductor % m != 0:
            raise ValueError("can only embed into a multiple conductor")
        s = conductor // m
        vec = [0] * conductor
        for j, c in enumerate(self.coeffs):
            vec[j * s] = vec[j * s] + c
        return CycNum(conductor, vec)

    def as_constant(self):
        """The constant coefficient if the value is rational, else None."""
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_integer(self):
        return self.as_constant()

    def __repr__(self):
        return f"CycNum(m={self.conductor}, {list(self.coeffs)})"


def eval_at(f: LaurentPoly, xi: TorsionPoint) -> CycNum:
    """f evaluated at the torsion point, in the field of its order."""
    if f.arity != xi.arity:
        raise ValueError("arity mismatch between polynomial and point")
    m = xi.modulus
    vec = [0] * m if m > 1 else [0]
    for exps, c in f.coeffs.items():
        e = xi.pairing(exps)
        vec[e] = vec[e] + c
    return CycNum(m, vec)


def galois_apply(k: int, alpha: CycNum) -> CycNum:
    return alpha.galois(k)


def as_integer(alpha: CycNum):
    return alpha.as_integer()


def conjugate_product(alpha: CycNum):
    """Product of alpha over the full Galois group; lands in the base ring."""
    m = alpha.conductor
    prod = CycNum.constant(m, 1)
    for k in units_mod(m):
        prod = prod * alpha.galois(k if m > 1 else 1)
    value = prod.as_constant()
    if value is None:
        raise InternalInvariantError(
            "full Galois product failed to descend to the base ring"
        )
    return value


# ----------------------------------------------------------- root products


def product_over_roots(g, n: int, skip_zeros: bool = False):
    """Product of g over all n-th roots of unity, as an exact integer.

    g is a univariate integer Laurent polynomial (LaurentPoly of arity 1).
    With skip_zeros, factors g(zeta) = 0 are removed from the product:
    the vanishing roots are exactly the roots of gcd(x^n - 1, g~), and the
    unit correction for clearing negative exponents uses the product of
    the surviving roots, which is +/-1.
    """
    if isinstance(g, LaurentPoly):
        dense, shift = g.as_dense_univariate()
    else:
        dense, shift = list(g), 0
    if not any(dense):
        raise ValueError("product over roots of the zero polynomial")
    modulus = xn1(n)
    common = pgcd_int(modulus, dense)
    if len(common) - 1 > 0:
        if not skip_zeros:
            return 0
        quotient = pdiv_exact(modulus, common)
    else:
        quotient = modulus
    value = resultant(quotient, dense)
    # product of the surviving roots: (-1)^deg q * q(0), a unit
    root_prod = (-1) ** (len(quotient) - 1) * quotient[0]
    if shift % 2 == 1 and root_prod == -1:
        value = -value
    return value


def product_over_roots_direct(g, n: int, skip_zeros: bool = False):
    """Same product computed through cyclotomic fields, one divisor at a time.

    Independent of the resultant path; used as its cross-check.
    """
    if isinstance(g, LaurentPoly):
        poly = g
    else:
        poly = LaurentPoly(1, {(e,): c for e, c in enumerate(g)})
    total = 1
    for d in divisors(n):
        alpha = eval_at(poly, TorsionPoint(1, d, (1 % d,)))
        if alpha.is_zero():
            if skip_zeros:
                continue
            return 0
        total *= conjugate_product(alpha)
    return total


def ring_product_over_roots(coeffs, n: int):
    """Product of A over mu_n for A with coefficients in an exact ring.

    coeffs is the dense list of A in one variable; entries may be ints or
    SymPoly values.  Every factor must be nonzero (no skip convention at
    this level); a vanishing conjugate-norm raises InternalInvariantError.
    Works one divisor d | n at a time: reduce mod Phi_d, multiply the
    Galois conjugates, and read off the constant.
    """
    total = 1
    for d in divisors(n):
        vec = _reduce(coeffs, d)
        prod_vec = None
        for k in units_mod(d):
            conj = _ring_conjugate(vec, k if d > 1 else 1, d)
            prod_vec = conj if prod_vec is None else _ring_mul(prod_vec, conj, d)
        const = prod_vec[0]
        if any(c != 0 for c in prod_vec[1:]):
            raise InternalInvariantError(
                "ring-valued conjugate product failed to descend"
            )
        total = const * total
    return total


def _ring_conjugate(vec, k: int, m: int):
    out = [0] * m if m > 1 else [0]
    for j, c in enumerate(vec):
        out[(j * k) % m] = out[(j * k) % m] + c
    return _reduce(out, m)


def _ring_mul(a, b, m: int):
    out = [0] * (2 * max(len(a), len(b)))
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            out[i + j] = out[i + j] + x * y
    return _reduce(out, m)
