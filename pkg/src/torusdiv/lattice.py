"""Finite subgroups of the torsion of the N-torus.

A torsion point is a tuple of roots of unity, stored as (modulus m, exponent
vector a) meaning (w^a_1, ..., w^a_N) for w = exp(2*pi*i/m).  A finite
subgroup is stored by its exponent e together with the Hermite normal form
of the integer lattice L with e*Z^N <= L <= Z^N whose image mod e is the
group, which makes the representation canonical: equal subgroups have equal
fields, so equality and hashing are structural.

Enumeration of all subgroups of given order goes through Hermite matrices
of fixed determinant and lattice duality; counting uses the Dirichlet
convolution recurrence for the subgroup-counting function.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .errors import ResourceCapError
from .intmat import adjugate, hnf, kernel, snf_diagonal
from .numth import divisors, gcd_list, totient, units_mod

MAX_ELEMENTS = 10**6
MAX_SUBGROUPS = 10**4


@dataclass(frozen=True)
class TorsionPoint:
    arity: int
    modulus: int
    vector: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.modulus

    def power(self, k: int) -> "TorsionPoint":
        return torsion_point(
            self.arity, self.modulus, [k * a for a in self.vector]
        )

    def pairing(self, exps) -> int:
        """Exponent of w (order-m root) in the monomial value xi^exps."""
        return sum(m * a for m, a in zip(exps, self.vector)) % self.modulus

    def __str__(self):
        return f"(m={self.modulus};a=({','.join(map(str, self.vector))}))"


def torsion_point(arity: int, modulus: int, vector) -> TorsionPoint:
    """Canonical torsion point: modulus equals the exact order."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    vec = [a % modulus for a in vector]
    if len(vec) != arity:
        raise ValueError("vector length does not match arity")
    g = gcd(modulus, gcd_list(vec))
    m = modulus // g
    return TorsionPoint(arity, m, tuple((a // g) % m for a in vec))


@dataclass(frozen=True)
class FiniteSubgroup:
    arity: int
    exponent: int
    matrix: tuple[tuple[int, ...], ...]
    order: int

    def __eq__(self, other):
        if not isinstance(other, FiniteSubgroup):
            return NotImplemented
        return (self.arity, self.exponent, self.matrix) == (
            other.arity,
            other.exponent,
            other.matrix,
        )

    def __hash__(self):
        return hash((self.arity, self.exponent, self.matrix))

    def sort_key(self):
        return (self.order, self.exponent, self.matrix)

    def serialize(self) -> str:
        flat = ",".join(str(x) for row in self.matrix for x in row)
        return f"N={self.arity};m={self.exponent};mat={flat}"

    def __str__(self):
        return self.serialize()

    def is_trivial(self) -> bool:
        return self.order == 1


def subgroup(arity: int, modulus: int, gens) -> FiniteSubgroup:
    """Canonical subgroup generated by the given exponent vectors mod modulus.

    The result never depends on the presentation: the modulus is reduced to
    the exponent of the group and the generator matrix is replaced by the
    Hermite basis of the corresponding lattice.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive (m = 0 is rejected)")
    gens = [list(v) for v in gens]
    for v in gens:
        if len(v) != arity:
            raise ValueError("generator length does not match arity")
    gens = [[a % modulus for a in v] for v in gens]
    g = gcd(modulus, gcd_list(a for v in gens for a in v))
    e = modulus // g
    rows = [[(a // g) % e for a in v] for v in gens]
    rows += [[e if i == j else 0 for j in range(arity)] for i in range(arity)]
    basis = hnf(rows)
    index = 1
    for d in snf_diagonal(basis):
        index *= d
    order = e**arity // index
    return FiniteSubgroup(arity, e, tuple(tuple(r) for r in basis), order)


def trivial_subgroup(arity: int) -> FiniteSubgroup:
    return subgroup(arity, 1, [])


def mu_n(n: int) -> FiniteSubgroup:
    """The cyclic group of n-th roots of unity inside the 1-torus."""
    return subgroup(1, n, [(1,)])


def mu_torus(arity: int, n: int) -> FiniteSubgroup:
    """The full group mu_n^N."""
    return subgroup(arity, n, [[1 if i == j else 0 for j in range(arity)] for i in range(arity)])


def cyclic_subgroup(point: TorsionPoint) -> FiniteSubgroup:
    return subgroup(point.arity, point.modulus, [point.vector])


def elements(sub: FiniteSubgroup, cap: int = MAX_ELEMENTS) -> list[TorsionPoint]:
    """All points of the subgroup, deterministically ordered."""
    if sub.order > cap:
        raise ResourceCapError(
            f"subgroup has {sub.order} elements, above the cap {cap}"
        )
    e = sub.exponent
    n = sub.arity
    ranges = [e // sub.matrix[i][i] for i in range(n)]
    pts = []
    counters = [0] * n
    while True:
        vec = [0] * n
        for i, c in enumerate(counters):
            if c:
                for j in range(n):
                    vec[j] = (vec[j] + c * sub.matrix[i][j]) % e
        pts.append(torsion_point(n, e, vec))
        for i in range(n - 1, -1, -1):
            counters[i] += 1
            if counters[i] < ranges[i]:
                break
            counters[i] = 0
        else:
            break
    assert len(pts) == sub.order
    return pts


def contains_point(sub: FiniteSubgroup, point: TorsionPoint) -> bool:
    if point.arity != sub.arity:
        raise ValueError("arity mismatch")
    if sub.exponent % point.modulus != 0:
        return False
    s = sub.exponent // point.modulus
    return _in_lattice([a * s for a in point.vector], [list(r) for r in sub.matrix])


def _in_lattice(vec, rows) -> bool:
    """Membership in the lattice spanned by upper-triangular rows."""
    v = list(vec)
    for i, row in enumerate(rows):
        q, r = divmod(v[i], row[i])
        if r:
            return False
        for j in range(len(v)):
            v[j] -= q * row[j]
    return all(x == 0 for x in v)


def contains(big: FiniteSubgroup, small: FiniteSubgroup) -> bool:
    """Whether small is a subgroup of big."""
    if big.arity != small.arity:
        raise ValueError("arity mismatch")
    m = lcm(big.exponent, small.exponent)
    sb = m // big.exponent
    ss = m // small.exponent
    big_rows = [[sb * x for x in row] for row in big.matrix]
    for row in small.matrix:
        if not _in_lattice([ss * x for x in row], big_rows):
            return False
    return True


def intersection(a: FiniteSubgroup, b: FiniteSubgroup) -> FiniteSubgroup:
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    m = lcm(a.exponent, b.exponent)
    sa = m // a.exponent
    sb = m // b.exponent
    ra = [[sa * x for x in row] for row in a.matrix]
    rb = [[sb * x for x in row] for row in b.matrix]
    stacked = ra + rb
    gens = []
    for w in kernel(stacked):
        x = w[: a.arity]
        vec = [0] * a.arity
        for ci, row in zip(x, ra):
            for j in range(a.arity):
                vec[j] += ci * row[j]
        gens.append([v % m for v in vec])
    return subgroup(a.arity, m, gens)


def is_cyclic(sub: FiniteSubgroup) -> bool:
    return sub.exponent == sub.order


def generators(sub: FiniteSubgroup) -> list[TorsionPoint]:
    """All generators of a cyclic subgroup (one Galois orbit over Q)."""
    if not is_cyclic(sub):
        raise ValueError("generators are defined for cyclic subgroups only")
    base = None
    for pt in elements(sub):
        if pt.order == sub.exponent:
            base = pt
            break
    assert base is not None
    gens = [base.power(k) for k in units_mod(sub.exponent)]
    assert len(gens) == (totient(sub.exponent) if sub.exponent > 1 else 1)
    return gens


@lru_cache(maxsize=None)
def count_subgroups(arity: int, n: int) -> int:
    """Number of subgroups of the torsion N-torus with exactly n elements.

    Dirichlet convolution recurrence: nu_1 = 1 and
    nu_N = (d -> d^(N-1)) * nu_(N-1).
    """
    if n < 1:
        raise ValueError("order must be positive")
    if arity == 1:
        return 1
    return sum(d ** (arity - 1) * count_subgroups(arity - 1, n // d) for d in divisors(n))


def _hermite_matrices(arity: int, n: int):
    """All upper-triangular Hermite matrices of determinant n."""

    def split(k, length):
        if length == 1:
            yield (k,)
            return
        for d in divisors(k):
            for rest in split(k // d, length - 1):
                yield (d,) + rest

    for diag in split(n, arity):
        positions = [(i, j) for j in range(arity) for i in range(j)]
        stack = [[]]
        for i, j in positions:
            stack = [s + [v] for s in stack for v in range(diag[j])]
        for values in stack:
            mat = [[0] * arity for _ in range(arity)]
            for i in range(arity):
                mat[i][i] = diag[i]
            for (i, j), v in zip(positions, values):
                mat[i][j] = v
            yield mat


def subgroups_of_order(
    arity: int, n: int, cap: int = MAX_SUBGROUPS
) -> list[FiniteSubgroup]:
    """All subgroups of the torsion N-torus of order exactly n.

    Index-n sublattices of Z^N (Hermite matrices of determinant n) map to
    order-n subgroups by lattice duality; the generator vectors of the dual
    are the columns of the adjugate, taken mod n.
    """
    if n < 1:
        raise ValueError("order must be positive")
    expected = count_subgroups(arity, n)
    if expected > cap:
        raise ResourceCapError(
            f"{expected} subgroups of order {n}, above the cap {cap}"
        )
    out = set()
    for mat in _hermite_matrices(arity, n):
        adj = adjugate(mat)
        gens = [[adj[i][j] % n for i in range(arity)] for j in range(arity)]
        sub = subgroup(arity, n, gens)
        assert sub.order == n
        out.add(sub)
    result = sorted(out, key=lambda s: s.sort_key())
    assert len(result) == expected
    return result


def subgroups_of(
    sub: FiniteSubgroup, cap: int = MAX_SUBGROUPS
) -> list[FiniteSubgroup]:
    """Every subgroup of sub, including the trivial group and sub itself."""
    found = []
    total = 0
    for k in divisors(sub.order):
        for cand in subgroups_of_order(sub.arity, k, cap=cap):
            if cand.exponent > 1 and sub.exponent % cand.exponent != 0:
                continue
            if contains(sub, cand):
                found.append(cand)
                total += 1
                if total > cap:
                    raise ResourceCapError(
                        f"subgroup listing exceeded the cap {cap}"
                    )
    return sorted(found, key=lambda s: s.sort_key())


def cyclic_subgroups_of(
    sub: FiniteSubgroup, cap: int = MAX_ELEMENTS
) -> list[FiniteSubgroup]:
    """The cyclic subgroups of sub (one per generator orbit)."""
    seen = {cyclic_subgroup(pt) for pt in elements(sub, cap=cap)}
    return sorted(seen, key=lambda s: s.sort_key())


def mobius(lower: FiniteSubgroup, upper: FiniteSubgroup, cap: int = MAX_SUBGROUPS) -> int:
    """Moebius function of the subgroup poset on the interval [lower, upper].

    Defined by mu(upper, upper) = 1 and, for lower strictly below,
    mu(lower, upper) = -sum of mu(mid, upper) over lower < mid <= upper.
    """
    if not contains(upper, lower):
        raise ValueError("mobius requires lower <= upper")
    interval = [s for s in subgroups_of(upper, cap=cap) if contains(s, lower)]
    interval.sort(key=lambda s: s.sort_key(), reverse=True)
    values: dict[FiniteSubgroup, int] = {}
    for s in interval:
        if s == upper:
            values[s] = 1
            continue
        acc = 0
        for t in interval:
            if t != s and contains(t, s):
                acc += values[t]
        values[s] = -acc
    return values[lower]


def enumerate_cyclic_subgroups(
    arity: int, max_order: int, cap: int = MAX_SUBGROUPS
) -> list[FiniteSubgroup]:
    """All cyclic subgroups of the torsion N-torus of order <= max_order."""
    out = set()
    for d in range(1, max_order + 1):
        for vec in _vectors_of_order(arity, d):
            out.add(cyclic_subgroup(TorsionPoint(arity, d, vec)))
            if len(out) > cap:
                raise ResourceCapError(f"cyclic listing exceeded the cap {cap}")
    return sorted(out, key=lambda s: s.sort_key())


def _vectors_of_order(arity: int, d: int):
    if d == 1:
        yield (0,) * arity
        return
    counters = [0] * arity
    while True:
        if gcd(d, gcd_list(counters)) == 1:
            yield tuple(counters)
        for i in range(arity - 1, -1, -1):
            counters[i] += 1
            if counters[i] < d:
                break
            counters[i] = 0
        else:
            return


def parse_group(text: str) -> FiniteSubgroup:
    """Parse a subgroup literal, e.g. "N=2;m=4;gens=(1,2)(0,2)"."""
    fields = {}
    for part in text.strip().split(";"):
        if not part:
            continue
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    try:
        arity = int(fields["N"])
        modulus = int(fields["m"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad subgroup literal {text!r}") from exc
    gens_text = fields.get("gens", fields.get("mat", ""))
    if "mat" in fields and "gens" not in fields:
        flat = [int(x) for x in gens_text.split(",") if x.strip()]
        if len(flat) != arity * arity:
            raise ValueError(f"bad matrix in subgroup literal {text!r}")
        rows = [flat[i * arity : (i + 1) * arity] for i in range(arity)]
        return subgroup(arity, modulus, rows)
    gens = []
    rest = gens_text
    while rest:
        rest = rest.strip()
        if not rest.startswith("("):
            raise ValueError(f"bad generator list in subgroup literal {text!r}")
        close = rest.index(")")
        inner = rest[1:close]
        gens.append([int(x) for x in inner.split(",")] if inner else [])
        rest = rest[close + 1 :]
    return subgroup(arity, modulus, gens)
