"""Numerical and scanning layer: Mahler measures, growth, prime scans.

Everything arithmetic stays exact (big integers, finite fields); floating
point enters only for logarithms, quadrature and reports.  Scans over
(prime, subgroup) pairs use the finite-field fast path whenever the prime
does not divide the group exponent, with the exact big-integer route as
the fallback and cross-check.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InternalInvariantError
from .gf import field_for_roots
from .laurent import LaurentPoly
from .lattice import (
    FiniteSubgroup,
    cyclic_subgroup,
    elements,
    enumerate_cyclic_subgroups,
    generators,
    subgroups_of_order,
)
from .numth import factorint, primes_up_to
from .products import (
    FactoredProduct,
    primitive_product,
    subgroup_product,
    torus_product_with_flag,
)
from .cyclo import eval_at

DEFAULT_REFINEMENT = 4
SINGULAR_EPS = 1e-12


def log_abs_big(n: int) -> float:
    """log |n| for arbitrary-size integers via bit length plus mantissa."""
    if n == 0:
        raise ValueError("log of zero")
    n = abs(n)
    k = n.bit_length() - 53
    if k <= 0:
        return math.log(n)
    return math.log(n >> k) + k * math.log(2)


# ------------------------------------------------------------ Mahler measure


@dataclass(frozen=True)
class MahlerEstimate:
    value: float
    samples_or_nodes: int
    error_indicator: float
    converged: bool


def _grid_log_mean(f: LaurentPoly, nodes: int) -> float:
    """Mean of log|f| over the tensor grid of nodes-th roots of unity.

    Grid points where |f| nearly vanishes are shifted by half a grid step
    in the first coordinate before taking logs.
    """
    n = f.arity
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    grids = np.meshgrid(*([theta] * n), indexing="ij")
    vals = np.zeros(grids[0].shape, dtype=complex)
    for exps, c in f.coeffs.items():
        phase = np.zeros(grids[0].shape)
        for e, g in zip(exps, grids):
            if e:
                phase = phase + e * g
        vals = vals + complex(c) * np.exp(1j * phase)
    mags = np.abs(vals)
    bad = mags < SINGULAR_EPS
    if bad.any():
        shifted = [g.copy() for g in grids]
        shifted[0] = shifted[0] + np.pi / nodes
        redo = np.zeros(grids[0].shape, dtype=complex)
        for exps, c in f.coeffs.items():
            phase = np.zeros(grids[0].shape)
            for e, g in zip(exps, shifted):
                if e:
                    phase = phase + e * g
            redo = redo + complex(c) * np.exp(1j * phase)
        mags = np.where(bad, np.abs(redo), mags)
    return float(np.mean(np.log(mags)))


def _monte_carlo_log_mean(f: LaurentPoly, samples: int, seed: int = 0) -> float:
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=(samples, f.arity))
    vals = np.zeros(samples, dtype=complex)
    for exps, c in f.coeffs.items():
        vals = vals + complex(c) * np.exp(1j * (theta @ np.array(exps)))
    mags = np.abs(vals)
    mags = np.where(mags < SINGULAR_EPS, SINGULAR_EPS, mags)
    return float(np.mean(np.log(mags)))


def mahler(
    f: LaurentPoly,
    refinement: int = DEFAULT_REFINEMENT,
    tolerance: float = 1e-2,
) -> MahlerEstimate:
    """Mahler measure by trapezoidal quadrature on the unit torus.

    The tensor trapezoid rule on a periodic integrand; the error indicator
    is the difference between the last two refinement levels.  Dimensions
    above three fall back to seeded Monte Carlo.
    """
    if f.is_zero():
        raise ValueError("Mahler measure of the zero polynomial")
    if f.arity >= 4:
        samples = 4096 * 2**refinement
        prev = math.exp(_monte_carlo_log_mean(f, samples // 2, seed=1))
        value = math.exp(_monte_carlo_log_mean(f, samples, seed=2))
        err = abs(value - prev)
        return MahlerEstimate(value, samples, err, err <= tolerance)
    nodes = 8 * 2**refinement
    prev = math.exp(_grid_log_mean(f, nodes // 2))
    value = math.exp(_grid_log_mean(f, nodes))
    err = abs(value - prev)
    return MahlerEstimate(value, nodes**f.arity, err, err <= tolerance)


def mahler_root_formula(f: LaurentPoly) -> float:
    """One-variable Mahler measure from the roots: |lead| * prod max(1,|r|)."""
    if f.arity != 1:
        raise ValueError("root formula applies to one variable only")
    dense, _shift = f.as_dense_univariate()
    coeffs = np.array(dense[::-1], dtype=float)
    value = abs(dense[-1])
    if len(dense) > 1:
        for r in np.roots(coeffs):
            value *= max(1.0, abs(r))
    return float(value)


def mahler_on_subgroup(
    f: LaurentPoly,
    param_matrix,
    refinement: int = DEFAULT_REFINEMENT,
    tolerance: float = 1e-2,
) -> MahlerEstimate:
    """Mahler measure over the subtorus parametrized by an exponent matrix.

    param_matrix has one row per parameter variable w_j; substituting
    x_i = prod_j w_j^(matrix[j][i]) turns f into a polynomial on a
    lower-dimensional torus carrying the Haar measure.
    """
    g = f.transform_monomials(param_matrix)
    return mahler(g, refinement=refinement, tolerance=tolerance)


# ------------------------------------------------------------------- growth


@dataclass(frozen=True)
class GrowthRow:
    n: int
    sign: int
    bit_length: int
    log_abs: float
    normalized: float
    had_zeros: bool
    factored_head: str


@dataclass(frozen=True)
class GrowthReport:
    rows: list
    reference_log_mahler: float
    arity: int


def growth_experiment(
    f: LaurentPoly, n_max: int, refinement: int = DEFAULT_REFINEMENT
) -> GrowthReport:
    """Exact torus products against the Mahler-measure growth prediction.

    Each row reports log|W_n| / n^N next to log M(f); rows whose product
    skipped vanishing factors are flagged, and no convergence is asserted
    here (reports only).
    """
    ref = math.log(mahler(f, refinement=refinement).value)
    rows = []
    for n in range(1, n_max + 1):
        w, had_zeros = torus_product_with_flag(f, n)
        if w == 0:
            raise InternalInvariantError("torus product returned zero")
        la = log_abs_big(w)
        rows.append(
            GrowthRow(
                n=n,
                sign=1 if w > 0 else -1,
                bit_length=abs(w).bit_length(),
                log_abs=la,
                normalized=la / n**f.arity,
                had_zeros=had_zeros,
                factored_head=str(FactoredProduct.from_integer(w, bound=10**4)),
            )
        )
    return GrowthReport(rows, ref, f.arity)


# ------------------------------------------------- mod-p scans and fast path


@lru_cache(maxsize=None)
def _zero_points(f: LaurentPoly, sub: FiniteSubgroup) -> frozenset:
    """Points of sub where f vanishes in characteristic zero (exact)."""
    return frozenset(
        pt for pt in elements(sub) if eval_at(f, pt).is_zero()
    )


def subgroup_product_mod_p(f: LaurentPoly, sub: FiniteSubgroup, p: int):
    """W(f, sub) mod p in the finite-field fast path, or None if p | exponent.

    The characteristic-zero vanishing points are removed exactly (they are
    computed once per subgroup and cached), after which the product of the
    reductions equals the reduction of the exact product.
    """
    m = sub.exponent
    if m % p == 0:
        return None
    fld, w = field_for_roots(p, m)
    powers = [fld.constant(1)]
    for _ in range(1, m):
        powers.append(fld.mul(powers[-1], w))
    zeros = _zero_points(f, sub)
    acc = fld.constant(1)
    reduced = {exps: c % p for exps, c in f.coeffs.items()}
    for pt in elements(sub):
        if pt in zeros:
            continue
        s = m // pt.modulus
        val = fld.constant(0)
        for exps, c in reduced.items():
            if c == 0:
                continue
            e = pt.pairing(exps) * s % m
            val = fld.add(val, fld.scale(powers[e], c))
        acc = fld.mul(acc, val)
    out = fld.as_prime_field(acc)
    if out is None:
        raise InternalInvariantError("mod-p product did not land in F_p")
    return out


@dataclass(frozen=True)
class ApparitionRecord:
    p: int
    subgroup: FiniteSubgroup
    order: int


def _maximal_proper_subgroups(sub: FiniteSubgroup) -> list[FiniteSubgroup]:
    """Maximal proper subgroups of a cyclic group: one per prime of the order."""
    xi = generators(sub)[0]
    return [cyclic_subgroup(xi.power(q)) for q in factorint(sub.order)]


@lru_cache(maxsize=None)
def _cyclic_candidates(arity: int, max_order: int) -> tuple:
    return tuple(enumerate_cyclic_subgroups(arity, max_order))


@lru_cache(maxsize=None)
def _w_exact_cached(f: LaurentPoly, sub: FiniteSubgroup) -> int:
    return subgroup_product(f, sub)

# below this order the exact product is cheap and shared across primes;
# larger groups go through the finite-field extension route
AUTO_EXACT_ORDER = 64


def ra_scan(
    f: LaurentPoly, p: int, max_order: int, use_fast_path: bool | None = None
) -> list[ApparitionRecord]:
    """Minimal subgroups whose product picks up the prime p.

    Scans cyclic subgroups of order <= max_order in canonical order (every
    rank of apparition is cyclic); a subgroup qualifies when p divides its
    product but no maximal proper subgroup's product.  Each record is
    checked against the primitive product, which p must also divide.

    use_fast_path True forces finite-field evaluation, False forces the
    exact big-integer route; the default picks exact (cached across
    primes) for small groups and finite fields for the rest.
    """
    if p < 2 or not _is_prime(p):
        raise ValueError("p must be prime")
    cache: dict[FiniteSubgroup, int] = {}

    def w_mod(sub: FiniteSubgroup) -> int:
        if sub not in cache:
            if use_fast_path is None:
                if sub.order <= AUTO_EXACT_ORDER:
                    value = _w_exact_cached(f, sub) % p
                else:
                    value = subgroup_product_mod_p(f, sub, p)
            elif use_fast_path:
                value = subgroup_product_mod_p(f, sub, p)
            else:
                value = None
            if value is None:
                value = subgroup_product(f, sub) % p
            cache[sub] = value
        return cache[sub]

    records = []
    for sub in _cyclic_candidates(f.arity, max_order):
        if w_mod(sub) != 0:
            continue
        if any(w_mod(m) == 0 for m in _maximal_proper_subgroups(sub)):
            continue
        if primitive_product(f, sub) % p != 0:
            raise InternalInvariantError(
                "rank of apparition whose primitive product misses p"
            )
        records.append(ApparitionRecord(p, sub, sub.order))
    return records


def _is_prime(p: int) -> bool:
    from .numth import is_probable_prime

    return is_probable_prime(p)


# ----------------------------------------------------------------- Zsigmondy


@dataclass(frozen=True)
class ZsigRecord:
    subgroup: FiniteSubgroup
    primitive_part: FactoredProduct
    in_zsigmondy_set: bool


def zsig_scan(f: LaurentPoly, max_order: int) -> list[ZsigRecord]:
    """Primitive parts of cyclic-subgroup products up to an order bound.

    The primitive part removes every prime already dividing the product of
    a maximal proper subgroup (iterated gcd removal); the subgroup lies in
    the Zsigmondy set exactly when nothing is left.
    """
    out = []
    for sub in enumerate_cyclic_subgroups(f.arity, max_order):
        w = abs(subgroup_product(f, sub))
        part = w
        for msub in _maximal_proper_subgroups(sub):
            trim = abs(subgroup_product(f, msub))
            g = math.gcd(part, trim)
            while g > 1:
                part //= g
                g = math.gcd(part, trim)
        out.append(
            ZsigRecord(sub, FactoredProduct.from_integer(part), part == 1)
        )
    return out


# ------------------------------------------------------------ Romanoff audit


@dataclass(frozen=True)
class RomanoffReport:
    x_bound: int
    eps: float
    coeff_bound_log: float
    sup_log_estimate: float
    log_total_product: float
    weighted_subgroup_count: int
    inequality_holds_exact: bool
    partial_sum: float
    theorem_bound_main: float
    empirical_constant: float
    d_multiplicity_reading: float
    d_single_reading: float
    scanned_primes: list


def romanoff_audit(
    f: LaurentPoly, x_bound: int, eps: float, p_bound: int = 50
) -> RomanoffReport:
    """Desk-checkable inequalities from the rank-of-apparition estimate.

    (i) the sup of log|f| on the torus is bounded by log of the coefficient
    1-norm; (ii) the total product over all subgroups of order <= x obeys
    |A| <= S^E for S the 1-norm and E = sum n*nu_N(n), checked exactly as
    integers; (iii) the partial double sum over scanned (p, subgroup)
    pairs is reported against (N+1)/eps plus an empirical constant.  The
    per-subgroup weight sum is reported in two readings: counting one term
    per (p, subgroup) pair, and one per prime.
    """
    s_norm = f.one_norm()
    coeff_bound_log = math.log(s_norm)
    sup_est = _sup_log_estimate(f)
    from .lattice import count_subgroups

    total = 1
    weighted = 0
    for n in range(1, x_bound + 1):
        for sub in subgroups_of_order(f.arity, n):
            total *= abs(subgroup_product(f, sub))
        weighted += n * count_subgroups(f.arity, n)
    holds = total <= s_norm**weighted
    log_total = log_abs_big(total) if total > 1 else 0.0
    partial = 0.0
    d_multi = 0.0
    d_single = 0.0
    scanned = []
    for p in primes_up_to(p_bound):
        records = ra_scan(f, p, x_bound)
        scanned.append((p, len(records)))
        if records:
            d_single += math.log(p) / p
        for rec in records:
            d_multi += math.log(p) / p
            partial += (math.log(p) / p) * rec.order ** (-eps)
    main = (f.arity + 1) / eps
    return RomanoffReport(
        x_bound=x_bound,
        eps=eps,
        coeff_bound_log=coeff_bound_log,
        sup_log_estimate=sup_est,
        log_total_product=log_total,
        weighted_subgroup_count=weighted,
        inequality_holds_exact=holds,
        partial_sum=partial,
        theorem_bound_main=main,
        empirical_constant=partial - main,
        d_multiplicity_reading=d_multi,
        d_single_reading=d_single,
        scanned_primes=scanned,
    )


def _sup_log_estimate(f: LaurentPoly, nodes: int = 64) -> float:
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    grids = np.meshgrid(*([theta] * f.arity), indexing="ij")
    vals = np.zeros(grids[0].shape, dtype=complex)
    for exps, c in f.coeffs.items():
        phase = np.zeros(grids[0].shape)
        for e, g in zip(exps, grids):
            if e:
                phase = phase + e * g
        vals = vals + complex(c) * np.exp(1j * phase)
    return float(np.max(np.log(np.abs(vals) + 1e-300)))


# ------------------------------------------------------------ density report


@dataclass(frozen=True)
class DensityReport:
    theta: float
    p_bound: int
    order_bound: int
    primes_in_set: list
    partial_log_sum: float
    density_bound: float


def density_report(
    f: LaurentPoly, theta: float, p_bound: int, order_bound: int
) -> DensityReport:
    """Primes with a small rank of apparition, and their partial log sum.

    Collects primes p <= p_bound having a rank of apparition of order at
    most p^theta (and at most order_bound); reports sum log p / p over the
    set next to the predicted density bound (N+1)*theta.  Asymptotic
    statements are reported, never asserted.
    """
    hits = []
    partial = 0.0
    for p in primes_up_to(p_bound):
        bound = min(order_bound, int(math.floor(p**theta)))
        if bound < 1:
            continue
        records = ra_scan(f, p, bound)
        if records:
            hits.append(p)
            partial += math.log(p) / p
    return DensityReport(
        theta=theta,
        p_bound=p_bound,
        order_bound=order_bound,
        primes_in_set=hits,
        partial_log_sum=partial,
        density_bound=(f.arity + 1) * theta,
    )
