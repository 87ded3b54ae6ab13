"""torusdiv: exact divisibility sequences of Laurent polynomials on tori.

The package computes the integer products of a Laurent polynomial over the
points of finite subgroups of the N-torus, their canonical factorizations
into Galois-orbit pieces, strong-divisibility behavior, rank-of-apparition
and Zsigmondy scans, and Mahler-measure growth experiments.

>>> from torusdiv import parse_poly, torus_product
>>> torus_product(parse_poly("X1 - X2 - 4"), 2)
192
"""

from .cyclo import (
    CycNum,
    as_integer,
    cyclotomic_poly,
    eval_at,
    galois_apply,
    product_over_roots,
)
from .errors import (
    InternalInvariantError,
    ParseError,
    ResourceCapError,
    TorusDivError,
)
from .laurent import LaurentPoly, format_poly, parse_poly
from .lattice import (
    FiniteSubgroup,
    TorsionPoint,
    contains,
    count_subgroups,
    cyclic_subgroup,
    elements,
    generators,
    intersection,
    is_cyclic,
    mobius,
    mu_n,
    mu_torus,
    parse_group,
    subgroup,
    subgroups_of,
    subgroups_of_order,
    torsion_point,
    trivial_subgroup,
)
from .mpoly import SymPoly
from .products import (
    FactoredProduct,
    OrbitFactor,
    conjugate_orbit_product,
    divisibility_check,
    factor_by_orbits,
    primitive_product,
    stabilizer_index,
    strong_divisibility_check,
    subgroup_product,
    torus_product,
)

__version__ = "0.1.0"

__all__ = [
    "CycNum",
    "FactoredProduct",
    "FiniteSubgroup",
    "InternalInvariantError",
    "LaurentPoly",
    "OrbitFactor",
    "ParseError",
    "ResourceCapError",
    "SymPoly",
    "TorsionPoint",
    "TorusDivError",
    "as_integer",
    "conjugate_orbit_product",
    "contains",
    "count_subgroups",
    "cyclic_subgroup",
    "cyclotomic_poly",
    "divisibility_check",
    "elements",
    "eval_at",
    "factor_by_orbits",
    "format_poly",
    "galois_apply",
    "generators",
    "intersection",
    "is_cyclic",
    "mobius",
    "mu_n",
    "mu_torus",
    "parse_group",
    "parse_poly",
    "primitive_product",
    "product_over_roots",
    "stabilizer_index",
    "strong_divisibility_check",
    "subgroup",
    "subgroup_product",
    "subgroups_of",
    "subgroups_of_order",
    "torsion_point",
    "torus_product",
    "trivial_subgroup",
]
