"""Krull dimension of finite Alexandrov spaces, by definition and by height."""

from .dimension import (
    DimensionReport,
    height,
    krull_dimension_bruteforce,
    longest_irreducible_chain,
    verify_theorem,
)
from .enumeration import CensusRow, census, enumerate_posets, enumerate_preorders
from .irreducible import (
    IrreducibilityWitness,
    closed_sets,
    irreducible_closed_sets,
    is_irreducible,
    point_closures,
)
from .quotient import (
    KolmogorovQuotient,
    check_closure_bijection,
    check_order_reflection,
    kolmogorov_quotient,
)
from .space import (
    ClosedSet,
    FiniteTopology,
    Preorder,
    alexandrov_topology,
    is_t0,
    min_open_neighborhood,
    point_closure,
    specialisation_preorder,
    validate_topology,
)
from .spaceio import load_space

__all__ = [
    "CensusRow",
    "ClosedSet",
    "DimensionReport",
    "FiniteTopology",
    "IrreducibilityWitness",
    "KolmogorovQuotient",
    "Preorder",
    "alexandrov_topology",
    "census",
    "check_closure_bijection",
    "check_order_reflection",
    "closed_sets",
    "enumerate_posets",
    "enumerate_preorders",
    "height",
    "irreducible_closed_sets",
    "is_irreducible",
    "is_t0",
    "kolmogorov_quotient",
    "krull_dimension_bruteforce",
    "load_space",
    "longest_irreducible_chain",
    "min_open_neighborhood",
    "point_closure",
    "point_closures",
    "specialisation_preorder",
    "validate_topology",
    "verify_theorem",
]
