"""Exact computations for finitely additive measures on finite set algebras.

Intersection numbers and their variants are solved as zero-sum games with an
exact rational simplex; every result carries witnesses that can be checked
independently.
"""

from .core import (
    AtomPartition,
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    SimpleFunction,
    VertexFunctional,
    atoms_from_generators,
    format_rational,
    ideal_validate,
    mixture,
    null_ideal,
    restrict_measure,
    to_rational,
)
from .domination import (
    MeasureFamily,
    check_norming,
    common_null_ideal,
    halmos_savage_subset,
    mstar_vertices,
    weakly_dominating_measure,
)
from .intersection import (
    IntersectionReport,
    intersection_number,
    intersection_number_ideal,
    intersection_number_order,
    intersection_number_pi,
    sequence_average,
)
from .lp import GameSolution, LPResult, simplex_solve, solve_matrix_game
from .oracle import bruteforce_intersection, verify_minimax, witness_from_strategy
from .rankings import (
    IdealOrder,
    MeasureOrder,
    OracleOrder,
    axioms_check,
    function_grid,
    order_compare,
    orders_agree,
    representability,
)
from .synthesis import (
    Decomposition,
    ModulusBounds,
    nonlinearity_modulus_bounds,
    normalize_functional,
    synthesize_strictly_positive,
    threshold_decomposition,
    threshold_family,
    threshold_family_pi,
    verify_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "AtomPartition",
    "atoms_from_generators",
    "axioms_check",
    "bruteforce_intersection",
    "check_norming",
    "common_null_ideal",
    "Decomposition",
    "format_rational",
    "function_grid",
    "GameSolution",
    "GroundSet",
    "halmos_savage_subset",
    "Ideal",
    "ideal_validate",
    "IdealOrder",
    "intersection_number",
    "intersection_number_ideal",
    "intersection_number_order",
    "intersection_number_pi",
    "IntersectionReport",
    "LPResult",
    "Measure",
    "MeasureFamily",
    "MeasureOrder",
    "mixture",
    "ModulusBounds",
    "mstar_vertices",
    "nonlinearity_modulus_bounds",
    "normalize_functional",
    "null_ideal",
    "OracleOrder",
    "order_compare",
    "orders_agree",
    "representability",
    "restrict_measure",
    "sequence_average",
    "SetSystem",
    "SimpleFunction",
    "simplex_solve",
    "solve_matrix_game",
    "synthesize_strictly_positive",
    "threshold_decomposition",
    "threshold_family",
    "threshold_family_pi",
    "to_rational",
    "verify_decomposition",
    "verify_minimax",
    "VertexFunctional",
    "weakly_dominating_measure",
    "witness_from_strategy",
]
