"""Exact solution counts for diagonal equations over finite fields,
computed through walk counts on NEPS of complete graphs, with
brute-force and convolution oracles for every closed formula."""

from .diagonal import (
    DiagonalSystem,
    brute_force_count,
    brute_force_distribution,
    convolution_count,
    convolution_distribution,
    count_all_formula,
    count_nonzero_formula,
    walk_solution_count,
)
from .divisibility import DivisibilityReport, k_is_integer, remark_cases
from .field import (
    FieldElement,
    FiniteField,
    ResidueSet,
    build_field,
    kth_power_residues,
    subfield_coordinates,
    zero_pattern,
)
from .gp import (
    HammingView,
    build_hamming_view,
    gp_graph,
    hamming_parameters,
    is_primitive_divisor,
    verify_isomorphism,
)
from .graphs import DenseGraph, complete_graph, complete_walks, walk_count_power
from .neps import (
    NepsBasis,
    cartesian_sum_walks,
    hamming_walks,
    neps_complete_walks,
    neps_construct,
    neps_walks,
)

__version__ = "0.1.0"

__all__ = [
    "DiagonalSystem",
    "DenseGraph",
    "DivisibilityReport",
    "FieldElement",
    "FiniteField",
    "HammingView",
    "NepsBasis",
    "ResidueSet",
    "brute_force_count",
    "brute_force_distribution",
    "build_field",
    "build_hamming_view",
    "cartesian_sum_walks",
    "complete_graph",
    "complete_walks",
    "convolution_count",
    "convolution_distribution",
    "count_all_formula",
    "count_nonzero_formula",
    "gp_graph",
    "hamming_parameters",
    "hamming_walks",
    "is_primitive_divisor",
    "k_is_integer",
    "kth_power_residues",
    "neps_complete_walks",
    "neps_construct",
    "neps_walks",
    "remark_cases",
    "subfield_coordinates",
    "verify_isomorphism",
    "walk_count_power",
    "walk_solution_count",
    "zero_pattern",
]
