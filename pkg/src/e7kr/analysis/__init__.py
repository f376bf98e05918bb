"""Verification suites: perfectness, branching, composition graphs."""

from .branching import (
    BranchReport, a7_restrict_weight, build_adjoint_crystal, check_conjecture,
    check_two_tensor_characterization, conjecture_multiplicity, peel_decompose,
)
from .compgraph import CompositionGraph, composition_graph
from .perfect import PerfectnessReport, check_perfect, eps_phi_affine

__all__ = [
    "BranchReport", "a7_restrict_weight", "build_adjoint_crystal", "check_conjecture",
    "check_two_tensor_characterization", "conjecture_multiplicity", "peel_decompose",
    "CompositionGraph", "composition_graph",
    "PerfectnessReport", "check_perfect", "eps_phi_affine",
]
