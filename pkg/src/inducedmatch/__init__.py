"""Exact LP bounds, certified approximations and extremal instances for induced matchings."""

from .graph import Graph, InducedMatching, conflict_set, edge_closed_neighborhood, is_induced_matching
from .lp import EdgeWeights, LpSolution, solve_dual, solve_primal
from .oracle import exact_matching_number, exact_nu_s

__all__ = [
    "EdgeWeights", "Graph", "InducedMatching", "LpSolution", "conflict_set", "edge_closed_neighborhood",
    "exact_matching_number", "exact_nu_s", "is_induced_matching", "solve_dual", "solve_primal",
]
__version__ = "0.1.0"
