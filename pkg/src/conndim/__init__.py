"""Connectivity-dimension toolkit.

Vertices of a graph can be told apart by how well-connected they are to a
set of landmark vertices: the local connectivity kappa(u, v) counts the
maximum number of u-v paths disjoint except at their ends.  A landmark set
under which every vertex gets a distinct vector of these values is
resolving, and the smallest resolving set is the connectivity dimension of
the graph.  This package computes kappa matrices by unit-capacity max-flow,
solves the dimension exactly by branch-and-bound set cover, knows the
closed forms for threshold graphs, triangle chains, disjoint unions and
bridge compositions, and carries a 3-SAT reduction that decides
satisfiability through the dimension criterion.
"""

from ._kernels import active_kernel
from .connectivity import (INF, DistanceMatrix, KappaMatrix, distance_matrix,
                           kappa_matrix, local_connectivity,
                           uniform_connectivity, uniformly_connected_vertices,
                           value_to_json)
from .families import (ThresholdSequence, disjoint_union_cdim, standard_graph,
                       threshold_cdim, threshold_cdim_routed, threshold_graph,
                       triangle_chain, triangle_chain_cdim)
from .graphs import (BlockCutTree, EmptyGraphError, Graph, GraphFormatError,
                     TwinClasses, block_cut_tree, bridges,
                     connected_components, disjoint_union, induced_subgraph,
                     is_connected, make_graph, parse_edge_list, parse_graph6,
                     remove_edge, to_edge_list, to_graph6, twin_classes)
from .resolver import (PairCoverage, ResolvingVerdict, is_resolving,
                       pair_coverage, representation)
from .satreduce import (CnfFormula, GadgetMap, Prediction, SatResult,
                        assignment_satisfies, basis_from_assignment,
                        build_reduction, decide_sat, extract_assignment,
                        parse_dimacs, predicted_kappa, verify_gadget_lemmas)
from .solver import (BoundsReport, BudgetExceeded, DimensionResult,
                     cdim_decompose, cdim_direct, cdim_exact, cdim_greedy,
                     enumerate_bases, forces_one_representation, lower_bounds,
                     mdim_exact)

__version__ = "0.1.0"

__all__ = [
    "INF", "DistanceMatrix", "KappaMatrix", "distance_matrix",
    "kappa_matrix", "local_connectivity", "uniform_connectivity",
    "uniformly_connected_vertices", "value_to_json",
    "ThresholdSequence", "disjoint_union_cdim", "standard_graph",
    "threshold_cdim", "threshold_cdim_routed", "threshold_graph",
    "triangle_chain", "triangle_chain_cdim",
    "BlockCutTree", "EmptyGraphError", "Graph", "GraphFormatError",
    "TwinClasses", "block_cut_tree", "bridges", "connected_components",
    "disjoint_union", "induced_subgraph", "is_connected", "make_graph",
    "parse_edge_list", "parse_graph6", "remove_edge", "to_edge_list",
    "to_graph6", "twin_classes",
    "PairCoverage", "ResolvingVerdict", "is_resolving", "pair_coverage",
    "representation",
    "CnfFormula", "GadgetMap", "Prediction", "SatResult",
    "assignment_satisfies", "basis_from_assignment", "build_reduction",
    "decide_sat", "extract_assignment", "parse_dimacs", "predicted_kappa",
    "verify_gadget_lemmas",
    "BoundsReport", "BudgetExceeded", "DimensionResult", "cdim_decompose",
    "cdim_direct", "cdim_exact", "cdim_greedy", "enumerate_bases",
    "forces_one_representation", "lower_bounds", "mdim_exact",
    "active_kernel", "__version__",
]
