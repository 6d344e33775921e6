"""Exact tools for the least number of high-degree vertices forcing a long path.

The package computes the closed-form threshold phi(n, d, k), builds the
extremal graphs attaining it, runs exact path and cycle searches with an
independent brute-force oracle, and exposes randomized verification suites
for the supporting cycle and path lemmas.
"""

from .formulas import (
    PhiParams,
    phi,
    phi_conjecture_bound,
    psi_lower_bound,
    psi_tree_counts,
    theta_chain_counts,
    theta_upper_bound,
)
from .graph import (
    MAX_VERTICES,
    BipartitionView,
    CycleWitness,
    Graph,
    PathWitness,
    articulation_vertices,
    biconnected_components,
    build_graph,
    connected_components,
    decode_graph6,
    encode_graph6,
    export_dot,
    export_json,
    high_degree_vertices,
    induced_subgraph,
    is_connected,
    is_essentially_two_connected,
    is_two_connected,
)
from .constructions import (
    build_G,
    build_H,
    build_H_star,
    build_essential_counterexample,
    build_psi_tree,
    build_theta_chain,
    expected_high_count,
)
from .canonical import (
    are_isomorphic,
    canonical_certificate,
    graph_from_certificate,
)
from .solvers import (
    HypothesisViolation,
    LemmaViolationError,
    LongestPathResult,
    PathCover,
    SearchBudget,
    SearchBudgetExceeded,
    contains_path,
    find_cycle_through_X,
    find_path_through_X,
    longest_cycle,
    longest_path,
    merge_high_end_paths,
    path_cover_of_X,
)
from .oracle import (
    SUITES,
    VerificationReport,
    derive_seed,
    enumerate_graphs,
    hypothesis_holds,
    phi_bruteforce,
    random_bipartite_instance,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "SUITES",
    "BipartitionView",
    "CycleWitness",
    "Graph",
    "HypothesisViolation",
    "LemmaViolationError",
    "LongestPathResult",
    "PathCover",
    "PathWitness",
    "PhiParams",
    "SearchBudget",
    "SearchBudgetExceeded",
    "VerificationReport",
    "are_isomorphic",
    "articulation_vertices",
    "biconnected_components",
    "build_G",
    "build_H",
    "build_H_star",
    "build_essential_counterexample",
    "build_graph",
    "build_psi_tree",
    "build_theta_chain",
    "canonical_certificate",
    "connected_components",
    "contains_path",
    "decode_graph6",
    "derive_seed",
    "encode_graph6",
    "enumerate_graphs",
    "expected_high_count",
    "export_dot",
    "export_json",
    "find_cycle_through_X",
    "find_path_through_X",
    "graph_from_certificate",
    "high_degree_vertices",
    "hypothesis_holds",
    "induced_subgraph",
    "is_connected",
    "is_essentially_two_connected",
    "is_two_connected",
    "longest_cycle",
    "longest_path",
    "merge_high_end_paths",
    "path_cover_of_X",
    "phi",
    "phi_bruteforce",
    "phi_conjecture_bound",
    "psi_lower_bound",
    "psi_tree_counts",
    "random_bipartite_instance",
    "run_suite",
    "theta_chain_counts",
    "theta_upper_bound",
    "__version__",
]
