"""Balanced rooted trees, power families, and random algebraic graphs.

The package builds the explicit balanced trees T_{a,b}, enumerates the
power family T^p, constructs random bipartite graphs over prime fields
whose edges are the common zeros of a polynomial system, prunes them to
T^p-free graphs, and checks the resulting edge densities against
brute-force oracles at desk scale.
"""

from .construction import (
    ConstructionParams,
    ConstructionReport,
    CopyProfile,
    ExperimentResult,
    PipelineResult,
    ThresholdDecision,
    auto_threshold,
    build_random_graph,
    detect_bad_sequences,
    graph_from_polynomials,
    prune,
    random_zero_graph,
    rooted_copy_profile,
    run_pipeline,
    run_scaling_experiment,
)
from .errors import CapacityError, UnbalancedTreeError
from .fields import (
    MultiPolynomial,
    PrimeField,
    check_zero_probability_preconditions,
    empirical_zero_probability,
    is_prime,
    sample_polynomial,
)
from .graphs import (
    Graph,
    canonical_form,
    complete_bipartite,
    count_rooted_embeddings,
    cycle_graph,
    iter_all_embeddings,
    list_rooted_embeddings,
    min_degree_subgraph,
    parse_edge_list,
    path_graph,
    write_edge_list,
)
from .oracle import (
    SlopeFit,
    contains_subgraph,
    exact_extremal_number,
    find_power_witness,
    fit_exponent,
    free_graph_classes,
    witness_edge_threshold,
)
from .powers import (
    FamilyMember,
    RootedCopySet,
    check_family_density,
    contains_member,
    disjoint_power,
    enumerate_power,
)
from .trees import (
    DensityReport,
    RootedTree,
    balanced_tree,
    density,
    is_balanced,
    parse_tree,
    subset_density,
    write_tree,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ConstructionParams",
    "ConstructionReport",
    "CopyProfile",
    "DensityReport",
    "ExperimentResult",
    "FamilyMember",
    "Graph",
    "MultiPolynomial",
    "PipelineResult",
    "PrimeField",
    "RootedCopySet",
    "RootedTree",
    "SlopeFit",
    "ThresholdDecision",
    "UnbalancedTreeError",
    "auto_threshold",
    "balanced_tree",
    "build_random_graph",
    "canonical_form",
    "check_family_density",
    "check_zero_probability_preconditions",
    "complete_bipartite",
    "contains_member",
    "contains_subgraph",
    "count_rooted_embeddings",
    "cycle_graph",
    "density",
    "detect_bad_sequences",
    "disjoint_power",
    "empirical_zero_probability",
    "enumerate_power",
    "exact_extremal_number",
    "find_power_witness",
    "fit_exponent",
    "free_graph_classes",
    "graph_from_polynomials",
    "is_balanced",
    "is_prime",
    "iter_all_embeddings",
    "list_rooted_embeddings",
    "min_degree_subgraph",
    "parse_edge_list",
    "parse_tree",
    "path_graph",
    "prune",
    "random_zero_graph",
    "rooted_copy_profile",
    "run_pipeline",
    "run_scaling_experiment",
    "sample_polynomial",
    "subset_density",
    "witness_edge_threshold",
    "write_edge_list",
    "write_tree",
]
