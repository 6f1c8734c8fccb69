"""Cascades, contagious sets, and degree-based bounds on undirected graphs."""

from .bounds import WeightReport, delta_weight, vertex_term, weight, weight_value
from .cascade import CascadeResult, ThresholdConfig, is_contagious, parse_seed_set, simulate
from .exact import ExactResult, SearchSpaceError, min_contagious_exact, solve_dense
from .graph import (
    EdgeListParseError,
    Graph,
    GraphError,
    GraphSpec,
    build_graph,
    build_graph_spec,
    gen_cycle,
    gen_disjoint_cliques,
    gen_gnp,
    gen_grid,
    gen_random_regular,
    induced_subgraph,
    parse_edge_list,
    serialize_edge_list,
    validate_graph,
)
from .greedy import greedy_contagious, is_k_degenerate, peel_order, verify_reverse_activation
from .random_perm import (
    PermutationSample,
    estimate_expected_L_size,
    membership_probability,
    randomized_contagious,
    sample_L,
)
from .reports import ContagiousSetReport
from .rng import derive_seed, fresh_entropy_seed, make_rng
from .warmup_k2 import WarmupParams, WarmupRound, iterated_random_k2, random_2dom_baseline

__version__ = "0.1.0"

__all__ = [
    "CascadeResult",
    "ContagiousSetReport",
    "EdgeListParseError",
    "ExactResult",
    "Graph",
    "GraphError",
    "GraphSpec",
    "PermutationSample",
    "SearchSpaceError",
    "ThresholdConfig",
    "WarmupParams",
    "WarmupRound",
    "WeightReport",
    "build_graph",
    "build_graph_spec",
    "delta_weight",
    "derive_seed",
    "estimate_expected_L_size",
    "fresh_entropy_seed",
    "gen_cycle",
    "gen_disjoint_cliques",
    "gen_gnp",
    "gen_grid",
    "gen_random_regular",
    "greedy_contagious",
    "induced_subgraph",
    "is_contagious",
    "is_k_degenerate",
    "iterated_random_k2",
    "make_rng",
    "membership_probability",
    "min_contagious_exact",
    "parse_edge_list",
    "parse_seed_set",
    "peel_order",
    "randomized_contagious",
    "random_2dom_baseline",
    "sample_L",
    "serialize_edge_list",
    "simulate",
    "solve_dense",
    "validate_graph",
    "vertex_term",
    "verify_reverse_activation",
    "weight",
    "weight_value",
]
