"""Replacement paths in undirected unweighted graphs."""
from .bmm import boolean_multiply, build_reduction_graph
from .generators import generate_graph
from .graph import (
    INF,
    DistanceStore,
    Graph,
    GraphError,
    GraphParseError,
    GraphValidationError,
    LcaIndex,
    ShortestPathTree,
    bfs_tree,
    canonical_path_edges,
    edge_on_path,
    lca,
    load_graph,
)
from .msrp import run_msrp
from .oracle import QueryIndex, brute_force_rp, query, verify_table
from .pair_rp import PairReplacement, pair_replacement_paths
from .sampling import AlgoConfig, CenterSets, LandmarkSets, sample_centers, sample_landmarks
from .ssrp import EdgeClass, classify_edge, run_ssrp
from .table import Counters, ReplacementTable

__all__ = [
    "INF",
    "AlgoConfig",
    "CenterSets",
    "Counters",
    "DistanceStore",
    "EdgeClass",
    "Graph",
    "GraphError",
    "GraphParseError",
    "GraphValidationError",
    "LandmarkSets",
    "LcaIndex",
    "PairReplacement",
    "QueryIndex",
    "ReplacementTable",
    "ShortestPathTree",
    "bfs_tree",
    "boolean_multiply",
    "brute_force_rp",
    "build_reduction_graph",
    "canonical_path_edges",
    "classify_edge",
    "edge_on_path",
    "generate_graph",
    "lca",
    "load_graph",
    "pair_replacement_paths",
    "query",
    "run_msrp",
    "run_ssrp",
    "sample_centers",
    "sample_landmarks",
    "verify_table",
]
