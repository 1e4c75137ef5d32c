"""Explicit 4- or 8-cycles in diameter-2 graphs of minimum degree at least 3."""

from .extractor import (
    CounterexampleError,
    ExtractionResult,
    ExtractionTrace,
    PreconditionError,
    ProofPathExhausted,
    case1_extract,
    case2_extract,
    classify_edge,
    extract,
    extract_with_fallback,
)
from .fixtures import fixture
from .generators import GenSpec, enumerate_labeled, random_graphs
from .graph import (
    Graph,
    GraphInputError,
    PreconditionReport,
    bfs_distances,
    common_neighbors,
    from_edge_list,
    neighbors,
    precondition_report,
)
from .graph6 import Graph6ParseError, encode_graph6, parse_graph6
from .oracle import CycleWitness, find_cycle_of_length, smallest_power_of_two_cycle, verify_witness

__all__ = [
    "CounterexampleError", "CycleWitness", "ExtractionResult", "ExtractionTrace", "GenSpec", "Graph",
    "Graph6ParseError", "GraphInputError", "PreconditionError", "PreconditionReport", "ProofPathExhausted",
    "bfs_distances", "case1_extract", "case2_extract", "classify_edge", "common_neighbors", "encode_graph6",
    "enumerate_labeled", "extract", "extract_with_fallback", "find_cycle_of_length", "fixture",
    "from_edge_list", "neighbors", "parse_graph6", "precondition_report", "random_graphs",
    "smallest_power_of_two_cycle", "verify_witness",
]
