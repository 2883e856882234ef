"""Graph algorithms for networks whose topology is fixed but whose edge weights drift.

Dynamic structures (``DynamicSSSP``, ``DynamicMaxFlow``, ``DynamicMatching``,
``DynamicMST``) absorb one ``WeightChange`` at a time and answer their
query in constant time. ``oracles`` holds the from-scratch solvers they are
checked and benchmarked against; ``gadgets`` builds the reduction instances
that tie these problems to Boolean matrix-vector products.
"""
from .errors import (
    GenerationError,
    GraphStructureError,
    InvariantError,
    NoPathError,
    NoSpanningTreeError,
    ParseError,
    SizeGuardError,
    StateError,
    ValidationError,
    WeightDynError,
    WeightRangeError,
)
from .graph import WeightChange, WeightedGraph, parse_graph, serialize_graph
from .matching import DynamicMatching, is_valid_b_matching
from .maxflow import DynamicMaxFlow
from .mst import ConnectivityAdapter, DynamicMST
from .sssp import DynamicSSSP
from .trace import AddEdge, ChangeTrace, Query, RemoveEdge, parse_trace, serialize_trace

__all__ = [
    "AddEdge",
    "ChangeTrace",
    "ConnectivityAdapter",
    "DynamicMST",
    "DynamicMatching",
    "DynamicMaxFlow",
    "DynamicSSSP",
    "GenerationError",
    "GraphStructureError",
    "InvariantError",
    "NoPathError",
    "NoSpanningTreeError",
    "ParseError",
    "Query",
    "RemoveEdge",
    "SizeGuardError",
    "StateError",
    "ValidationError",
    "WeightChange",
    "WeightDynError",
    "WeightRangeError",
    "WeightedGraph",
    "is_valid_b_matching",
    "parse_graph",
    "parse_trace",
    "serialize_graph",
    "serialize_trace",
]
