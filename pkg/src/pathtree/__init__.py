"""Recognition of path graphs and directed path graphs with clique path tree certificates."""

from __future__ import annotations

from .chordal import CliqueSet, CliqueTree, NotChordalError, is_chordal, maximal_cliques, mcs_order
from .directed import recognize_directed_path_graph
from .errors import InvariantViolation, Rejected
from .graph import Graph, GraphParseError, parse_graph, serialize_graph
from .oracle import (
    check_clique_path_tree,
    check_directed_clique_path_tree,
    oracle_is_directed_path_graph,
    oracle_is_path_graph,
)
from .pathgraph import recognize_path_graph
from .recognize import Recognition

__all__ = [
    "CliqueSet",
    "CliqueTree",
    "Graph",
    "GraphParseError",
    "InvariantViolation",
    "NotChordalError",
    "Recognition",
    "Rejected",
    "check_clique_path_tree",
    "check_directed_clique_path_tree",
    "is_chordal",
    "maximal_cliques",
    "mcs_order",
    "oracle_is_directed_path_graph",
    "oracle_is_path_graph",
    "parse_graph",
    "recognize_directed_path_graph",
    "recognize_path_graph",
    "serialize_graph",
]
