"""Differential checks against the brute-force oracle on every small chordal graph."""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from pathtree.directed import recognize_directed_path_graph
from pathtree.graph import Graph
from pathtree.oracle import oracle_is_directed_path_graph, oracle_is_path_graph
from pathtree.pathgraph import recognize_path_graph


def small_chordal_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        G = nx.Graph(edges)
        G.add_nodes_from(range(n))
        if not nx.is_chordal(G):
            continue
        key = nx.weisfeiler_lehman_graph_hash(G, iterations=4)
        if key in seen:
            continue
        seen.add(key)
        yield Graph.from_edges(n, edges)


def test_all_chordal_graphs_up_to_six_vertices():
    counts = {"path": 0, "directed": 0, "graphs": 0}
    for n in range(1, 7):
        for g in small_chordal_graphs(n):
            counts["graphs"] += 1
            truth = oracle_is_path_graph(g)
            assert recognize_path_graph(g, check=True).accepted == truth
            counts["path"] += truth
            if oracle_is_directed_path_graph(g, max_cliques=9):
                counts["directed"] += 1
                assert recognize_directed_path_graph(g, check=True).accepted
            else:
                assert not recognize_directed_path_graph(g, check=True).accepted
    # on six vertices the 3-sun is the only chordal graph outside the directed class
    assert counts["graphs"] - counts["directed"] == 1


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    density = draw(st.floats(0.2, 0.95))
    bits = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b < density])


@given(graphs())
@settings(max_examples=300, deadline=None)
def test_random_small_graphs(g):
    # graphs beyond the oracle's capacity are skipped
    try:
        truth = oracle_is_path_graph(g, max_cliques=9)
    except ValueError:
        return
    assert recognize_path_graph(g, check=True).accepted == truth
    try:
        dtruth = oracle_is_directed_path_graph(g, max_cliques=7)
    except ValueError:
        return
    assert recognize_directed_path_graph(g, check=True).accepted == dtruth
