from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from conftest import ids_of, load
from pathtree.chordal import CliqueSet, CliqueTree, maximal_cliques
from pathtree.generators import random_chordal
from pathtree.graph import Graph
from pathtree.oracle import (
    OracleCapacityError,
    all_trees,
    check_clique_path_tree,
    check_directed_clique_path_tree,
    oracle_cliques,
    oracle_directed_path_tree,
    oracle_is_directed_path_graph,
    oracle_is_path_graph,
    oracle_path_tree,
    prufer_decode,
    prufer_encode,
    verify_clique_set,
)


def tree_key(edges):
    return frozenset(frozenset(map(int, e)) for e in edges)


def reference_tree(g, spec, directed=False):
    """Clique set and tree from labelled cliques and labelled edges."""
    cliques = [tuple(sorted(ids_of(g, k))) for k in spec["cliques"]]
    pos = {frozenset(k): i for i, k in enumerate(spec["cliques"])}
    edges = [(pos[frozenset(a)], pos[frozenset(b)]) for a, b in spec["edges"]]
    return CliqueSet(cliques), CliqueTree(len(cliques), edges, directed)


# hand-built reference trees: parent above child
FIFTEEN_TREE = {
    "cliques": [
        {1, 2, 3, 4, 5}, {1, 2, 4, 5, 10}, {2, 3, 4, 5, 8}, {1, 2, 6}, {4, 5, 9},
        {2, 3, 4, 7}, {6, 11, 12}, {9, 15}, {7, 13}, {7, 14},
    ],
    "edges": [
        ({1, 2, 3, 4, 5}, {1, 2, 4, 5, 10}), ({1, 2, 3, 4, 5}, {2, 3, 4, 5, 8}),
        ({1, 2, 4, 5, 10}, {1, 2, 6}), ({1, 2, 4, 5, 10}, {4, 5, 9}), ({1, 2, 6}, {6, 11, 12}),
        ({4, 5, 9}, {9, 15}), ({2, 3, 4, 5, 8}, {2, 3, 4, 7}), ({2, 3, 4, 7}, {7, 13}),
        ({2, 3, 4, 7}, {7, 14}),
    ],
}
# star around {1,2,3,4}; orientation chosen so every vertex runs one way
EIGHT_TREE = {
    "cliques": [{1, 2, 3, 4}, {3, 4, 5}, {1, 2, 7}, {1, 3, 8}, {2, 4, 6}],
    "edges": [
        ({1, 2, 7}, {1, 2, 3, 4}), ({3, 4, 5}, {1, 2, 3, 4}),
        ({1, 2, 3, 4}, {1, 3, 8}), ({1, 2, 3, 4}, {2, 4, 6}),
    ],
}


def test_fifteen_reference_tree_passes(fifteen):
    cs, t = reference_tree(fifteen, FIFTEEN_TREE)
    assert check_clique_path_tree(fifteen, cs, t)


def test_eight_reference_tree_passes(eight):
    cs, t = reference_tree(eight, EIGHT_TREE, directed=True)
    assert check_directed_clique_path_tree(eight, cs, t)
    assert check_directed_clique_path_tree(eight, cs, t.reversed())
    # flipping one dart breaks the vertices running through it
    bad = CliqueTree(t.p, [t.edges[0][::-1], *t.edges[1:]], True)
    assert not check_directed_clique_path_tree(eight, cs, bad)
    assert check_clique_path_tree(eight, cs, bad)


def test_star_over_four_cliques_holding_v_fails():
    # vertex 0 in four cliques {0, i}
    g = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    cs = maximal_cliques(g)
    star = CliqueTree(4, [(0, 1), (0, 2), (0, 3)])
    path = CliqueTree(4, [(0, 1), (1, 2), (2, 3)])
    assert not check_clique_path_tree(g, cs, star)
    assert check_clique_path_tree(g, cs, path)


def test_head_to_head_darts_fail():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    cs = maximal_cliques(g)
    path = [(0, 1), (1, 2)]
    assert check_directed_clique_path_tree(g, cs, CliqueTree(3, path, True))
    assert not check_directed_clique_path_tree(g, cs, CliqueTree(3, [(0, 1), (2, 1)], True))


def test_single_node_and_empty():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    cs = maximal_cliques(g)
    assert check_clique_path_tree(g, cs, CliqueTree(1, []))
    assert check_directed_clique_path_tree(g, cs, CliqueTree(1, [], True))
    assert check_clique_path_tree(Graph.from_edges(0, []), CliqueSet([]), CliqueTree(0, []))


def test_node_mismatch_is_an_error(eight):
    cs = maximal_cliques(eight)
    with pytest.raises(ValueError):
        check_clique_path_tree(eight, cs, CliqueTree(3, [(0, 1), (1, 2)]))
    with pytest.raises(ValueError):
        check_clique_path_tree(eight, cs, CliqueTree(5, [(0, 9)] * 4))


def test_clique_set_verification(eight):
    cs = maximal_cliques(eight)
    assert verify_clique_set(eight, cs)
    # a non-maximal clique
    smaller = CliqueSet([cs.cliques[0][:-1], *cs.cliques[1:]])
    assert not verify_clique_set(eight, smaller)
    # a non-clique
    assert not verify_clique_set(eight, CliqueSet([tuple(range(8))]))
    # a duplicate
    assert not verify_clique_set(eight, CliqueSet([*cs.cliques, cs.cliques[0]]))


def test_tree_not_a_tree_fails(eight):
    cs = maximal_cliques(eight)
    assert not check_clique_path_tree(eight, cs, CliqueTree(5, [(0, 1), (1, 0), (2, 3), (3, 4)]))


@pytest.mark.parametrize("p", range(2, 9))
def test_prufer_round_trip_exhaustive(p):
    seen = set()
    for code in itertools.product(range(p), repeat=p - 2):
        edges = prufer_decode(code)
        assert len(edges) == p - 1
        assert tuple(prufer_encode(p, edges)) == code
        seen.add(tree_key(edges))
    assert len(seen) == p ** (p - 2)


@pytest.mark.parametrize("p", range(1, 8))
def test_vectorised_decode_matches(p):
    trees = all_trees(p)
    assert trees.shape == (max(1, p ** (p - 2)), p - 1, 2)
    if p >= 2:
        codes = list(itertools.product(range(p), repeat=p - 2))
        for i in range(0, len(codes), max(1, len(codes) // 200)):
            assert tree_key(trees[i]) == tree_key(prufer_decode(codes[i]))
        assert len({tree_key(t) for t in trees}) == p ** (p - 2)


def test_prufer_decode_rejects_bad_codes():
    with pytest.raises(ValueError):
        prufer_decode([5], 3)


def test_oracle_basic_answers(eight):
    assert not oracle_is_path_graph(load("c4.txt"))
    assert oracle_cliques(load("c4.txt")) is None
    assert oracle_is_directed_path_graph(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert oracle_is_directed_path_graph(eight)
    assert oracle_is_path_graph(load("three_sun.txt"))
    assert not oracle_is_directed_path_graph(load("three_sun.txt"))
    assert not oracle_is_path_graph(load("not_path_graph.txt"))
    assert oracle_is_path_graph(Graph.from_edges(0, []))


def test_oracle_witness_trees_pass_the_checkers(eight):
    cs, t = oracle_path_tree(eight)
    assert check_clique_path_tree(eight, cs, t)
    cs, t = oracle_directed_path_tree(eight)
    assert check_directed_clique_path_tree(eight, cs, t)


def test_oracle_capacity(fifteen):
    with pytest.raises(OracleCapacityError):
        oracle_is_path_graph(fifteen)
    with pytest.raises(OracleCapacityError):
        oracle_is_directed_path_graph(random_chordal(7, seed=1))


def test_split_components_are_path_graphs(fifteen):
    from pathtree.graph import induced_subgraph

    for labels in ([1, 2, 3, 4, 5, 6, 11, 12], [1, 2, 3, 4, 5, 7, 13, 14], [1, 2, 3, 4, 5, 8],
                   [1, 2, 3, 4, 5, 9, 15], [1, 2, 3, 4, 5, 10]):
        sub, _ = induced_subgraph(fifteen, ids_of(fifteen, labels))
        assert oracle_is_path_graph(sub)


def test_oracle_monotone():
    for seed in range(80):
        rng = random.Random(seed)
        k = rng.randint(2, 6)
        g = random_chordal(k, rng.randint(1, k), rng, rng.randint(0, 2 * k))
        if oracle_is_directed_path_graph(g):
            assert oracle_is_path_graph(g)


def test_all_trees_is_read_only():
    with pytest.raises(ValueError):
        all_trees(4)[0, 0, 0] = np.int8(1)
