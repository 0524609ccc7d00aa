"""Certificate checkers and brute-force recognizers.

The brute-force side shares no code with the recognizers: cliques and
chordality come from networkx, and every labelled tree on the cliques is
tried, decoded in bulk from Prüfer codes.
"""

from __future__ import annotations

import functools
import heapq

import networkx as nx
import numpy as np

from .chordal import CliqueSet, CliqueTree
from .graph import Graph

DEFAULT_MAX_CLIQUES = 9
DEFAULT_MAX_CLIQUES_DIRECTED = 6


class OracleCapacityError(ValueError):
    pass


# --- single-tree checkers ---------------------------------------------------


def verify_clique_set(g: Graph, cs: CliqueSet) -> bool:
    """Every listed set is a distinct maximal clique and every edge is covered.

    Together with the subtree property of a clique tree (Helly), this
    implies the list holds all maximal cliques.
    """
    if len({frozenset(k) for k in cs.cliques}) != cs.p:
        return False
    holding: list[list[int]] = [[] for _ in range(g.n)]
    for i, k in enumerate(cs.cliques):
        if not k or any(v < 0 or v >= g.n for v in k):
            return False
        for a_i, a in enumerate(k):
            holding[a].append(i)
            if any(not g.has_edge(a, b) for b in k[a_i + 1:]):
                return False
        hits: dict[int, int] = {}
        for a in k:
            for w in g.adj[a]:
                hits[w] = hits.get(w, 0) + 1
        kset = set(k)
        if any(c == len(k) and w not in kset for w, c in hits.items()):
            return False
    if any(not h for h in holding):
        return False
    for a, b in g.edges:
        small, other = (a, b) if len(holding[a]) <= len(holding[b]) else (b, a)
        if not any(other in cs.cliques[i] for i in holding[small]):
            return False
    return True


def _vertex_paths_ok(g: Graph, cs: CliqueSet, t: CliqueTree, directed: bool) -> bool:
    if t.p != cs.p:
        raise ValueError(f"tree has {t.p} nodes but there are {cs.p} cliques")
    if g.n == 0:
        return t.p == 0
    if any(not (0 <= a < t.p and 0 <= b < t.p) for a, b in t.edges):
        raise ValueError("tree edge refers to a node outside the clique set")
    if not t.is_tree():
        return False
    if not verify_clique_set(g, cs):
        return False
    size = [0] * g.n
    for k in cs.cliques:
        for v in k:
            size[v] += 1
    inner = [0] * g.n
    outdeg: dict[tuple[int, int], int] = {}
    indeg: dict[tuple[int, int], int] = {}
    for a, b in t.edges:
        shared = set(cs.cliques[a]).intersection(cs.cliques[b])
        for v in shared:
            inner[v] += 1
            if directed:
                outdeg[(v, a)] = outdeg.get((v, a), 0) + 1
                indeg[(v, b)] = indeg.get((v, b), 0) + 1
            else:
                outdeg[(v, a)] = outdeg.get((v, a), 0) + 1
                outdeg[(v, b)] = outdeg.get((v, b), 0) + 1
    if any(inner[v] != size[v] - 1 for v in range(g.n)):
        return False
    if directed:
        return all(d <= 1 for d in outdeg.values()) and all(d <= 1 for d in indeg.values())
    return all(d <= 2 for d in outdeg.values())


def check_clique_path_tree(g: Graph, cs: CliqueSet, t: CliqueTree) -> bool:
    """True iff ``t`` is a tree on ``cs`` in which each vertex's cliques form a path."""
    return _vertex_paths_ok(g, cs, t, directed=False)


def check_directed_clique_path_tree(g: Graph, cs: CliqueSet, t: CliqueTree) -> bool:
    """As :func:`check_clique_path_tree`, reading edges as darts ``a -> b``."""
    return _vertex_paths_ok(g, cs, t, directed=True)


# --- Prüfer codes -------------------------------------------------------------


def prufer_encode(p: int, edges) -> list[int]:
    nb: list[set[int]] = [set() for _ in range(p)]
    for a, b in edges:
        nb[a].add(b)
        nb[b].add(a)
    leaves = [x for x in range(p) if len(nb[x]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(p - 2):
        leaf = heapq.heappop(leaves)
        (other,) = nb[leaf]
        code.append(other)
        nb[other].discard(leaf)
        nb[leaf].clear()
        if len(nb[other]) == 1:
            heapq.heappush(leaves, other)
    return code


def prufer_decode(code, p: int | None = None) -> list[tuple[int, int]]:
    p = len(code) + 2 if p is None else p
    if len(code) != p - 2 or any(not 0 <= x < p for x in code):
        raise ValueError("not a Prüfer code")
    degree = [1] * p
    for x in code:
        degree[x] += 1
    leaves = [x for x in range(p) if degree[x] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


@functools.lru_cache(maxsize=None)
def all_trees(p: int) -> np.ndarray:
    """Edge arrays of every labelled tree on ``p`` nodes, shape ``(p**(p-2), p-1, 2)``."""
    if p == 1:
        return np.zeros((1, 0, 2), dtype=np.int8)
    if p == 2:
        return np.array([[[0, 1]]], dtype=np.int8)
    count = p ** (p - 2)
    codes = np.stack(np.unravel_index(np.arange(count), (p,) * (p - 2)), axis=1).astype(np.int8)
    degree = np.ones((count, p), dtype=np.int8)
    for i in range(p - 2):
        np.add.at(degree, (np.arange(count), codes[:, i]), 1)
    rows = np.arange(count)
    edges = np.empty((count, p - 1, 2), dtype=np.int8)
    for i in range(p - 2):
        leaf = np.argmax(degree == 1, axis=1)
        edges[:, i, 0] = leaf
        edges[:, i, 1] = codes[:, i]
        degree[rows, leaf] = 0
        degree[rows, codes[:, i]] -= 1
    last = np.argsort(degree != 1, axis=1, kind="stable")[:, :2]
    edges[:, p - 2, :] = last
    edges.setflags(write=False)
    return edges


# --- brute-force recognizers ----------------------------------------------------


def _nx_graph(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def oracle_cliques(g: Graph) -> list[tuple[int, ...]] | None:
    """Maximal cliques via networkx, or None when ``g`` is not chordal."""
    G = _nx_graph(g)
    if g.n and not nx.is_chordal(G):
        return None
    return sorted(tuple(sorted(k)) for k in nx.find_cliques(G))


def _vertex_masks(g: Graph, cliques) -> list[np.ndarray]:
    p = len(cliques)
    seen = set()
    masks = []
    for v in range(g.n):
        key = tuple(i for i in range(p) if v in cliques[i])
        if len(key) > 1 and key not in seen:
            seen.add(key)
            m = np.zeros(p, dtype=bool)
            m[list(key)] = True
            masks.append(m)
    return masks


def _path_trees(g: Graph, cliques) -> np.ndarray:
    """Every labelled tree on the cliques in which each vertex spans a path."""
    trees = all_trees(len(cliques))
    for m in _vertex_masks(g, cliques):
        if not len(trees):
            break
        a, b = trees[..., 0], trees[..., 1]
        inside = m[a] & m[b]
        ok = inside.sum(axis=1) == m.sum() - 1
        for x in np.flatnonzero(m):
            ok &= (inside & ((a == x) | (b == x))).sum(axis=1) <= 2
        trees = trees[ok]
    return trees


def _directed_ok(g: Graph, cliques, trees: np.ndarray) -> np.ndarray | None:
    """First (tree, orientation) pair that passes, as a dart array."""
    p = len(cliques)
    e = p - 1
    bits = (np.arange(2 ** e)[:, None] >> np.arange(e)[None, :]) & 1
    masks = _vertex_masks(g, cliques)
    for tree in trees:
        tails = np.where(bits == 0, tree[:, 0][None, :], tree[:, 1][None, :])
        heads = np.where(bits == 0, tree[:, 1][None, :], tree[:, 0][None, :])
        ok = np.ones(len(bits), dtype=bool)
        for m in masks:
            inside = m[tails] & m[heads]
            for x in np.flatnonzero(m):
                ok &= (inside & (tails == x)).sum(axis=1) <= 1
                ok &= (inside & (heads == x)).sum(axis=1) <= 1
        hit = np.flatnonzero(ok)
        if len(hit):
            i = hit[0]
            return np.stack([tails[i], heads[i]], axis=1)
    return None


def _capacity(cliques, limit: int, what: str) -> None:
    if len(cliques) > limit:
        raise OracleCapacityError(f"{len(cliques)} cliques exceed the {what} oracle limit of {limit}")


def oracle_path_tree(g: Graph, max_cliques: int = DEFAULT_MAX_CLIQUES):
    """A clique path tree found by exhaustive search, or None."""
    cliques = oracle_cliques(g)
    if cliques is None:
        return None
    _capacity(cliques, max_cliques, "path graph")
    if not cliques:
        return CliqueSet([]), CliqueTree(0, [])
    trees = _path_trees(g, cliques)
    if not len(trees):
        return None
    return CliqueSet(cliques), CliqueTree(len(cliques), [tuple(map(int, e)) for e in trees[0]])


def oracle_directed_path_tree(g: Graph, max_cliques: int = DEFAULT_MAX_CLIQUES_DIRECTED):
    cliques = oracle_cliques(g)
    if cliques is None:
        return None
    _capacity(cliques, max_cliques, "directed path graph")
    if not cliques:
        return CliqueSet([]), CliqueTree(0, [], True)
    darts = _directed_ok(g, cliques, _path_trees(g, cliques))
    if darts is None:
        return None
    return CliqueSet(cliques), CliqueTree(len(cliques), [tuple(map(int, e)) for e in darts], True)


def oracle_is_path_graph(g: Graph, max_cliques: int = DEFAULT_MAX_CLIQUES) -> bool:
    return oracle_path_tree(g, max_cliques) is not None


def oracle_is_directed_path_graph(g: Graph, max_cliques: int = DEFAULT_MAX_CLIQUES_DIRECTED) -> bool:
    return oracle_directed_path_tree(g, max_cliques) is not None
