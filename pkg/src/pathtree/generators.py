"""Random instances built as intersection graphs on a host tree.

Every host node carries one private vertex (a one-node subtree), so each
host node yields exactly one maximal clique and the graph has ``k`` cliques.
Extra vertices are random subtrees, paths, or rooted paths of the host.
Vertex ids are shuffled so no generator hands the recognizers a convenient
order.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _host_tree(k: int, rng: random.Random) -> list[int]:
    # random recursive tree; parent[0] = -1
    return [-1] + [rng.randrange(i) for i in range(1, k)]


def _adjacency(parent: list[int]) -> list[list[int]]:
    nb: list[list[int]] = [[] for _ in parent]
    for x, p in enumerate(parent):
        if p >= 0:
            nb[x].append(p)
            nb[p].append(x)
    return nb


def _intersection_graph(k: int, sets: list[list[int]], rng: random.Random) -> Graph:
    n = len(sets)
    perm = list(range(n))
    rng.shuffle(perm)
    at: list[list[int]] = [[] for _ in range(k)]
    for v, s in enumerate(sets):
        for x in s:
            at[x].append(perm[v])
    edges = set()
    for bucket in at:
        for a, b in combinations(sorted(bucket), 2):
            edges.add((a, b))
    return Graph.from_edges(n, sorted(edges))


def _random_subtree(nb: list[list[int]], size: int, rng: random.Random) -> list[int]:
    start = rng.randrange(len(nb))
    grown = [start]
    inside = {start}
    border = list(nb[start])
    while len(grown) < size and border:
        x = border.pop(rng.randrange(len(border)))
        if x in inside:
            continue
        inside.add(x)
        grown.append(x)
        border.extend(y for y in nb[x] if y not in inside)
    return grown


def _tree_path(parent: list[int], depth: list[int], a: int, b: int) -> list[int]:
    left, right = [], []
    while a != b:
        if depth[a] >= depth[b]:
            left.append(a)
            a = parent[a]
        else:
            right.append(b)
            b = parent[b]
    return left + [a] + right[::-1]


def _depths(parent: list[int]) -> list[int]:
    depth = [0] * len(parent)
    for x in range(1, len(parent)):
        depth[x] = depth[parent[x]] + 1
    return depth


def random_chordal(k: int, width: int = 4, seed=None, extra: int | None = None) -> Graph:
    """Intersection graph of random subtrees of a random tree on ``k`` nodes."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = _rng(seed)
    parent = _host_tree(k, rng)
    nb = _adjacency(parent)
    extra = k if extra is None else extra
    sets = [[x] for x in range(k)]
    sets += [_random_subtree(nb, rng.randint(1, width), rng) for _ in range(extra)]
    return _intersection_graph(k, sets, rng)


def random_path_graph_positive(k: int, seed=None, extra: int | None = None, span: int | None = None) -> Graph:
    """Intersection graph of random paths in a random tree: always a path graph.

    ``span`` bounds the number of host nodes on each path.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = _rng(seed)
    parent = _host_tree(k, rng)
    depth = _depths(parent)
    nb = _adjacency(parent)
    extra = k if extra is None else extra
    sets = [[x] for x in range(k)]
    for _ in range(extra):
        a = rng.randrange(k)
        if span is None:
            b = rng.randrange(k)
        else:
            # random walk without backtracking, at most span nodes
            b, prev = a, -1
            for _ in range(rng.randrange(span)):
                options = [y for y in nb[b] if y != prev]
                if not options:
                    break
                prev, b = b, rng.choice(options)
        sets.append(_tree_path(parent, depth, a, b))
    return _intersection_graph(k, sets, rng)


def random_interval_graph(k: int, seed=None, extra: int | None = None) -> Graph:
    """Intersection graph of random intervals on a path of ``k`` nodes."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = _rng(seed)
    extra = k if extra is None else extra
    sets = [[x] for x in range(k)]
    for _ in range(extra):
        a, b = sorted((rng.randrange(k), rng.randrange(k)))
        sets.append(list(range(a, b + 1)))
    return _intersection_graph(k, sets, rng)


def random_rooted_path_positive(k: int, seed=None, extra: int | None = None) -> Graph:
    """Intersection graph of node-to-ancestor paths in a rooted random tree."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = _rng(seed)
    parent = _host_tree(k, rng)
    extra = k if extra is None else extra
    sets = [[x] for x in range(k)]
    for _ in range(extra):
        x = rng.randrange(k)
        path = [x]
        for _ in range(rng.randrange(k)):
            if parent[path[-1]] < 0:
                break
            path.append(parent[path[-1]])
        sets.append(path)
    return _intersection_graph(k, sets, rng)


GENERATORS = {
    "chordal": random_chordal,
    "path": random_path_graph_positive,
    "interval": random_interval_graph,
    "rooted": random_rooted_path_positive,
}


def scaling_instance(n: int, seed=None) -> Graph:
    """Path graph positive with ``n`` vertices and roughly ``5n`` edges."""
    k = max(1, int(0.38 * n))
    return random_path_graph_positive(k, seed=seed, extra=n - k, span=6)
