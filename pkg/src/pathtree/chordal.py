"""Chordality, maximal cliques and clique trees.

Everything here is driven by maximum cardinality search (MCS).  The
elimination order returned by :func:`mcs_order` is the reverse of the MCS
visit order; for a chordal graph it is a perfect elimination order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Graph


class NotChordalError(ValueError):
    pass


@dataclass
class CliqueSet:
    """Maximal cliques of a graph and, per vertex, the cliques containing it."""

    cliques: list[tuple[int, ...]]
    members: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.members and self.cliques:
            n = max(max(k) for k in self.cliques) + 1
            self.members = [[] for _ in range(n)]
            for i, k in enumerate(self.cliques):
                for v in k:
                    self.members[v].append(i)

    @property
    def p(self) -> int:
        return len(self.cliques)

    def index(self) -> dict[frozenset[int], int]:
        return {frozenset(k): i for i, k in enumerate(self.cliques)}


@dataclass
class CliqueTree:
    """A tree over clique ids ``0..p-1``.

    When ``directed`` is set every pair ``(a, b)`` in ``edges`` is a dart
    ``a -> b``; otherwise the orientation of the pairs carries no meaning.
    """

    p: int
    edges: list[tuple[int, int]]
    directed: bool = False

    def neighbors(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in range(self.p)]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def reversed(self) -> CliqueTree:
        return CliqueTree(self.p, [(b, a) for a, b in self.edges], self.directed)

    def is_tree(self) -> bool:
        if self.p == 0 or len(self.edges) != self.p - 1:
            return False
        nb = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.p


def _mcs_visit(g: Graph) -> list[int]:
    # heap entries (-label, vertex); stale entries are skipped lazily
    label = [0] * g.n
    visited = [False] * g.n
    heap = [(0, v) for v in range(g.n)]
    heapq.heapify(heap)
    visit = []
    while heap:
        neg, v = heapq.heappop(heap)
        if visited[v] or -neg != label[v]:
            continue
        visited[v] = True
        visit.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                label[w] += 1
                heapq.heappush(heap, (-label[w], w))
    return visit


def mcs_order(g: Graph) -> list[int]:
    """Elimination order from maximum cardinality search.

    Ties between equally labelled vertices go to the smallest id.  Works on
    disconnected graphs too: a fresh component starts at label 0.
    """
    return _mcs_visit(g)[::-1]


def _later_neighbors(g: Graph, order: list[int]) -> tuple[list[int], list[list[int]]]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [[w for w in g.adj[v] if pos[w] > pos[v]] for v in range(g.n)]
    return pos, later


def is_perfect_elimination(g: Graph, order: list[int]) -> bool:
    """Check that ``order`` is a perfect elimination order of ``g``.

    Linear-time follower test: for each vertex, its later neighbours other
    than the earliest one must all be adjacent to that earliest one.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos, later = _later_neighbors(g, order)
    required: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        if later[v]:
            f = min(later[v], key=pos.__getitem__)
            required[f].extend(w for w in later[v] if w != f)
    mark = [-1] * g.n
    for u in range(g.n):
        if not required[u]:
            continue
        for w in g.adj[u]:
            mark[w] = u
        if any(mark[w] != u for w in required[u]):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination(g, mcs_order(g))


def maximal_cliques(g: Graph, order: list[int] | None = None, check: bool = True) -> CliqueSet:
    """Maximal cliques of a chordal graph from a perfect elimination order.

    The candidate for ``v`` is ``v`` plus its later neighbours; it fails to be
    maximal exactly when some vertex whose follower is ``v`` has one more
    later neighbour than ``v``.  Cliques are listed in reverse elimination
    order of their earliest vertex.
    """
    if order is None:
        order = mcs_order(g)
    if check and not is_perfect_elimination(g, order):
        raise NotChordalError("graph is not chordal (order is not a perfect elimination order)")
    pos, later = _later_neighbors(g, order)
    dominated = [False] * g.n
    for u in range(g.n):
        if later[u]:
            f = min(later[u], key=pos.__getitem__)
            if len(later[u]) == len(later[f]) + 1:
                dominated[f] = True
    cliques = [
        tuple(sorted([v, *later[v]])) for v in reversed(order) if not dominated[v]
    ]
    members: list[list[int]] = [[] for _ in range(g.n)]
    for i, k in enumerate(cliques):
        for v in k:
            members[v].append(i)
    return CliqueSet(cliques, members)


def clique_tree(g: Graph, cs: CliqueSet, order: list[int] | None = None) -> CliqueTree:
    """Clique tree of a chordal graph.

    Built along the MCS visit order: a vertex whose label does not exceed the
    previous one opens a new clique, hung below the clique of its most
    recently visited earlier neighbour.  The result is a maximum-weight
    spanning tree of the clique intersection graph.  Components of a
    disconnected graph are joined to clique of the first component.
    """
    visit = _mcs_visit(g) if order is None else order[::-1]
    pos = [0] * g.n
    for i, v in enumerate(visit):
        pos[v] = i
    index = cs.index()
    clique_of = [-1] * g.n
    built: list[list[int]] = []
    parent: list[int | None] = []
    prev_label = -1
    for i, x in enumerate(visit):
        earlier = [w for w in g.adj[x] if pos[w] < i]
        if i == 0 or len(earlier) <= prev_label:
            if earlier:
                last = max(earlier, key=pos.__getitem__)
                parent.append(clique_of[last])
            else:
                parent.append(None)
            built.append([*earlier, x])
        else:
            built[-1].append(x)
        clique_of[x] = len(built) - 1
        prev_label = len(earlier)

    ids = []
    for k in built:
        key = frozenset(k)
        if key not in index:
            raise ValueError(f"clique {sorted(k)} missing from the clique set")
        ids.append(index[key])
    if len(ids) != cs.p:
        raise ValueError("clique set does not match the graph")
    edges = []
    roots = []
    for c, par in enumerate(parent):
        if par is None:
            roots.append(ids[c])
        else:
            edges.append((ids[par], ids[c]))
    edges.extend((roots[0], r) for r in roots[1:])
    return CliqueTree(cs.p, edges)
