"""Simple undirected graphs with dense integer vertex ids.

Vertices are ``0..n-1``.  A graph may carry ``labels``, the external ids the
vertices had in the input document; every output format uses them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    """Raised when an edge-list document is malformed."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[int] | None = None,
    ) -> Graph:
        """Build a graph, rejecting loops, repeated edges and bad ids."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency lists are sorted
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the isomorphic graph in which vertex ``v`` becomes ``perm[v]``."""
        labels = [0] * self.n
        for v, pv in enumerate(perm):
            labels[pv] = self.labels[v]
        return Graph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges), labels
        )


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as two whitespace separated non-negative integers.
    Lines starting with ``#`` and blank lines are skipped.  A line holding a
    single integer declares a vertex, which is how isolated vertices are
    written.  Vertices are renumbered densely in order of first appearance.
    """
    index: dict[int, int] = {}
    labels: list[int] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def vid(tok: str, lineno: int) -> int:
        if not tok.isdigit():
            raise GraphParseError(lineno, f"expected a non-negative integer, got {tok!r}")
        x = int(tok)
        if x not in index:
            index[x] = len(labels)
            labels.append(x)
        return index[x]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) == 1:
            vid(toks[0], lineno)
            continue
        if len(toks) != 2:
            raise GraphParseError(lineno, f"expected two vertex ids, got {len(toks)} tokens")
        u, v = vid(toks[0], lineno), vid(toks[1], lineno)
        if u == v:
            raise GraphParseError(lineno, f"loop at vertex {toks[0]}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(lineno, f"duplicate edge {toks[0]} {toks[1]}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(len(labels), edges, labels)


def serialize_graph(g: Graph) -> str:
    """Write ``g`` in the edge-list format using its labels.

    Lines are grouped by the larger endpoint so that reparsing reproduces the
    same vertex numbering; a vertex with no smaller neighbour gets a bare
    declaration line.
    """
    lines = []
    for x in range(g.n):
        lower = [a for a in g.adj[x] if a < x]
        if not lower:
            lines.append(f"{g.labels[x]}")
        lines.extend(f"{g.labels[a]} {g.labels[x]}" for a in lower)
    return "\n".join(lines) + ("\n" if lines else "")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``; returns it with the old->new vertex map.

    New ids follow the iteration order of ``s``.
    """
    verts = list(s)
    vmap: dict[int, int] = {}
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        if v in vmap:
            raise ValueError(f"duplicate vertex {v}")
        vmap[v] = len(vmap)
    adj = []
    for v in verts:
        adj.append(tuple(sorted(vmap[w] for w in g.adj[v] if w in vmap)))
    sub = Graph(len(verts), tuple(adj), tuple(g.labels[v] for v in verts))
    return sub, vmap


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``.

    Each component is sorted, and the list is sorted by smallest member.
    """
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        comps.append(comp)
    return comps
