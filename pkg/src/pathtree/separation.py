"""Clique separators and the relations between the pieces they cut off.

A maximal clique ``C`` whose removal disconnects ``g`` splits it into
components ``g[C | V_i]``.  Once each component has a clique path tree in
which ``C`` is a leaf, two small tables describe how it touches ``C``:

* ``W`` - the vertices of ``C`` lying in the unique tree neighbour of ``C``;
* ``F`` - for each ``v`` in ``W``, the clique containing ``v`` that is
  furthest from ``C``.

Dominance, antipodality and equivalence are decided from these tables alone.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .chordal import CliqueSet, CliqueTree
from .errors import TRIANGLE, InvariantViolation, Rejected
from .graph import Graph, connected_components


class Relation(enum.Enum):
    UNATTACHED = "unattached"
    LEFT_DOMINATES = "left-dominates"
    RIGHT_DOMINATES = "right-dominates"
    EQUIVALENT = "equivalent"
    ANTIPODAL = "antipodal"


@dataclass
class Component:
    id: int
    private: list[int]
    ambient: list[int]
    cliques: list[tuple[int, ...]] = field(default_factory=list)
    tree: CliqueTree | None = None
    c_node: int = -1
    n_node: int = -1
    W: tuple[int, ...] = ()
    Wset: frozenset[int] = frozenset()
    F: dict[int, int] = field(default_factory=dict)
    flat: bool = False

    def __repr__(self):
        return f"Component({self.id}, private={self.private}, W={list(self.W)})"

    @property
    def order_key(self) -> tuple[int, bool, int]:
        """Sort key that lists every dominator before what it dominates."""
        return (-len(self.W), not self.flat, self.id)


@dataclass
class SeparationContext:
    C: tuple[int, ...]
    components: list[Component]
    classes: dict[int, list[int]] = field(default_factory=dict)
    order: list[int] = field(default_factory=list)

    def reps(self) -> list[Component]:
        return [self.components[r] for r in sorted(self.classes)]


def find_clique_separator(cs: CliqueSet, t: CliqueTree) -> int | None:
    """Pick an internal node of the clique tree, or None when p <= 2.

    Every internal node of a clique tree separates the graph.  The node whose
    largest branch is smallest wins (a centroid, so recursion depth stays
    logarithmic in p); ties prefer a larger smallest branch, then the
    smaller id.
    """
    if cs.p <= 2:
        return None
    nb = t.neighbors()
    parent = [-1] * t.p
    order = []
    seen = [False] * t.p
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in nb[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    size = [1] * t.p
    for x in reversed(order):
        if parent[x] >= 0:
            size[parent[x]] += size[x]
    best, best_score = None, None
    for x in range(t.p):
        if len(nb[x]) < 2:
            continue
        branches = [size[y] for y in nb[x] if parent[y] == x]
        if parent[x] >= 0:
            branches.append(t.p - size[x])
        score = (max(branches), -min(branches))
        if best_score is None or score < best_score:
            best, best_score = x, score
    return best


def split(g: Graph, C) -> SeparationContext:
    """Cut ``g`` at the clique ``C``; one component per piece of ``g - C``."""
    C = tuple(sorted(C))
    pieces = connected_components(g, removed=C)
    if len(pieces) < 2:
        raise ValueError(f"{list(C)} does not separate the graph")
    comps = [
        Component(i, piece, sorted(set(C).union(piece))) for i, piece in enumerate(pieces)
    ]
    return SeparationContext(C, comps)


def attach_tree(comp: Component, tree: CliqueTree, cliques: list[tuple[int, ...]], C) -> Component:
    """Record the component's clique path tree and locate ``C`` in it.

    ``C`` must be a leaf: its removal leaves the private part connected, so
    it cannot separate the component.  Anything else is a bug upstream.
    """
    Cset = frozenset(C)
    comp.cliques = cliques
    comp.tree = tree
    try:
        comp.c_node = next(i for i, k in enumerate(cliques) if frozenset(k) == Cset)
    except StopIteration:
        raise InvariantViolation(f"separator {sorted(C)} is not a clique of component {comp.id}")
    nb = tree.neighbors()[comp.c_node]
    if len(nb) != 1:
        raise InvariantViolation(
            f"separator is not a leaf of the tree of component {comp.id} (degree {len(nb)})"
        )
    comp.n_node = nb[0]
    comp.W = tuple(sorted(Cset.intersection(cliques[comp.n_node])))
    comp.Wset = frozenset(comp.W)
    return comp


def compute_F_table(comp: Component, C) -> Component:
    """Fill ``F`` with one breadth-first pass from the neighbour of ``C``.

    The last visited clique containing ``v`` is the furthest one, because
    the cliques containing ``v`` form a path that starts next to ``C``.
    """
    Cset = frozenset(C)
    nb = comp.tree.neighbors()
    F: dict[int, int] = {}
    seen = {comp.c_node, comp.n_node}
    queue = deque([comp.n_node])
    while queue:
        x = queue.popleft()
        for v in comp.cliques[x]:
            if v in Cset:
                F[v] = x
        for y in nb[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if F.keys() != comp.Wset:
        raise InvariantViolation(f"F table of component {comp.id} does not cover exactly W")
    comp.F = F
    comp.flat = len({F[v] for v in comp.W}) == 1
    return comp


def dominates(a: Component, b: Component) -> bool:
    """True when ``b <= a``: ``a``'s furthest cliques agree on all of ``W(b)``."""
    if not b.W or len(b.W) > len(a.W):
        return False
    F = a.F
    first = F.get(b.W[0])
    if first is None:
        return False
    return all(F.get(v) == first for v in b.W)


def attached(a: Component, b: Component) -> bool:
    small, big = (a, b) if len(a.W) <= len(b.W) else (b, a)
    return any(v in big.Wset for v in small.W)


def antipodal(a: Component, b: Component) -> bool:
    return attached(a, b) and not dominates(a, b) and not dominates(b, a)


def compare(a: Component, b: Component) -> Relation:
    if not attached(a, b):
        return Relation.UNATTACHED
    b_le_a = dominates(a, b)
    a_le_b = dominates(b, a)
    if b_le_a and a_le_b:
        return Relation.EQUIVALENT
    if b_le_a:
        return Relation.LEFT_DOMINATES
    if a_le_b:
        return Relation.RIGHT_DOMINATES
    return Relation.ANTIPODAL


def quotient(ctx: SeparationContext) -> SeparationContext:
    """Merge equivalent components and fix the processing order.

    Two components are equivalent exactly when they have the same ``W`` and
    both have a constant ``F`` on it, so classes are found by hashing ``W``.
    Three components with the same ``W`` and a non-constant ``F`` are
    pairwise antipodal around any vertex of ``W``: a full antipodal triangle.
    The representative of a class is its smallest id.
    """
    flat_rep: dict[frozenset[int], int] = {}
    ragged: dict[frozenset[int], list[int]] = {}
    classes: dict[int, list[int]] = {}
    for comp in ctx.components:
        if comp.flat:
            rep = flat_rep.setdefault(comp.Wset, comp.id)
            classes.setdefault(rep, []).append(comp.id)
        else:
            same = ragged.setdefault(comp.Wset, [])
            same.append(comp.id)
            if len(same) == 3:
                raise Rejected(
                    TRIANGLE,
                    f"components {same} share W={sorted(comp.Wset)} and are pairwise antipodal",
                )
            classes[comp.id] = [comp.id]
    # bucket sort by |W| descending; flat before ragged inside a bucket
    width = max((len(c.W) for c in ctx.components), default=0)
    buckets: list[list[list[int]]] = [[[], []] for _ in range(width + 1)]
    for rep in sorted(classes):
        comp = ctx.components[rep]
        buckets[len(comp.W)][0 if comp.flat else 1].append(rep)
    ctx.order = [r for b in reversed(buckets) for half in b for r in half]
    ctx.classes = classes
    return ctx
