"""Recursive decomposition driver shared by both recognizers.

The driver handles everything that does not depend on the target class:
the chordality gate, recursion along clique separators, the ``W``/``F``
tables, the quotient, and gluing the component trees back together once a
colouring of the components is known.  The colouring itself is supplied by
:mod:`pathtree.pathgraph` or :mod:`pathtree.directed`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .chordal import CliqueSet, CliqueTree, clique_tree, is_chordal, maximal_cliques, mcs_order
from .errors import NON_CHORDAL, InvariantViolation, Rejected
from .graph import Graph, connected_components, induced_subgraph
from .partition import AntipodalDag, PartitionState
from .separation import (
    Component,
    SeparationContext,
    attach_tree,
    compare,
    compute_F_table,
    dominates,
    find_clique_separator,
    quotient,
    split,
)


@dataclass
class Coloured:
    """What a colouring strategy hands back to the driver."""

    colors: dict
    partition: PartitionState
    dags: dict[tuple[int, ...], AntipodalDag]


@dataclass
class SeparatorTrace:
    """Snapshot of one separator; component ids index ``private``."""

    C: list[int]
    private: list[list[int]]
    W: list[list[int]]
    classes: dict[int, list[int]]
    uppers: list[int]
    d_single: dict[int, list[int]]
    d_pair: dict[tuple[int, int], list[int]]
    colors: dict[int, object]
    relations: dict[tuple[int, int], str]

    def describe(self) -> str:
        def names(ids):
            return "{" + ", ".join(f"g{i + 1}" for i in ids) + "}"

        lines = [f"separator C = {{{', '.join(map(str, self.C))}}}"]
        for i, (priv, w) in enumerate(zip(self.private, self.W)):
            lines.append(f"  g{i + 1}: private {priv}  W {w}  colour {self.colors.get(i)}")
        lines.append("  uppers: " + ", ".join(f"u{k}=g{u + 1}" for k, u in enumerate(self.uppers, 1)))
        for i, ms in self.d_single.items():
            lines.append(f"  D_{i} = {names(ms)}")
        for (i, j), ms in self.d_pair.items():
            lines.append(f"  D_{i},{j} = {names(ms)}")
        for (a, b), rel in sorted(self.relations.items()):
            if rel == "left-dominates":
                lines.append(f"  g{a + 1} >= g{b + 1}")
            elif rel == "right-dominates":
                lines.append(f"  g{b + 1} >= g{a + 1}")
            elif rel == "antipodal":
                lines.append(f"  g{a + 1} <-> g{b + 1}")
            elif rel == "equivalent":
                lines.append(f"  g{a + 1} ~ g{b + 1}")
        return "\n".join(lines)


@dataclass
class Recognition:
    accepted: bool
    graph: Graph
    cliques: CliqueSet | None = None
    tree: CliqueTree | None = None
    stage: str | None = None
    reason: str | None = None
    separators: list[list[int]] = field(default_factory=list)
    trace: list[SeparatorTrace] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def p(self) -> int | None:
        return None if self.cliques is None else self.cliques.p

    def __bool__(self):
        return self.accepted


Colorer = Callable[[SeparationContext, bool], Coloured]


class Driver:
    def __init__(self, colorer: Colorer, directed: bool, trace: bool = False, check: bool = False):
        self.colorer = colorer
        self.directed = directed
        self.trace = trace
        self.check = check
        self.traces: list[SeparatorTrace] = []
        self.separators: list[list[int]] = []

    def run(self, g: Graph) -> Recognition:
        start = time.perf_counter()
        result = Recognition(False, g)
        if not is_chordal(g):
            result.stage, result.reason = NON_CHORDAL, "graph contains a hole"
        else:
            try:
                cliques, edges = self._solve_graph(g)
            except Rejected as exc:
                result.stage, result.reason = exc.stage, exc.reason
            else:
                result.accepted = True
                result.cliques = CliqueSet(cliques, _members(g.n, cliques))
                result.tree = CliqueTree(len(cliques), edges, self.directed)
                self._certify(g, result)
        result.separators = self.separators
        result.trace = self.traces
        result.elapsed = time.perf_counter() - start
        return result

    def _certify(self, g: Graph, result: Recognition) -> None:
        from .oracle import check_clique_path_tree, check_directed_clique_path_tree

        checker = check_directed_clique_path_tree if self.directed else check_clique_path_tree
        if not checker(g, result.cliques, result.tree):
            raise InvariantViolation("assembled tree fails the clique path tree check")

    def _solve_graph(self, g: Graph):
        cliques: list[tuple[int, ...]] = []
        edges: list[tuple[int, int]] = []
        for piece in connected_components(g):
            sub, _ = induced_subgraph(g, piece)
            cl, ed = self._solve(sub)
            base = len(cliques)
            if base:
                edges.append((0, base))
            cliques.extend(tuple(sorted(piece[x] for x in k)) for k in cl)
            edges.extend((base + a, base + b) for a, b in ed)
        return cliques, edges

    def _solve(self, g: Graph):
        """Clique path tree of a connected chordal graph, in ``g``'s ids."""
        order = mcs_order(g)
        cs = maximal_cliques(g, order, check=False)
        if cs.p <= 2:
            return cs.cliques, [(0, 1)] if cs.p == 2 else []
        t = clique_tree(g, cs, order)
        sep = find_clique_separator(cs, t)
        return self.separate(g, cs.cliques[sep])

    def separate(self, g: Graph, C) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
        """Handle one separator: recurse, colour, and glue."""
        ctx = split(g, C)
        for comp in ctx.components:
            sub, _ = induced_subgraph(g, comp.ambient)
            back = comp.ambient
            cl, ed = self._solve(sub)
            cliques = [tuple(sorted(back[x] for x in k)) for k in cl]
            attach_tree(comp, CliqueTree(len(cl), ed, self.directed), cliques, ctx.C)
            compute_F_table(comp, ctx.C)
        total = sum(len(c.W) for c in ctx.components)
        if total > g.m + g.n:
            raise InvariantViolation(f"sum of |W| is {total} > m + n = {g.m + g.n}")
        if self.check:
            check_F_paths(ctx)
        self.separators.append([g.labels[v] for v in ctx.C])
        quotient(ctx)
        coloured = self.colorer(ctx, self.check)
        colors = coloured.colors
        if self.trace:
            self.traces.append(_snapshot(g, ctx, coloured))
        return assemble(ctx, colors, self.directed)


def _members(n: int, cliques) -> list[list[int]]:
    members: list[list[int]] = [[] for _ in range(n)]
    for i, k in enumerate(cliques):
        for v in k:
            members[v].append(i)
    return members


def assemble(ctx: SeparationContext, colors: dict, directed: bool):
    """Glue the component trees around ``C`` according to ``colors``.

    Components of one colour sharing a vertex of ``C`` form a dominance
    chain.  Taking components dominators-first, each one is hung by its
    neighbour-of-``C`` clique either on ``C`` (first of its chain) or on the
    furthest clique of the lowest same-coloured component above it.  In the
    directed case colour 0 hangs with darts pointing towards ``C`` and colour
    1 with darts pointing away; a component tree is reversed when needed.
    """
    cliques: list[tuple[int, ...]] = [ctx.C]
    edges: list[tuple[int, int]] = []
    where: dict[tuple[int, int], int] = {}
    for comp in ctx.components:
        flip = False
        if directed:
            towards = (comp.n_node, comp.c_node) in set(comp.tree.edges)
            flip = towards != (colors[comp.id] == 0)
        for x, k in enumerate(comp.cliques):
            if x != comp.c_node:
                where[(comp.id, x)] = len(cliques)
                cliques.append(k)
        for a, b in comp.tree.edges:
            if comp.c_node in (a, b):
                continue
            if flip:
                a, b = b, a
            edges.append((where[(comp.id, a)], where[(comp.id, b)]))

    bottom: dict[tuple[object, int], Component] = {}
    for comp in sorted(ctx.components, key=lambda c: c.order_key):
        col = colors[comp.id]
        v0 = comp.W[0]
        above = bottom.get((col, v0))
        if above is None:
            anchor = 0
        else:
            if not dominates(above, comp):
                raise InvariantViolation(
                    f"component {comp.id} is not dominated by {above.id} on its chain"
                )
            anchor = where[(above.id, above.F[v0])]
        hook = where[(comp.id, comp.n_node)]
        if directed and col == 1:
            edges.append((anchor, hook))
        else:
            edges.append((hook, anchor))
        for v in comp.W:
            bottom[(col, v)] = comp
    return cliques, edges


def check_F_paths(ctx: SeparationContext) -> None:
    """For ``v`` in ``W``, the cliques containing ``v`` are the path from ``C`` to ``F(v)``."""
    for comp in ctx.components:
        nb = comp.tree.neighbors()
        parent = {comp.c_node: None}
        stack = [comp.c_node]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        for v in comp.W:
            path = set()
            x = comp.F[v]
            while x is not None:
                path.add(x)
                x = parent[x]
            holding = {i for i, k in enumerate(comp.cliques) if v in k}
            if path != holding:
                raise InvariantViolation(f"cliques holding {v} in component {comp.id} are not the C..F path")


def _snapshot(g: Graph, ctx: SeparationContext, coloured: Coloured) -> SeparatorTrace:
    lab = g.labels
    comps = ctx.components
    relations = {}
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            relations[(a, b)] = compare(comps[a], comps[b]).value
    ps = coloured.partition
    return SeparatorTrace(
        C=[lab[v] for v in ctx.C],
        private=[[lab[v] for v in c.private] for c in comps],
        W=[[lab[v] for v in c.W] for c in comps],
        classes={k: list(v) for k, v in ctx.classes.items()},
        uppers=list(ps.uppers),
        d_single={k: list(v) for k, v in ps.d_single.items()},
        d_pair={k: list(v) for k, v in ps.d_pair.items()},
        colors=dict(coloured.colors),
        relations=relations,
    )
