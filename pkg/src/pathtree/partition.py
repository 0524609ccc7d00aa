"""Upper set, the D-partition and constrained 2-colouring inside each part.

Shared by both recognizers; they differ only in palettes and in how the
colours of components antipodal to other parts are forced.

A colouring is a plain ``dict`` from component id to colour; a missing key
means the component is still unset.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field

from .errors import EXTEND, TRIANGLE, Rejected
from .separation import Component, SeparationContext, antipodal, dominates


@dataclass
class PartitionState:
    uppers: list[int]
    u_of_v: dict[int, list[int]]
    d_single: dict[int, list[int]]
    d_pair: dict[tuple[int, int], list[int]]
    home: dict[int, tuple[int, ...]]
    comps: dict[int, Component] = field(repr=False, default_factory=dict)

    @property
    def r(self) -> int:
        return len(self.uppers)

    def upper(self, i: int) -> Component:
        """The upper ``u_i`` (1-based)."""
        return self.comps[self.uppers[i - 1]]

    def index_of(self, cid: int) -> int:
        return self.uppers.index(cid) + 1


def build_partition(reps: list[Component]) -> PartitionState:
    """Find the uppers and sort every other class into ``D_i`` or ``D_{i,j}``.

    ``reps`` must come in dominance order (dominators first), as produced by
    :func:`~pathtree.separation.quotient`.  A class is an upper unless one of
    the uppers found so far dominates it; those candidates all contain any
    fixed vertex of its ``W``, so looking at ``u(v)`` for one ``v`` suffices.
    """
    comps = {c.id: c for c in reps}
    u_of_v: dict[int, list[int]] = defaultdict(list)
    found: list[int] = []
    doms: dict[int, list[int]] = {}
    for c in reps:
        by = [u for u in u_of_v.get(c.W[0], ()) if dominates(comps[u], c)]
        if by:
            doms[c.id] = by
            continue
        found.append(c.id)
        for v in c.W:
            at_v = u_of_v[v]
            at_v.append(c.id)
            if len(at_v) > 2:
                raise Rejected(TRIANGLE, f"uppers {at_v} all attach at vertex {v}")

    uppers = sorted(found, key=lambda cid: min(comps[cid].private))
    index = {u: i for i, u in enumerate(uppers, start=1)}
    d_single: dict[int, list[int]] = {i: [] for i in index.values()}
    d_pair: dict[tuple[int, int], list[int]] = {}
    home: dict[int, tuple[int, ...]] = {}
    for c in reps:
        if c.id in index:
            key: tuple[int, ...] = (index[c.id],)
        else:
            key = tuple(sorted(index[u] for u in doms[c.id]))
            if len(key) > 2:
                raise Rejected(TRIANGLE, f"class {c.id} is dominated by uppers {key}")
        home[c.id] = key
        if len(key) == 1:
            d_single[key[0]].append(c.id)
        else:
            d_pair.setdefault(key, []).append(c.id)
    return PartitionState(uppers, dict(u_of_v), d_single, d_pair, home, comps)


@dataclass
class AntipodalDag:
    """Dominance DAG over one part of the partition.

    ``parents`` holds the lowest dominators of each node, so ancestry is
    exactly dominance.  ``frontier[v]`` lists the lowest nodes containing
    ``v`` (never more than two).  ``antipodal`` is a set of antipodal pairs
    whose parity closure equals that of the full antipodality graph.
    """

    order: list[int]
    parents: dict[int, list[int]]
    children: dict[int, list[int]]
    frontier: dict[int, list[int]]
    antipodal: list[tuple[int, int]]

    def ancestors(self, x: int) -> set[int]:
        out: set[int] = set()
        stack = list(self.parents[x])
        while stack:
            y = stack.pop()
            if y not in out:
                out.add(y)
                stack.extend(self.parents[y])
        return out


def build_antipodal_dag(members: list[Component]) -> AntipodalDag:
    """Insert ``members`` (dominators first) one at a time.

    For a new node ``g`` and each ``v`` in ``W(g)``, the frontier nodes at
    ``v`` that do not dominate ``g`` are antipodal to it, and so is every
    ancestor of theirs reached before meeting a dominator of ``g``.  Those
    walks yield the antipodal witnesses and, at their boundary, the
    candidates for the lowest dominators of ``g``.  Two non-dominating
    frontier nodes at one vertex form a full antipodal triangle with ``g``.
    """
    comps = {c.id: c for c in members}
    parents: dict[int, list[int]] = {}
    children: dict[int, list[int]] = {}
    frontier: dict[int, list[int]] = {}
    witnesses: list[tuple[int, int]] = []
    order = []

    for g in members:
        gid = g.id
        verdict: dict[int, bool] = {}

        def dom(x: int) -> bool:
            if x not in verdict:
                verdict[x] = dominates(comps[x], g)
            return verdict[x]

        candidates: set[int] = set()
        walked: set[int] = set()
        new_frontier: dict[int, list[int]] = {}
        for v in g.W:
            at_v = frontier.get(v, [])
            behind = [x for x in at_v if not dom(x)]
            if len(behind) == 2:
                raise Rejected(
                    TRIANGLE,
                    f"components {behind[0]}, {behind[1]}, {gid} are pairwise antipodal at vertex {v}",
                )
            candidates.update(x for x in at_v if dom(x))
            for start in behind:
                if start in walked:
                    continue
                walked.add(start)
                queue = deque([start])
                while queue:
                    x = queue.popleft()
                    witnesses.append((x, gid))
                    for y in parents[x]:
                        if y in walked:
                            continue
                        walked.add(y)
                        if dom(y):
                            candidates.add(y)
                        else:
                            queue.append(y)
            new_frontier[v] = [gid, *behind]

        lowest = [
            x for x in candidates
            if not any(y != x and dominates(comps[x], comps[y]) for y in candidates)
        ]
        if len(lowest) > 2:
            raise Rejected(TRIANGLE, f"lowest dominators {sorted(lowest)} of {gid} are pairwise antipodal")
        lowest.sort()
        parents[gid] = lowest
        children[gid] = []
        for x in lowest:
            children[x].append(gid)
        frontier.update(new_frontier)
        order.append(gid)
    return AntipodalDag(order, parents, children, frontier, witnesses)


def extend_coloring(dag: AntipodalDag, palette: tuple, f: dict) -> dict:
    """2-colour the antipodality graph of one part, keeping preset colours.

    Each connected piece of the witness graph is 2-coloured from its smallest
    node; if the piece holds preset colours the colouring is aligned with
    them, otherwise its smallest node takes the first palette colour.  Nodes
    with no antipodal partner take the first palette colour too.
    """
    c1, c2 = palette
    flip = {c1: c2, c2: c1}
    nb: dict[int, list[int]] = {x: [] for x in dag.order}
    for a, b in dag.antipodal:
        nb[a].append(b)
        nb[b].append(a)
    parity: dict[int, int] = {}
    for root in sorted(dag.order):
        if root in parity:
            continue
        parity[root] = 0
        piece = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in nb[x]:
                if y not in parity:
                    parity[y] = 1 - parity[x]
                    piece.append(y)
                    queue.append(y)
                elif parity[y] == parity[x]:
                    raise Rejected(EXTEND, f"odd antipodal cycle through components {x} and {y}")
        preset = [x for x in piece if f.get(x) is not None]
        if preset:
            x0 = preset[0]
            if f[x0] not in palette:
                raise Rejected(EXTEND, f"component {x0} preset outside palette {palette}")
            base = f[x0] if parity[x0] == 0 else flip[f[x0]]
        else:
            base = c1
        for x in piece:
            want = base if parity[x] == 0 else flip[base]
            have = f.get(x)
            if have is None:
                f[x] = want
            elif have != want:
                raise Rejected(
                    EXTEND, f"component {x} is forced to both {have} and {want}"
                )
    return f


def compute_lowest_colored(ps: PartitionState, dags: dict, f: dict, target) -> dict[tuple[int, int], int]:
    """Lowest member of ``D_k`` with colour ``target(k)`` containing ``v``.

    Members of one colour that share ``v`` form a chain, and the DAG order
    lists higher members first, so the last write wins.
    """
    lowest: dict[tuple[int, int], int] = {}
    for k in range(1, ps.r + 1):
        want = target(k)
        for cid in dags[(k,)].order:
            if f.get(cid) == want:
                for v in ps.comps[cid].W:
                    lowest[(k, v)] = cid
    return lowest


def antipodal_into(ps: PartitionState, lowest: dict, k: int, g: Component) -> bool:
    """Is ``g`` antipodal to some coloured member of ``D_k``?

    Checked against ``lowest[(k, v)]`` for every ``v`` in ``W(g)``: a single
    arbitrary ``v`` is not enough when the lowest member at ``v`` dominates
    ``g`` while a lower one at another vertex does not.
    """
    tried: set[int] = set()
    for v in g.W:
        x = lowest.get((k, v))
        if x is None or x in tried:
            continue
        tried.add(x)
        if antipodal(ps.comps[x], g):
            return True
    return False


def lift_quotient_coloring(ctx: SeparationContext, f: dict) -> dict:
    """Give every member of a class the colour of its representative."""
    out = {}
    for rep, members in ctx.classes.items():
        for cid in members:
            out[cid] = f[rep]
    return out
