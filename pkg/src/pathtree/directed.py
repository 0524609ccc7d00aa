"""Directed path graph recognition.

Same decomposition as :mod:`pathtree.pathgraph`, but only two sides of
``C`` are available: colour 0 hangs with darts pointing towards ``C`` and
colour 1 with darts pointing away from it.
"""

from __future__ import annotations

from collections import deque

from . import invariants
from .errors import CROSS_PAIR, CROSS_UPPER, UPPER_COLORING, Rejected
from .graph import Graph
from .partition import (
    AntipodalDag,
    PartitionState,
    antipodal_into,
    build_antipodal_dag,
    build_partition,
    compute_lowest_colored,
    extend_coloring,
    lift_quotient_coloring,
)
from .recognize import Coloured, Driver, Recognition, SeparatorTrace
from .separation import SeparationContext

PALETTE = (0, 1)


def color_upper_bipartite(ps: PartitionState) -> dict:
    """2-colour the uppers; two uppers are antipodal iff their ``W`` meet."""
    nb: dict[int, set[int]] = {u: set() for u in ps.uppers}
    for at_v in ps.u_of_v.values():
        if len(at_v) == 2:
            a, b = at_v
            nb[a].add(b)
            nb[b].add(a)
    f: dict[int, int] = {}
    for root in sorted(ps.uppers):
        if root in f:
            continue
        f[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in nb[x]:
                if y not in f:
                    f[y] = 1 - f[x]
                    queue.append(y)
                elif f[y] == f[x]:
                    raise Rejected(UPPER_COLORING, f"uppers {x} and {y} close an odd antipodal cycle")
    return f


def color_cross_upper_directed(ps: PartitionState, f: dict) -> dict:
    """Members of ``D_i`` antipodal to an upper take the opposite colour."""
    for i, members in ps.d_single.items():
        ui = ps.uppers[i - 1]
        for cid in members:
            if cid == ui:
                continue
            seen = {f[u] for v in ps.comps[cid].W for u in ps.u_of_v.get(v, ()) if u != ui}
            if len(seen) == 2:
                raise Rejected(CROSS_UPPER, f"component {cid} is antipodal to uppers of both colours")
            if seen:
                f[cid] = 1 - seen.pop()
    return f


def extend_coloring_directed(dag: AntipodalDag, f: dict) -> dict:
    return extend_coloring(dag, PALETTE, f)


def color_cross_pairs_directed(ps: PartitionState, lowest: dict, f: dict) -> dict:
    for (i, j), members in ps.d_pair.items():
        for cid in members:
            g = ps.comps[cid]
            into_i = antipodal_into(ps, lowest, i, g)
            into_j = antipodal_into(ps, lowest, j, g)
            if into_i and into_j:
                raise Rejected(CROSS_PAIR, f"component {cid} in D_{i},{j} is antipodal into both D_{i} and D_{j}")
            if into_j:
                f[cid] = f[ps.uppers[i - 1]]
            elif into_i:
                f[cid] = f[ps.uppers[j - 1]]
    return f


def color_separator_directed(ctx: SeparationContext, check: bool = False) -> Coloured:
    reps = [ctx.components[r] for r in ctx.order]
    ps = build_partition(reps)
    f = color_upper_bipartite(ps)
    dags = {(i,): build_antipodal_dag([ps.comps[c] for c in ms]) for i, ms in ps.d_single.items()}
    dags.update({key: build_antipodal_dag([ps.comps[c] for c in ms]) for key, ms in ps.d_pair.items()})

    color_cross_upper_directed(ps, f)
    fg = dict(f)
    for i in ps.d_single:
        extend_coloring_directed(dags[(i,)], f)
    fh = dict(f)
    lowest = compute_lowest_colored(ps, dags, f, lambda k: f[ps.uppers[k - 1]])
    color_cross_pairs_directed(ps, lowest, f)
    fi = dict(f)
    for key in ps.d_pair:
        extend_coloring_directed(dags[key], f)

    if check:
        invariants.check_partition(ps)
        for key, dag in dags.items():
            invariants.check_dag(dag, ps)
            invariants.check_proper(dag.order, ps, f)
            invariants.check_downward_unset(dag, ps, fg if len(key) == 1 else fi, f"after cross colouring of D_{key}")
        invariants.check_extends(fg, fh, "extending D_i")
        invariants.check_extends(fh, fi, "crossing D_i,j")
        invariants.check_extends(fi, f, "extending D_i,j")
        invariants.check_palettes(ps, f, lambda key: set(PALETTE))
        invariants.check_proper(ps.uppers, ps, f)
    return Coloured(lift_quotient_coloring(ctx, f), ps, dags)


def recognize_directed_path_graph(g: Graph, trace: bool = False, check: bool = False) -> Recognition:
    """Decide whether ``g`` is a directed path graph; on success carry a directed clique path tree."""
    return Driver(color_separator_directed, directed=True, trace=trace, check=check).run(g)


def trace_separator_directed(g: Graph, C, check: bool = False) -> SeparatorTrace:
    drv = Driver(color_separator_directed, directed=True, trace=True, check=check)
    drv.separate(g, C)
    return drv.traces[-1]
