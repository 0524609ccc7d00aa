"""Path graph recognition.

Colours live in ``1..r+1`` where ``r`` is the number of uppers: components
coloured ``i`` hang on the branch of ``C`` that holds ``u_i``, and colour
``r+1`` is a spare branch shared by everything that fits nowhere else.
"""

from __future__ import annotations

from . import invariants
from .errors import CROSS_PAIR, Rejected
from .graph import Graph
from .partition import (
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


def color_cross_upper(ps: PartitionState, f: dict) -> dict:
    """Members of ``D_i`` antipodal to another upper must take colour ``i``.

    ``g`` in ``D_i`` is antipodal to an upper ``u`` exactly when ``u`` shares
    a vertex of ``W(g)`` without being ``u_i``.
    """
    for i, members in ps.d_single.items():
        ui = ps.uppers[i - 1]
        for cid in members:
            if cid == ui:
                continue
            if any(u != ui for v in ps.comps[cid].W for u in ps.u_of_v.get(v, ())):
                f[cid] = i
    return f


def color_cross_pairs(ps: PartitionState, lowest: dict, f: dict) -> dict:
    """Force members of ``D_{i,j}`` antipodal to coloured members of ``D_i`` or ``D_j``."""
    for (i, j), members in ps.d_pair.items():
        for cid in members:
            g = ps.comps[cid]
            into_i = antipodal_into(ps, lowest, i, g)
            into_j = antipodal_into(ps, lowest, j, g)
            if into_i and into_j:
                raise Rejected(CROSS_PAIR, f"component {cid} in D_{i},{j} is antipodal into both D_{i} and D_{j}")
            if into_j:
                f[cid] = i
            elif into_i:
                f[cid] = j
    return f


def color_separator(ctx: SeparationContext, check: bool = False) -> Coloured:
    reps = [ctx.components[r] for r in ctx.order]
    ps = build_partition(reps)
    r = ps.r
    f = {u: i for i, u in enumerate(ps.uppers, start=1)}
    dags = {(i,): build_antipodal_dag([ps.comps[c] for c in ms]) for i, ms in ps.d_single.items()}
    dags.update({key: build_antipodal_dag([ps.comps[c] for c in ms]) for key, ms in ps.d_pair.items()})

    color_cross_upper(ps, f)
    f7 = dict(f)
    for i in ps.d_single:
        extend_coloring(dags[(i,)], (i, r + 1), f)
    f8 = dict(f)
    lowest = compute_lowest_colored(ps, dags, f, lambda k: k)
    color_cross_pairs(ps, lowest, f)
    f9 = dict(f)
    for key in ps.d_pair:
        extend_coloring(dags[key], key, f)

    if check:
        invariants.check_partition(ps)
        for key, dag in dags.items():
            invariants.check_dag(dag, ps)
            invariants.check_proper(dag.order, ps, f)
            invariants.check_downward_unset(dag, ps, f7 if len(key) == 1 else f9, f"after cross colouring of D_{key}")
        invariants.check_extends(f7, f8, "extending D_i")
        invariants.check_extends(f8, f9, "crossing D_i,j")
        invariants.check_extends(f9, f, "extending D_i,j")
        invariants.check_palettes(ps, f, lambda key: {key[0], r + 1} if len(key) == 1 else set(key))
        for i, u in enumerate(ps.uppers, start=1):
            if f[u] != i:
                raise invariants.InvariantViolation(f"upper u_{i} has colour {f[u]}")
    return Coloured(lift_quotient_coloring(ctx, f), ps, dags)


def recognize_path_graph(g: Graph, trace: bool = False, check: bool = False) -> Recognition:
    """Decide whether ``g`` is a path graph; on success carry a clique path tree."""
    return Driver(color_separator, directed=False, trace=trace, check=check).run(g)


def trace_separator(g: Graph, C, check: bool = False) -> SeparatorTrace:
    """Run one separator step on a connected path graph at the given clique ``C``.

    ``C`` is given in vertex ids.  Raises :class:`~pathtree.errors.Rejected`
    when the step fails.
    """
    drv = Driver(color_separator, directed=False, trace=True, check=check)
    drv.separate(g, C)
    return drv.traces[-1]
