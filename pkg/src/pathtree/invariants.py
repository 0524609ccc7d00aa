"""Expensive self-checks run when a recognizer is called with ``check=True``.

Each check raises :class:`~pathtree.errors.InvariantViolation`.  They are
quadratic in the number of components and meant for tests and fuzzing.
"""

from __future__ import annotations

from .errors import InvariantViolation
from .partition import AntipodalDag, PartitionState
from .separation import antipodal, dominates


def check_partition(ps: PartitionState) -> None:
    """Cross-part antipodality follows the rigid pattern of the partition."""
    comps = ps.comps
    ids = list(comps)
    for v, at_v in ps.u_of_v.items():
        if len(at_v) > 2:
            raise InvariantViolation(f"{len(at_v)} uppers attach at vertex {v}")
    for i, u in enumerate(ps.uppers, start=1):
        if ps.home[u] != (i,):
            raise InvariantViolation(f"upper {u} is not in D_{i}")
    for a in ids:
        for b in ids:
            if a == b or ps.home[a] == ps.home[b] or not antipodal(comps[a], comps[b]):
                continue
            ha, hb = ps.home[a], ps.home[b]
            if len(ha) == 2 and not (len(hb) == 1 and hb[0] in ha):
                raise InvariantViolation(f"{b} is antipodal to {a} in D_{ha} but lies in D_{hb}")
            if len(ha) == 1:
                for k in hb:
                    if k != ha[0] and not antipodal(comps[a], ps.upper(k)):
                        raise InvariantViolation(
                            f"{a} in D_{ha[0]} is antipodal to {b} below u_{k} but not to u_{k}"
                        )


def check_dag(dag: AntipodalDag, ps: PartitionState) -> None:
    """Ancestry in the DAG is exactly dominance among the members."""
    comps = ps.comps
    for x in dag.order:
        if len(dag.parents[x]) > 2:
            raise InvariantViolation(f"node {x} has {len(dag.parents[x])} parents")
        anc = dag.ancestors(x)
        for y in dag.order:
            if y != x and (y in anc) != dominates(comps[y], comps[x]):
                raise InvariantViolation(f"ancestry of {y} over {x} disagrees with dominance")
    for v, at_v in dag.frontier.items():
        if len(at_v) > 2:
            raise InvariantViolation(f"frontier at {v} holds {at_v}")


def check_proper(members: list[int], ps: PartitionState, f: dict) -> None:
    comps = ps.comps
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if antipodal(comps[a], comps[b]) and f[a] == f[b]:
                raise InvariantViolation(f"antipodal {a} and {b} share colour {f[a]}")


def check_extends(before: dict, after: dict, label: str) -> None:
    for k, v in before.items():
        if after.get(k) != v:
            raise InvariantViolation(f"{label}: colour of {k} changed from {v} to {after.get(k)}")


def check_downward_unset(dag: AntipodalDag, ps: PartitionState, f: dict, label: str) -> None:
    """If ``g`` was left unset, so was everything it dominates."""
    for x in dag.order:
        if f.get(x) is None:
            for y in dag.order:
                if y != x and f.get(y) is not None and dominates(ps.comps[x], ps.comps[y]):
                    raise InvariantViolation(f"{label}: {y} is set below unset {x}")


def check_palettes(ps: PartitionState, f: dict, palette_of) -> None:
    for cid, key in ps.home.items():
        allowed = palette_of(key)
        if f.get(cid) not in allowed:
            raise InvariantViolation(f"component {cid} in D_{key} has colour {f.get(cid)}, allowed {allowed}")
