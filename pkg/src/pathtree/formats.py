"""JSON and DOT encodings of clique trees.

Both encodings name vertices by graph label, so a certificate can be read
back against the same edge-list file without relying on clique order.

JSON: ``{"cliques": [[labels]], "edges": [[i, j]], "directed": bool}`` plus
``"darts": [[from, to]]`` for a directed tree.  DOT: node ``n<i>`` labelled
with the sorted clique in braces, ``--`` edges or ``->`` darts.
"""

from __future__ import annotations

import json
import re

from .chordal import CliqueSet, CliqueTree
from .graph import Graph


class TreeFormatError(ValueError):
    pass


def _labelled(g: Graph, cs: CliqueSet) -> list[list[int]]:
    return [sorted(g.labels[v] for v in k) for k in cs.cliques]


def tree_to_json(g: Graph, cs: CliqueSet, t: CliqueTree) -> str:
    doc = {
        "cliques": _labelled(g, cs),
        "edges": [list(e) for e in t.edges],
        "directed": t.directed,
    }
    if t.directed:
        doc["darts"] = [list(e) for e in t.edges]
    return json.dumps(doc, indent=1)


def tree_to_dot(g: Graph, cs: CliqueSet, t: CliqueTree, name: str = "cliques") -> str:
    kind, arrow = ("digraph", "->") if t.directed else ("graph", "--")
    lines = [f"{kind} {name} {{"]
    for i, k in enumerate(_labelled(g, cs)):
        lines.append(f'  n{i} [label="{{{",".join(map(str, k))}}}"];')
    for a, b in t.edges:
        lines.append(f"  n{a} {arrow} n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*n(\d+)\s*\[label="\{([^}]*)\}"\];\s*$')
_EDGE = re.compile(r"^\s*n(\d+)\s*(--|->)\s*n(\d+);\s*$")


def _parse_dot(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not re.match(r"^\s*(di)?graph\b", lines[0]):
        raise TreeFormatError("DOT input must start with 'graph' or 'digraph'")
    directed = lines[0].lstrip().startswith("digraph")
    nodes: dict[int, list[int]] = {}
    edges = []
    for ln in lines[1:]:
        if ln.strip() == "}":
            continue
        if m := _NODE.match(ln):
            body = m.group(2).strip()
            nodes[int(m.group(1))] = [int(x) for x in body.split(",")] if body else []
        elif m := _EDGE.match(ln):
            if (m.group(2) == "->") != directed:
                raise TreeFormatError(f"edge style does not match graph kind: {ln.strip()}")
            edges.append((int(m.group(1)), int(m.group(3))))
        else:
            raise TreeFormatError(f"unrecognised DOT line: {ln.strip()}")
    if sorted(nodes) != list(range(len(nodes))):
        raise TreeFormatError("DOT nodes must be n0..n(p-1)")
    return [nodes[i] for i in range(len(nodes))], edges, directed


def _parse_json(text: str):
    try:
        doc = json.loads(text)
        cliques = [[int(x) for x in k] for k in doc["cliques"]]
        directed = bool(doc.get("directed", False))
        pairs = doc["darts"] if directed and "darts" in doc else doc["edges"]
        edges = [(int(a), int(b)) for a, b in pairs]
    except (ValueError, KeyError, TypeError) as exc:
        raise TreeFormatError(f"bad JSON tree: {exc}") from exc
    return cliques, edges, directed


def parse_tree(text: str, g: Graph) -> tuple[CliqueSet, CliqueTree]:
    """Read a JSON or DOT tree and map its clique labels onto ``g``'s ids."""
    cliques, edges, directed = _parse_json(text) if text.lstrip().startswith("{") else _parse_dot(text)
    index = {lab: v for v, lab in enumerate(g.labels)}
    mapped = []
    for k in cliques:
        missing = [x for x in k if x not in index]
        if missing:
            raise TreeFormatError(f"clique {k} names vertices {missing} absent from the graph")
        mapped.append(tuple(sorted(index[x] for x in k)))
    p = len(mapped)
    if any(not (0 <= a < p and 0 <= b < p) for a, b in edges):
        raise TreeFormatError("tree edge refers to a missing node")
    members: list[list[int]] = [[] for _ in range(g.n)]
    for i, k in enumerate(mapped):
        for v in k:
            members[v].append(i)
    return CliqueSet(mapped, members), CliqueTree(p, edges, directed)
