"""``pathtree`` command line.

Exit codes: 0 accept (or check passed, or all fuzz instances agree),
1 reject (or check failed, or a disagreement), 2 usage or input error.
Trees go to standard output; reports go to standard error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from pathlib import Path

from .chordal import is_chordal, maximal_cliques
from .directed import recognize_directed_path_graph
from .formats import TreeFormatError, parse_tree, tree_to_dot, tree_to_json
from .generators import GENERATORS, random_chordal, random_rooted_path_positive, scaling_instance
from .graph import Graph, GraphParseError, induced_subgraph, parse_graph, serialize_graph
from .oracle import (
    DEFAULT_MAX_CLIQUES,
    DEFAULT_MAX_CLIQUES_DIRECTED,
    OracleCapacityError,
    check_clique_path_tree,
    check_directed_clique_path_tree,
    oracle_is_directed_path_graph,
    oracle_is_path_graph,
)
from .pathgraph import recognize_path_graph

EXIT_OK, EXIT_REJECT, EXIT_INPUT = 0, 1, 2


def default_seed() -> int:
    raw = os.environ.get("PATHTREE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"PATHTREE_SEED must be an integer, got {raw!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    rec = recognize_directed_path_graph if args.directed else recognize_path_graph
    result = rec(g, trace=args.trace, check=args.check_invariants)
    kind = "directed path graph" if args.directed else "path graph"
    if args.trace:
        for tr in result.trace:
            print(tr.describe(), file=sys.stderr)
    ms = result.elapsed * 1000
    if not result.accepted:
        print(f"reject: not a {kind} [{result.stage}] {result.reason} ({ms:.2f} ms)", file=sys.stderr)
        return EXIT_REJECT
    seps = "; ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in result.separators)
    print(
        f"accept: {kind}, {result.p} cliques, {len(result.separators)} separators"
        f"{' ' + seps if seps and args.trace else ''} ({ms:.2f} ms)",
        file=sys.stderr,
    )
    emit = tree_to_json if args.emit == "json" else tree_to_dot
    sys.stdout.write(emit(g, result.cliques, result.tree))
    if args.emit == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    cs, t = parse_tree(_read(args.tree), g)
    if args.directed and not t.directed:
        print("error: --directed needs a directed tree (digraph or darts)", file=sys.stderr)
        return EXIT_INPUT
    if is_chordal(g):
        want = {frozenset(k) for k in maximal_cliques(g).cliques}
        have = {frozenset(k) for k in cs.cliques}
        if want != have or len(have) != cs.p:
            print("error: tree cliques are not the maximal cliques of the graph", file=sys.stderr)
            return EXIT_INPUT
    checker = check_directed_clique_path_tree if args.directed else check_clique_path_tree
    ok = checker(g, cs, t)
    print("ok" if ok else "fail", file=sys.stderr)
    return EXIT_OK if ok else EXIT_REJECT


def _disagrees(g: Graph, directed: bool, limit: int, fault: bool) -> bool:
    rec = recognize_directed_path_graph if directed else recognize_path_graph
    orc = oracle_is_directed_path_graph if directed else oracle_is_path_graph
    verdict = rec(g).accepted
    if fault:
        verdict = not verdict
    return verdict != orc(g, max_cliques=limit)


def minimize(g: Graph, still_bad) -> Graph:
    """Greedily drop vertices while ``still_bad`` keeps holding."""
    keep = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            trial = [x for x in keep if x != v]
            sub, _ = induced_subgraph(g, trial)
            if trial and still_bad(sub):
                keep = trial
                changed = True
    return induced_subgraph(g, keep)[0]


def cmd_fuzz(args) -> int:
    limit = DEFAULT_MAX_CLIQUES_DIRECTED if args.directed else DEFAULT_MAX_CLIQUES
    if args.max_cliques > limit:
        print(f"error: --max-cliques {args.max_cliques} exceeds the oracle limit {limit}", file=sys.stderr)
        return EXIT_INPUT
    seed = default_seed() if args.seed is None else args.seed
    rng = random.Random(seed)
    agree = 0
    start = time.perf_counter()
    for i in range(args.count):
        k = rng.randint(1, args.max_cliques)
        g = random_chordal(k, width=rng.randint(1, max(1, k)), seed=rng.randrange(2**32), extra=rng.randint(0, 2 * k))
        fault = args.inject_fault and i == 0
        if not _disagrees(g, args.directed, limit, fault):
            agree += 1
            continue
        witness = minimize(g, lambda h: _disagrees(h, args.directed, limit, fault))
        path = Path(args.witness)
        path.write_text(serialize_graph(witness))
        print(f"disagreement on instance {i}; minimized witness ({witness.n} vertices) in {path}", file=sys.stderr)
        print(f"{agree}/{i + 1} agree", file=sys.stderr)
        return EXIT_REJECT
    secs = time.perf_counter() - start
    print(f"{agree}/{args.count} agree ({secs:.1f} s, seed {seed})", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    g = GENERATORS[args.cls](args.k, seed=seed)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_bench(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    rec = recognize_directed_path_graph if args.directed else recognize_path_graph
    prev = None
    status = EXIT_OK
    for n in args.sizes:
        if args.directed:
            k = max(1, int(0.38 * n))
            g = random_rooted_path_positive(k, seed=seed, extra=n - k)
        else:
            g = scaling_instance(n, seed=seed)
        t0 = time.perf_counter()
        result = rec(g)
        dt = time.perf_counter() - t0
        ratio = "" if prev is None else f"  x{dt / prev:.2f}"
        print(f"n={g.n:6d} m={g.m:7d} p={result.p}  {dt:.3f} s{ratio}  {'accept' if result.accepted else 'reject'}")
        if not result.accepted:
            status = EXIT_REJECT
        prev = dt
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathtree", description="Recognize (directed) path graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide membership and print a clique path tree")
    p.add_argument("graph", help="edge-list file, or - for standard input")
    p.add_argument("--directed", action="store_true", help="recognize directed path graphs")
    p.add_argument("--emit", choices=("dot", "json"), default="dot")
    p.add_argument("--trace", action="store_true", help="print every separator's partition and colouring")
    p.add_argument("--check-invariants", action="store_true", help="run the internal self-checks")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("check", help="verify a clique path tree certificate")
    p.add_argument("graph")
    p.add_argument("tree", help="JSON or DOT tree as emitted by recognize")
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="compare the recognizer with the brute-force oracle")
    p.add_argument("--count", type=int, default=300)
    p.add_argument("--max-cliques", type=int, default=7)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--witness", default="witness.txt", help="where to write a minimized disagreement")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("gen", help="print a random instance as an edge list")
    p.add_argument("cls", choices=sorted(GENERATORS), metavar="class", help="one of: " + ", ".join(sorted(GENERATORS)))
    p.add_argument("k", type=int, help="number of maximal cliques")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the recognizer on growing positives")
    p.add_argument("--sizes", type=int, nargs="+", default=[2000, 4000, 8000])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 1) < 1:
        print("error: k must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (OSError, GraphParseError, TreeFormatError, OracleCapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
