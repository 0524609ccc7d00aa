"""Acceptance criteria; each test records one PASS/FAIL line for the summary."""

from __future__ import annotations

import functools
import random
import statistics
import time

from conftest import ACCEPTANCE_LINES, ids_of, load
from pathtree.chordal import maximal_cliques
from pathtree.directed import recognize_directed_path_graph
from pathtree.errors import InvariantViolation
from pathtree.generators import random_chordal, random_interval_graph, random_rooted_path_positive, scaling_instance
from pathtree.oracle import (
    check_clique_path_tree,
    check_directed_clique_path_tree,
    oracle_is_directed_path_graph,
    oracle_is_path_graph,
)
from pathtree.pathgraph import recognize_path_graph, trace_separator

FIFTEEN_CLIQUES = {
    frozenset(k) for k in (
        {1, 2, 3, 4, 5}, {1, 2, 4, 5, 10}, {2, 3, 4, 5, 8}, {1, 2, 6}, {4, 5, 9},
        {2, 3, 4, 7}, {6, 11, 12}, {9, 15}, {7, 13}, {7, 14},
    )
}
EIGHT_CLIQUES = {frozenset(k) for k in ({1, 2, 3, 4}, {3, 4, 5}, {1, 2, 7}, {1, 3, 8}, {2, 4, 6})}


def record(number: int, ok: bool, text: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def labelled_cliques(g, cs):
    return {frozenset(g.labels[v] for v in k) for k in cs.cliques}


@functools.lru_cache(maxsize=None)
def corpus(max_cliques: int, count: int, salt: int):
    graphs = []
    for i in range(count):
        rng = random.Random(salt * 100_003 + i)
        k = rng.randint(2, max_cliques)
        g = random_chordal(k, width=rng.randint(2, k + 1), seed=rng, extra=rng.randint(1, 3 * k))
        graphs.append(g)
    return graphs


def test_criterion_1_fifteen():
    g = load("fifteen.txt")
    runs = []
    for _ in range(5):
        r = recognize_path_graph(g)
        runs.append(r.elapsed)
    ms = statistics.median(runs) * 1000
    ok = (
        r.accepted
        and r.p == 10
        and labelled_cliques(g, r.cliques) == FIFTEEN_CLIQUES
        and check_clique_path_tree(g, r.cliques, r.tree)
        and ms < 10
    )
    record(1, ok, f"fifteen-vertex example accepted={r.accepted} cliques={r.p} checker ok, median {ms:.2f} ms (< 10 ms)")
    assert ok


def test_criterion_2_eight():
    g = load("eight.txt")
    r = recognize_directed_path_graph(g)
    ok = (
        r.accepted
        and r.p == 5
        and labelled_cliques(g, r.cliques) == EIGHT_CLIQUES
        and r.tree.directed
        and check_directed_clique_path_tree(g, r.cliques, r.tree)
    )
    record(2, ok, f"eight-vertex example directed accepted={r.accepted} cliques={r.p} directed checker ok")
    assert ok


def test_criterion_3_separator_trace():
    g = load("fifteen.txt")
    tr = trace_separator(g, ids_of(g, [1, 2, 3, 4, 5]))
    name = {i: f"g{i + 1}" for i in range(5)}
    uppers = [name[u] for u in tr.uppers]
    d_single = {i: sorted(name[c] for c in ms) for i, ms in tr.d_single.items()}
    d_pair = {k: sorted(name[c] for c in ms) for k, ms in tr.d_pair.items()}
    dom, anti = set(), set()
    for (a, b), rel in tr.relations.items():
        if rel == "left-dominates":
            dom.add((name[a], name[b]))
        elif rel == "right-dominates":
            dom.add((name[b], name[a]))
        elif rel == "antipodal":
            anti.add(frozenset((name[a], name[b])))
        elif rel == "equivalent":
            dom.add(("equivalent", name[a] + name[b]))
    expected_dom = {("g5", "g1"), ("g5", "g4"), ("g3", "g2"), ("g3", "g4")}
    expected_anti = {frozenset(p) for p in (("g1", "g2"), ("g1", "g3"), ("g3", "g5"), ("g2", "g5"), ("g2", "g4"))}
    ok = (
        tr.C == [1, 2, 3, 4, 5]
        and uppers == ["g3", "g5"]
        and d_single == {1: ["g2", "g3"], 2: ["g1", "g5"]}
        and d_pair == {(1, 2): ["g4"]}
        and dom == expected_dom
        and anti == expected_anti
        and tr.relations[(0, 3)] == "unattached"
    )
    record(
        3, ok,
        f"uppers {uppers}, D_1 {d_single.get(1)}, D_2 {d_single.get(2)}, D_1,2 {d_pair.get((1, 2))}, "
        f"{len(dom)} dominances and {len(anti)} antipodal pairs as listed",
    )
    assert ok


def _oracle_run(number, directed, max_cliques, count, salt):
    rec = recognize_directed_path_graph if directed else recognize_path_graph
    orc = oracle_is_directed_path_graph if directed else oracle_is_path_graph
    start = time.perf_counter()
    agree = positives = 0
    worst_p = 0
    bad = []
    for i, g in enumerate(corpus(max_cliques, count, salt)):
        p = maximal_cliques(g).p
        worst_p = max(worst_p, p)
        truth = orc(g, max_cliques=max_cliques)
        positives += truth
        if rec(g).accepted == truth:
            agree += 1
        else:
            bad.append(i)
    secs = time.perf_counter() - start
    ok = agree == count and count >= 300 and worst_p <= max_cliques and secs < 300
    record(
        number, ok,
        f"{agree}/{count} agree with the oracle (p <= {worst_p}; {positives} positive, "
        f"{count - positives} negative) in {secs:.1f} s" + (f"; disagreements at {bad[:5]}" if bad else ""),
    )
    return ok


def test_criterion_4_oracle_path_graphs():
    assert _oracle_run(4, directed=False, max_cliques=7, count=300, salt=4)


def test_criterion_5_oracle_directed():
    assert _oracle_run(5, directed=True, max_cliques=6, count=300, salt=5)


def test_criterion_6_class_chain():
    failures = 0
    for seed in range(200):
        for g in (random_interval_graph(1 + seed % 30, seed=seed), random_rooted_path_positive(1 + seed % 30, seed=seed)):
            if not (recognize_path_graph(g).accepted and recognize_directed_path_graph(g).accepted):
                failures += 1
    inclusion_breaks = directed_accepts = 0
    for g in corpus(7, 300, 4) + corpus(6, 300, 5):
        if recognize_directed_path_graph(g).accepted:
            directed_accepts += 1
            if not recognize_path_graph(g).accepted:
                inclusion_breaks += 1
    ok = failures == 0 and inclusion_breaks == 0
    record(
        6, ok,
        f"400 interval/rooted positives: {failures} not accepted by both; "
        f"{directed_accepts} directed accepts, {inclusion_breaks} not accepted as path graphs",
    )
    assert ok


def test_criterion_7_invariants():
    graphs = corpus(7, 300, 4) + corpus(6, 300, 5)
    graphs += [random_interval_graph(5 + s % 20, seed=s) for s in range(50)]
    graphs += [random_rooted_path_positive(5 + s % 20, seed=s) for s in range(50)]
    violations = []
    separators = 0
    for i, g in enumerate(graphs):
        for rec in (recognize_path_graph, recognize_directed_path_graph):
            try:
                r = rec(g, check=True)
            except InvariantViolation as exc:
                violations.append((i, rec.__name__, str(exc)))
                continue
            separators += len(r.separators)
    ok = not violations
    record(
        7, ok,
        f"{len(graphs)} graphs x 2 recognizers, {separators} separators with the W-size bound, "
        f"|u(v)| <= 2, DAG ancestry = dominance and proper colourings checked: {len(violations)} violations",
    )
    assert ok, violations[:3]


def test_criterion_8_scaling():
    sizes = [2000, 4000, 8000]
    times = []
    shapes = []
    accepted = True
    for n in sizes:
        g = scaling_instance(n, seed=11)
        shapes.append((g.n, g.m))
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            r = recognize_path_graph(g)
            best = min(best, time.perf_counter() - t0)
            accepted &= r.accepted
        times.append(best)
    ratios = [b / a for a, b in zip(times, times[1:])]
    ok = accepted and times[0] < 5 and all(x <= 4 for x in ratios)
    record(
        8, ok,
        f"n,m = {shapes}: {', '.join(f'{t:.2f} s' for t in times)}; doubling ratios "
        f"{', '.join(f'{x:.2f}' for x in ratios)} (limit 4; n=2000 limit 5 s)",
    )
    assert ok
