from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from pathtree.graph import Graph, parse_graph

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


def load(name: str) -> Graph:
    return parse_graph((DATA / name).read_text())


def ids_of(g: Graph, labels) -> list[int]:
    index = {lab: v for v, lab in enumerate(g.labels)}
    return [index[x] for x in labels]


def brute_has_hole(g: Graph) -> bool:
    """Some induced cycle on at least four vertices (exponential; tiny graphs only)."""
    for size in range(4, g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            ss = set(s)
            if any(sum(w in ss for w in g.adj[v]) != 2 for v in s):
                continue
            # 2-regular: a hole iff it is one cycle
            seen, stack = {s[0]}, [s[0]]
            while stack:
                x = stack.pop()
                for y in g.adj[x]:
                    if y in ss and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == size:
                return True
    return False


@pytest.fixture
def fifteen() -> Graph:
    return load("fifteen.txt")


@pytest.fixture
def eight() -> Graph:
    return load("eight.txt")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
