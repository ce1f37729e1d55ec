import itertools

import pytest
from hypothesis import strategies as st

from hspec.hypergraph import Hypergraph, is_connected

ACCEPTANCE_LINES: list[str] = []


def path_graph(n: int) -> Hypergraph:
    return Hypergraph(2, n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Hypergraph:
    return Hypergraph(2, n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph(2, n, tuple(itertools.combinations(range(1, n + 1), 2)))


@st.composite
def hypergraphs(draw, k=st.integers(2, 4), max_n=7, connected=False, min_edges=0, max_edges=12):
    kk = draw(k)
    n = draw(st.integers(kk, max(kk, max_n)))
    pool = list(itertools.combinations(range(1, n + 1), kk))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, min_size=min_edges, max_size=min(len(pool), max_edges)))
    H = Hypergraph(kk, n, tuple(edges))
    if connected:
        from hypothesis import assume

        assume(H.m > 0 and is_connected(H))
    return H


@pytest.fixture
def acceptance():
    def record(name: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
