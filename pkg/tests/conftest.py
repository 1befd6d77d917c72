from __future__ import annotations

import pytest
from hypothesis import strategies as st

from p5free.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [0] * n
    for (i, j), k in zip(pairs, keep):
        if k:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, adj)


@pytest.fixture(scope="session")
def classes_upto_7():
    from p5free.corpus import enumerate_graphs

    return {n: list(enumerate_graphs(n)) for n in range(1, 8)}


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
