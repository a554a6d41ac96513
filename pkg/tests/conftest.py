import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fracpoly.graph import Graph, all_graphs, family  # noqa: E402


@st.composite
def graphs(draw, min_d=2, max_d=5):
    """Random graphs on 1..d without isolated vertices."""
    d = draw(st.integers(min_d, max_d))
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    edges = set(chosen)
    for v in range(1, d + 1):
        if not any(v in e for e in edges):
            w = draw(st.sampled_from([u for u in range(1, d + 1) if u != v]))
            edges.add((min(v, w), max(v, w)))
    return Graph(d, frozenset(edges))


FAMILY_SET = [
    ("cycle", 3), ("cycle", 5), ("cycle", 7), ("complete", 2), ("complete", 3), ("complete", 4),
    ("complete", 5), ("path", 4), ("complete_bipartite", 2, 2), ("complete_bipartite", 2, 3),
]


@pytest.fixture(scope="session")
def sweep_graphs():
    return [g for d in range(2, 6) for g in all_graphs(d)]


@pytest.fixture(scope="session")
def family_set():
    return [family(name, *params) for name, *params in FAMILY_SET]


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
