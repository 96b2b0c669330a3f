import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from epcops.graph import EdgePeriodicGraph, parse_graph  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

CRITERIA_RESULTS: list[str] = []


def static_graph(n, pairs, directed=False):
    return EdgePeriodicGraph(n=n, directed=directed, edges=tuple((u, v, "1") for u, v in pairs))


def static_cycle(n, directed=False):
    return static_graph(n, [(i, (i + 1) % n) for i in range(n)], directed)


@pytest.fixture
def six_cycle():
    return parse_graph((FIXTURES / "six_cycle.g").read_text())


@pytest.fixture
def edge2():
    return static_graph(2, [(0, 1)])


@pytest.fixture
def c4():
    return static_cycle(4)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_RESULTS:
            terminalreporter.write_line(line)
