import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dualgraph import WeightedGraph  # noqa: E402


def G(verts, edges=()):
    return WeightedGraph(verts, edges)


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture
def point():
    return WeightedGraph.point()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
