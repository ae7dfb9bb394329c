import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from waring_ident import PointSet  # noqa: E402

SEPTIC_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, -1, 2), (1, 3, -1),
                 (1, 2, 3), (2, -1, 1), (-2, -1, 3), (-1, 3, 4), (3, -1, 4)]
FIVE_ON_LINE_PLUS_ONE = [(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (1, 4, 0), (0, 0, 1)]
# no three collinear, not on a conic
SIX_GENERAL = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, -1, 5)]
SIX_ON_CONIC = [(1, t, t * t) for t in range(6)]
GRID_3X3 = [(i, j, 1) for i in range(3) for j in range(3)]


@pytest.fixture
def septic_points():
    return PointSet.from_coords(SEPTIC_POINTS)


@pytest.fixture
def five_on_line_plus_one():
    return PointSet.from_coords(FIVE_ON_LINE_PLUS_ONE)


@pytest.fixture
def six_general():
    return PointSet.from_coords(SIX_GENERAL)


@pytest.fixture
def six_on_conic():
    return PointSet.from_coords(SIX_ON_CONIC)


@pytest.fixture
def grid():
    return PointSet.from_coords(GRID_3X3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
