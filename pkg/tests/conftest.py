import pytest

from circledepth import PointSet, validate_general_position
from circledepth.constructions import random_general_position

# One verdict line per acceptance criterion, printed after the run summary so
# they survive output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


def make_set(coords, colors=None) -> PointSet:
    ps = PointSet.from_coords(coords, colors)
    violations = validate_general_position(ps)
    assert not violations, f"fixture not in general position: {violations}"
    return ps


def random_corpus(count: int, sizes, seed0: int = 1000, coord_range: int = 10**6):
    """Deterministic list of certified random sets cycling through sizes."""
    sizes = list(sizes)
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        out.append(random_general_position(n, seed0 + i, coord_range))
    return out


@pytest.fixture(scope="session")
def quad():
    # Convex quadrilateral used throughout; its diagonals behave differently:
    # bisector (0,2) carries weights (1,0,1) and (1,3) carries (1,2,1).
    return make_set([(0, 0), (10, 0), (9, 9), (0, 10)])


@pytest.fixture(scope="session")
def triangle():
    return make_set([(0, 0), (4, 0), (0, 4)])
