import pytest

from kempe_covers import EdgeColoring, Multigraph


def pytest_runtest_logreport(report):
    # the acceptance module prints its PASS lines itself; mirror failures
    if report.when == "call" and report.failed and "test_acceptance" in report.nodeid:
        print(f"\nACCEPTANCE FAIL: {report.nodeid}")

# frozen oracle output: the two Kempe class representatives of K3,3
# (lexicographically smallest coloring of each class)
K33_C1 = (1, 2, 3, 2, 3, 1, 3, 1, 2)
K33_C2 = (1, 2, 3, 3, 1, 2, 2, 3, 1)


def make_k33() -> Multigraph:
    """Complete bipartite graph on 3+3 vertices, edges in (left, right) order."""
    return Multigraph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def make_theta() -> Multigraph:
    """Two vertices joined by three parallel edges."""
    return Multigraph.from_edges(2, [(0, 1)] * 3)


def make_petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_edges(10, outer + spokes + inner)


def make_cube() -> Multigraph:
    """3-cube; edge ids grouped by dimension (0-3 dim 0, 4-7 dim 1, 8-11 dim 2)."""
    pairs = []
    for dim in range(3):
        pairs.extend((v, v | (1 << dim)) for v in range(8) if not v & (1 << dim))
    return Multigraph.from_edges(8, pairs)


def cube_dimension_coloring() -> EdgeColoring:
    return EdgeColoring(3, {e: e // 4 + 1 for e in range(12)})


def make_cycle(length: int) -> Multigraph:
    return Multigraph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def alternating_coloring(length: int) -> EdgeColoring:
    return EdgeColoring(2, {e: e % 2 + 1 for e in range(length)})


@pytest.fixture
def k33():
    return make_k33()


@pytest.fixture
def k33_pair(k33):
    return (
        EdgeColoring(3, dict(enumerate(K33_C1))),
        EdgeColoring(3, dict(enumerate(K33_C2))),
    )


@pytest.fixture
def theta():
    return make_theta()


@pytest.fixture
def theta_coloring():
    return EdgeColoring(3, {0: 1, 1: 2, 2: 3})


@pytest.fixture
def petersen():
    return make_petersen()


@pytest.fixture
def cube():
    return make_cube()
