import pytest

from negtype import from_graph, validate_metric


@pytest.fixture(scope="session")
def two_point():
    return validate_metric(["a", "b"], [[0.0, 1.0], [1.0, 0.0]])


@pytest.fixture(scope="session")
def collinear():
    """Points 0, 1, 2 on the line: supremal exponent exactly 2."""
    return from_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture(scope="session")
def four_cycle():
    """Unit 4-cycle: supremal exponent exactly 1."""
    return from_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])


@pytest.fixture(scope="session")
def equilateral():
    """All distances 1: ultrametric, so infinite supremal exponent."""
    return validate_metric(None, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
