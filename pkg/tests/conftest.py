import pytest

from src.graphs import SimpleGraph
from src.groups.labels import VertexLabel
from src.groups.words import Presentation

Z = VertexLabel.integers()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive suites over larger graphs")


def uniform(graph: SimpleGraph, label: VertexLabel = Z) -> Presentation:
    return Presentation.uniform(graph, label)


@pytest.fixture
def c5():
    return SimpleGraph.cycle(5)


@pytest.fixture
def c4():
    return SimpleGraph.cycle(4)


@pytest.fixture
def k3():
    return SimpleGraph.complete(["a", "b", "c"])


@pytest.fixture
def p4():
    return SimpleGraph.path(["a", "b", "c", "d"])


@pytest.fixture
def p5():
    return SimpleGraph.path(["a", "b", "c", "d", "e"])


@pytest.fixture
def edge():
    return SimpleGraph.path(["a", "b"])


@pytest.fixture
def free_pair():
    return SimpleGraph.discrete(["a", "b"])


@pytest.fixture
def c5_integers(c5):
    return uniform(c5)


@pytest.fixture
def free_product(free_pair):
    """ℤ ∗ ℤ"""
    return uniform(free_pair)


@pytest.fixture
def free_abelian(edge):
    """ℤ × ℤ"""
    return uniform(edge)


@pytest.fixture
def klein(edge):
    """ℤ/2 × ℤ/2"""
    return uniform(edge, VertexLabel.cyclic(2))
