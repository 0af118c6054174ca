import pytest

from pclie.algebra import build_reduction, element
from pclie.graph import CommutationGraph
from pclie.words import GeneratorOrder

# G1: one edge; G2: free on three letters; G3: x joined to y and z
G1_EDGES = [("x", "y")]
G3_EDGES = [("x", "y"), ("x", "z")]


@pytest.fixture(scope="session")
def G1():
    return CommutationGraph("xyz", G1_EDGES)


@pytest.fixture(scope="session")
def G2():
    return CommutationGraph("xyz", [])


@pytest.fixture(scope="session")
def G3():
    return CommutationGraph("xyz", G3_EDGES)


@pytest.fixture(scope="session")
def O3():
    """x > y > z"""
    return GeneratorOrder.canonical("xyz")


@pytest.fixture(scope="session")
def T1(G1, O3):
    return build_reduction(O3, G1, 5)


@pytest.fixture(scope="session")
def T2(G2, O3):
    return build_reduction(O3, G2, 5)


@pytest.fixture(scope="session")
def T3(G3, O3):
    return build_reduction(O3, G3, 5)


@pytest.fixture
def el():
    """el(T, text) -> NF element."""
    return element


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
