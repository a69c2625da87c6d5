import pytest

from fusionring.burnside import BurnsideRing
from fusionring.fusion import inner_fusion_system
from fusionring.io import load_fusion, load_group
from fusionring.stable import compute_alpha_basis

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def d8():
    G, _ = load_group("d8")
    return G


@pytest.fixture(scope="session")
def d8_ring():
    G, names = load_group("d8")
    return BurnsideRing(G, names=names)


@pytest.fixture(scope="session")
def s4():
    return load_group("s4")[0]


@pytest.fixture(scope="session")
def a6():
    return load_group("a6")[0]


@pytest.fixture(scope="session")
def fusion_systems():
    """The three saturated fusion systems on D8, keyed by ambient name."""
    return {
        "D8": load_fusion("d8-inner"),
        "S4": load_fusion("s4-d8"),
        "A6": load_fusion("a6-d8"),
    }


@pytest.fixture(scope="session")
def bases(fusion_systems):
    return {k: compute_alpha_basis(F) for k, F in fusion_systems.items()}


def inner(name):
    G, names = load_group(name)
    return inner_fusion_system(G, 2, names)
