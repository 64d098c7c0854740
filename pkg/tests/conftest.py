import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oddhole.cycles import family_ell  # noqa: E402
from oddhole.generate import enumerate_girth5  # noqa: E402
from oddhole.graph import cycle_graph  # noqa: E402
from oddhole.named import p_minus, petersen, theta, theta_minus, theta_plus  # noqa: E402

MAX_N = 11


@pytest.fixture(scope="session")
def girth5_graphs():
    """Every connected girth >= 5 graph with at most 11 vertices."""
    return list(enumerate_girth5(MAX_N))


@pytest.fixture(scope="session")
def g2_members(girth5_graphs):
    return [g for g in girth5_graphs if family_ell(g) == 2]


@pytest.fixture(scope="session")
def corpus():
    return {
        "petersen": petersen(),
        "theta+": theta_plus(),
        "theta": theta(),
        "theta-": theta_minus(),
        "p-": p_minus(),
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "C9": cycle_graph(9),
    }
