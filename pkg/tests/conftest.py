import numpy as np
import pytest

from netvalue import Graph, kernels

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


def random_graph(rng: np.random.Generator, n_max: int = 40) -> Graph:
    """Arbitrary simple graph with a random density, for property checks."""
    n = int(rng.integers(1, n_max + 1))
    density = rng.random()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density * 0.3]
    return Graph.from_edges(n, pairs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
