import itertools

import numpy as np
import pytest

from stratnet import build_graph
from stratnet.catalog import cycle, hypercube, johnson

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, passed: bool, detail: str = ""):
    _ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def floyd_warshall(adj: np.ndarray) -> np.ndarray:
    n = len(adj)
    inf = n + 1
    dist = np.where(adj, 1, inf)
    np.fill_diagonal(dist, 0)
    for k in range(n):
        dist = np.minimum(dist, dist[:, [k]] + dist[[k], :])
    return dist


def path_graph(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def k2():
    return hypercube(1)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def j52():
    return johnson(5, 2)
