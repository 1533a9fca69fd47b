import functools
import random

import pytest

from mader3ec.graph import MultiGraph
from mader3ec.oracle import drop_edges, random_3ec, weld

# Fig. 2 with figure vertex k as id k-1: tree path 1-2-...-7, back edges 1-6, 1-7, 2-4, 3-7, 4-5
FIG2_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 5), (0, 6), (1, 3), (2, 6), (3, 4)]

# Fig. 6 fragment: chain 0..8, a segment through 9 attached at 1, 4, 5, and parallel
# pairs that glue {2,3}, {6,7}, {0,8} into blobs
FIG6_EDGES = [(i, i + 1) for i in range(8)] + [(9, 1), (9, 4), (9, 5), (2, 3), (6, 7), (0, 8), (0, 8)]

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def two_k4_graph() -> MultiGraph:
    edges = K4_EDGES + [(u + 4, v + 4) for u, v in K4_EDGES] + [(0, 4), (1, 5)]
    return MultiGraph(8, edges)


def wheel(k: int) -> MultiGraph:
    rim = [(i, (i + 1) % k) for i in range(k)]
    return MultiGraph(k + 1, rim + [(k, i) for i in range(k)])


def cycle(k: int) -> MultiGraph:
    return MultiGraph(k, [(i, (i + 1) % k) for i in range(k)])


@pytest.fixture
def fig2():
    return MultiGraph(7, FIG2_EDGES)


@pytest.fixture
def fig6():
    return MultiGraph(10, FIG6_EDGES)


@pytest.fixture
def k23():
    return MultiGraph(2, [(0, 1)] * 3)


@pytest.fixture
def k4():
    return MultiGraph(4, K4_EDGES)


@pytest.fixture
def two_k4():
    return two_k4_graph()


@pytest.fixture
def w5():
    return wheel(5)


@functools.lru_cache(maxsize=None)
def build_corpus(size: int = 1000, seed: int = 2024) -> tuple[MultiGraph, ...]:
    """Seeded graphs with n <= 10 and min degree 3.

    A third are random_3ec outputs, a third are two of them welded by one or
    two edges, a third are random_3ec outputs with a few edges deleted.
    """
    rng = random.Random(seed)
    out = []
    for i in range(size):
        kind = i % 3
        if kind == 0:
            g = random_3ec(rng.randint(2, 10), 0, rng=rng)
        elif kind == 1:
            a = random_3ec(rng.randint(2, 5), 0, rng=rng)
            b = random_3ec(rng.randint(2, 5), 0, rng=rng)
            g = weld(a, b, rng.randint(1, 2), rng)
        else:
            g = drop_edges(random_3ec(rng.randint(4, 10), 0, rng=rng), rng.randint(1, 3), rng)
        out.append(g)
    return tuple(out)


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


ACCEPTANCE: list[str] = []


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}: {detail}"
    ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
