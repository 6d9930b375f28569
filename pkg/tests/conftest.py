import random

import pytest

from cigraph.graphs import Graph


def claw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Random graph plus a random spanning tree to force connectivity."""
    rng = random.Random(seed)
    edges = {
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    }
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(12345)
