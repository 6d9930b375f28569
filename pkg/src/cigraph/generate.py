"""Deterministic graph generators for corpora and stress tests."""

from __future__ import annotations

import random
from typing import Optional

from cigraph.graphs import Graph
from cigraph.posets import Poset, completely_ranked, poset_sum
from cigraph.posets import ci_graph as _ci_graph

__all__ = [
    "bowtie_chain",
    "complete_graph",
    "fan",
    "path_graph",
    "random_chordal",
    "random_chordal_ci",
    "random_ci",
    "random_tc_cograph",
]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.complete(n)


def fan(k: int) -> Graph:
    """The k-fan: a k-vertex path joined with one hub (k+1 vertices)."""
    if k < 1:
        raise ValueError("fan needs a path of at least one vertex")
    edges = [(i, i + 1) for i in range(k - 1)]
    hub = k
    edges.extend((i, hub) for i in range(k))
    return Graph(k + 1, edges)


def bowtie_chain(k: int) -> Graph:
    """k bowties glued in a row: the C-I graph of alternating 2/1 layers."""
    if k < 1:
        raise ValueError("bowtie chain needs at least one bowtie")
    layers: list[int] = []
    for _ in range(k):
        layers.extend([2, 1])
    layers.append(2)
    return _ci_graph(completely_ranked(layers))


def random_ci(n: int, seed: Optional[int] = None) -> tuple[Graph, Poset]:
    """A random C-I graph with its generating poset.

    Draws a sum of randomly ranked posets: random layer counts and sizes,
    split over a few incomparable summands.  The graph is guaranteed to be
    a C-I graph but need not be chordal or a cograph.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    parts = []
    left = n
    while left:
        share = rng.randint(1, left)
        layers = []
        while share:
            size = rng.randint(1, share)
            layers.append(size)
            share -= size
        parts.append(completely_ranked(layers))
        left -= sum(layers)
    p = poset_sum(parts)
    return _ci_graph(p), p


def random_chordal_ci(n: int, seed: Optional[int] = None) -> Graph:
    """A random connected chordal graph with two independent simplicial vertices.

    Grows a clique path: each new vertex attaches inside one of the two end
    cliques, always taking that clique's private vertices with it, which
    pins the independent simplicial count at two.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    t = min(n, rng.randint(1, 4))
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    path: list[list[int]] = [list(range(t))]
    for v in range(t, n):
        end = rng.choice((0, -1)) if len(path) > 1 else 0
        clique = path[end]
        if len(path) == 1:
            must = []
        else:
            neighbor = path[1] if end == 0 else path[-2]
            must = [u for u in clique if u not in set(neighbor)]
        rest = [u for u in clique if u not in set(must)]
        attach = list(must) + [u for u in rest if rng.random() < 0.6]
        if not attach:
            attach = [rng.choice(clique)]
        edges.extend((u, v) for u in attach)
        if len(attach) == len(clique):
            clique.append(v)
        else:
            new_clique = sorted(attach) + [v]
            if end == 0:
                path.insert(0, new_clique)
            else:
                path.append(new_clique)
    return Graph(n, edges)


def random_chordal(n: int, seed: Optional[int] = None) -> Graph:
    """A random connected chordal graph grown by simplicial attachment."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    t = min(n, rng.randint(1, 3))
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    cliques: list[list[int]] = [list(range(t))]
    for v in range(t, n):
        base = rng.choice(cliques)
        size = rng.randint(1, len(base))
        attach = sorted(rng.sample(base, size))
        edges.extend((u, v) for u in attach)
        if size == len(base):
            base.append(v)
        else:
            cliques.append(attach + [v])
    return Graph(n, edges)


def random_tc_cograph(n: int, seed: Optional[int] = None) -> Graph:
    """A random C-I cograph: universal vertices over paired cliques.

    Picks r >= 1 non-adjacent clique pairs plus at least r universal
    vertices and joins everything except within the pairs; with no room
    for a pair (or occasionally by choice) returns a complete graph.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    if n < 3 or rng.random() < 0.15:
        return complete_graph(n)
    r = rng.randint(1, n // 3)
    sizes = []
    left = n - r  # reserve one universal vertex per pair
    for i in range(r):
        most = left - 2 * (r - 1 - i)
        c1 = rng.randint(1, most - 1)
        c3 = rng.randint(1, most - c1)
        sizes.append((c1, c3))
        left -= c1 + c3
    # parts laid out consecutively, universal vertices last
    blocks = []
    start = 0
    for c1, c3 in sizes:
        blocks.append((range(start, start + c1), range(start + c1, start + c1 + c3)))
        start += c1 + c3
    non_adjacent = set()
    for c1, c3 in blocks:
        non_adjacent.update((u, v) for u in c1 for v in c3)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in non_adjacent
    ]
    return Graph(n, edges)
