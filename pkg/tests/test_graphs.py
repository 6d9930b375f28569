import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cigraph.generate import fan, path_graph
from cigraph.graphs import (
    Graph,
    independent_simplicial_count,
    is_claw_free,
    is_connected,
    is_simplicial,
    simplicial_vertices,
)
from cigraph.oracle import is_chordal_bruteforce

from .conftest import bowtie, claw, cycle, random_graph


def brute_simplicial(g: Graph, v: int) -> bool:
    return all(
        g.has_edge(a, b) for a, b in itertools.combinations(g.adj[v], 2)
    )


def brute_max_independent(g: Graph, verts) -> int:
    best = 0
    for k in range(len(verts), 0, -1):
        for sub in itertools.combinations(verts, k):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                return k
    return best


def brute_claw_free(g: Graph) -> bool:
    for quad in itertools.combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, v) for v in leaves) and all(
                not g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)
            ):
                return False
    return True


def test_construction_validates():
    with pytest.raises(ValueError):
        Graph(0, [])
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    g = Graph(3, [(0, 1), (1, 2)])
    assert g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))


def test_edge_count_is_half_degree_sum():
    g = bowtie()
    assert 2 * g.m == sum(g.degree(v) for v in range(g.n))


def test_simplicial_complete_graph():
    k4 = Graph.complete(4)
    assert all(is_simplicial(k4, v) for v in range(4))


def test_simplicial_claw_center_and_leaves():
    g = claw()
    assert not is_simplicial(g, 0)
    assert all(is_simplicial(g, v) for v in (1, 2, 3))


def test_simplicial_fan_endpoint_matches_bruteforce():
    g = fan(4)  # path 0-1-2-3 joined with hub 4
    for v in range(g.n):
        assert is_simplicial(g, v) == brute_simplicial(g, v)
    assert is_simplicial(g, 0)  # path endpoint
    assert not is_simplicial(g, 4)  # hub


def test_simplicial_rejects_bad_vertex():
    with pytest.raises(ValueError):
        is_simplicial(claw(), 7)


def test_simplicial_vertices_examples():
    assert simplicial_vertices(path_graph(4)) == (0, 3)
    assert simplicial_vertices(claw()) == (1, 2, 3)
    assert simplicial_vertices(cycle(4)) == ()


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_simplicial_vertices_invariant_under_relabeling(seed):
    import random as _random

    rng = _random.Random(seed)
    g = random_graph(rng.randint(2, 8), rng.random(), seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    expected = sorted(perm[v] for v in simplicial_vertices(g))
    assert list(simplicial_vertices(h)) == expected


def test_independent_simplicial_count_examples():
    assert independent_simplicial_count(Graph.complete(5)) == 1
    assert independent_simplicial_count(claw()) == 3
    # bowtie: four outer simplicial vertices, two triangles
    g = bowtie()
    assert simplicial_vertices(g) == (0, 1, 3, 4)
    assert brute_max_independent(g, simplicial_vertices(g)) == 2
    assert independent_simplicial_count(g) == 2


@pytest.mark.parametrize("seed", range(12))
def test_independent_simplicial_count_matches_bruteforce(seed):
    g = random_graph(7, 0.45, seed)
    simp = simplicial_vertices(g)
    assert independent_simplicial_count(g) == brute_max_independent(g, simp)


def test_is_connected():
    assert is_connected(path_graph(4))
    assert is_connected(Graph(1, []))
    assert not is_connected(Graph(2, []))


def test_claw_free_examples():
    assert not is_claw_free(claw())
    assert is_claw_free(cycle(4)) == brute_claw_free(cycle(4)) == True
    assert is_claw_free(fan(4)) == brute_claw_free(fan(4)) == True


@pytest.mark.parametrize("seed", range(15))
def test_claw_free_matches_bruteforce(seed):
    g = random_graph(8, 0.4, seed)
    assert is_claw_free(g) == brute_claw_free(g)


@pytest.mark.parametrize("seed", range(8))
def test_removing_simplicial_keeps_chordal(seed):
    from cigraph.generate import random_chordal

    g = random_chordal(8, seed)
    assert is_chordal_bruteforce(g)
    for v in simplicial_vertices(g):
        if g.n == 1:
            continue
        keep = [u for u in range(g.n) if u != v]
        relabel = {u: i for i, u in enumerate(keep)}
        h = Graph(
            g.n - 1,
            [
                (relabel[a], relabel[b])
                for a, b in g.edges()
                if a != v and b != v
            ],
        )
        assert is_chordal_bruteforce(h)


def test_relabel_roundtrip():
    g = bowtie()
    perm = [4, 3, 2, 1, 0]
    h = g.relabel(perm)
    inverse = [perm.index(i) for i in range(5)]
    assert h.relabel(inverse) == g


def test_labels_are_checked():
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], labels=["a"])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], labels=["a", "a"])
    g = Graph(2, [(0, 1)], labels=["x", "y"])
    assert g.labels == ("x", "y")
