import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cigraph.errors import ContractViolation
from cigraph.graphs import Graph
from cigraph.posets import (
    Poset,
    antichain,
    chain,
    ci_graph,
    ci_graph_mismatch,
    completely_ranked,
    poset_sum,
    transitive_reduction,
)


def naive_ci_graph(p: Poset) -> Graph:
    """Reference implementation: classify every pair from the full closure."""
    n = p.n
    up = [set() for _ in range(n)]
    order = p.topological_order()
    for x in reversed(order):
        for y in p.upper_covers(x):
            up[x].add(y)
            up[x] |= up[y]
    covers = set(p.covers)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            comparable = b in up[a] or a in up[b]
            cover = (a, b) in covers or (b, a) in covers
            if cover or not comparable:
                edges.append((a, b))
    return Graph(n, edges)


def random_poset(n: int, seed: int) -> Poset:
    rng = random.Random(seed)
    pairs = [
        (a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.4
    ]
    perm = list(range(n))
    rng.shuffle(perm)
    return transitive_reduction(n, [(perm[a], perm[b]) for a, b in pairs])


def test_validate_examples():
    assert chain(3).validate()
    bad = Poset(3, [(0, 1), (1, 2), (0, 2)])
    assert not bad.validate()
    assert "implied" in bad.violation()
    cyc = Poset(2, [(0, 1), (1, 0)])
    assert not cyc.validate()
    assert "cycle" in cyc.violation()
    dup = Poset(3, [(0, 1), (0, 1)])
    assert not dup.validate()
    assert "duplicate" in dup.violation()


def test_constructor_rejects_garbage():
    with pytest.raises(ValueError):
        Poset(0, [])
    with pytest.raises(ValueError):
        Poset(2, [(0, 0)])
    with pytest.raises(ValueError):
        Poset(2, [(0, 5)])


def test_comparable():
    c = chain(3)
    assert c.comparable(0, 2)
    assert not antichain(3).comparable(0, 1)
    ranked = completely_ranked([2, 1, 2])
    assert not ranked.comparable(0, 1)  # same rank in a complete ranking
    assert ranked.comparable(0, 3)
    with pytest.raises(ValueError):
        c.comparable(1, 1)


def test_ci_graph_examples():
    assert list(ci_graph(chain(4)).edges()) == [(0, 1), (1, 2), (2, 3)]
    assert ci_graph(antichain(3)) == Graph.complete(3)
    bowtie_edges = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
    assert list(ci_graph(completely_ranked([2, 1, 2])).edges()) == bowtie_edges


def test_ci_graph_requires_valid_poset():
    with pytest.raises(ContractViolation):
        ci_graph(Poset(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.mark.parametrize("seed", range(20))
def test_ci_graph_matches_naive_reference(seed):
    p = random_poset(seed % 6 + 2, seed)
    assert ci_graph(p) == naive_ci_graph(p)


def test_ci_graph_matches_naive_on_all_small_posets():
    from cigraph.oracle import enumerate_labeled_posets

    for n in (1, 2, 3, 4):
        for p in enumerate_labeled_posets(n):
            assert ci_graph(p) == naive_ci_graph(p)


def test_poset_sum_examples():
    s = poset_sum([chain(1), chain(1)])
    assert ci_graph(s) == Graph.complete(2)
    s = poset_sum([antichain(2), antichain(2)])
    assert ci_graph(s) == Graph.complete(4)
    # ranked chain of three + single element = 3-fan
    s = poset_sum([completely_ranked([1, 1, 1]), chain(1)])
    g = ci_graph(s)
    assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_poset_sum_requires_summands():
    with pytest.raises(ValueError):
        poset_sum([])


@pytest.mark.parametrize("seed", range(10))
def test_sum_gives_join(seed):
    a = random_poset(seed % 4 + 1, seed)
    b = random_poset(seed % 3 + 1, seed + 100)
    s = poset_sum([a, b])
    g = ci_graph(s)
    ga, gb = ci_graph(a), ci_graph(b)
    expected = set()
    expected.update(ga.edges())
    expected.update((u + a.n, v + a.n) for u, v in gb.edges())
    expected.update((u, v + a.n) for u in range(a.n) for v in range(b.n))
    assert set(g.edges()) == expected


def test_completely_ranked():
    assert completely_ranked([3]) == antichain(3)
    assert completely_ranked([1, 1, 1]) == chain(3)
    explicit = completely_ranked([{3, 4}, {0}, {1, 2}])
    assert explicit.covers == ((0, 1), (0, 2), (3, 0), (4, 0))
    assert explicit.ranks == (1, 2, 2, 0, 0)
    with pytest.raises(ValueError):
        completely_ranked([])
    with pytest.raises(ValueError):
        completely_ranked([2, 0, 1])
    with pytest.raises(ValueError):
        completely_ranked([{0}, {2}])  # not a partition of 0..1


def test_extremal_elements():
    c = chain(3)
    assert c.maximal_elements() == (2,)
    assert c.minimal_elements() == (0,)
    a = antichain(3)
    assert a.maximal_elements() == (0, 1, 2)
    assert a.minimal_elements() == (0, 1, 2)
    r = completely_ranked([2, 1, 2])
    assert r.maximal_elements() == (3, 4)
    assert r.minimal_elements() == (0, 1)


def test_height():
    assert chain(5).height() == 5
    assert antichain(4).height() == 1
    assert completely_ranked([2, 1, 2]).height() == 3


def test_transitive_reduction():
    p = transitive_reduction(3, [(0, 1), (1, 2), (0, 2)])
    assert p.covers == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        transitive_reduction(2, [(0, 1), (1, 0)])


@pytest.mark.parametrize("seed", range(10))
def test_transitive_reduction_preserves_order(seed):
    p = random_poset(6, seed)
    # reducing the full closure must reproduce the covers
    closure = [
        (a, b)
        for a in range(p.n)
        for b in range(p.n)
        if a != b and p.less(a, b)
    ]
    assert transitive_reduction(p.n, closure) == p


def test_ci_graph_mismatch():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert ci_graph_mismatch(chain(4), p4) is None
    assert ci_graph_mismatch(antichain(4), p4) == (0, 2)
    # missing-edge side: chain(3) against K3
    assert ci_graph_mismatch(chain(3), Graph.complete(3)) == (0, 2)


def test_ci_graph_mismatch_capped_on_wild_certificates():
    # antichain C-I graph is complete; against a path almost everything is
    # wrong, and the scan must bail out early rather than materialize it
    n = 2000
    path = Graph(n, [(i, i + 1) for i in range(n - 1)])
    assert ci_graph_mismatch(antichain(n), path) == (0, 2)


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_ci_graph_connected_and_short_cycles(seed):
    from cigraph.graphs import is_connected
    from cigraph.oracle import max_induced_cycle

    p = random_poset(seed % 6 + 1, seed)
    g = ci_graph(p)
    assert is_connected(g)
    assert max_induced_cycle(g) <= 4
