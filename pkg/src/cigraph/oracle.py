"""Exhaustive ground truth at small sizes.

Everything here re-derives its answers from first principles: labeled posets
are enumerated outright, cover-incomparability membership is settled by
trying every poset, and chordality / cograph / induced-cycle checks run by
subset enumeration.  The recognition pipelines are cross-validated against
these answers, so this module deliberately shares no algorithmic machinery
with them.
"""

from __future__ import annotations

from typing import Iterator, Optional

from cigraph.errors import ContractViolation
from cigraph.graphs import Graph, is_connected
from cigraph.posets import Poset

__all__ = [
    "LABELED_POSET_COUNTS",
    "enumerate_labeled_posets",
    "is_chordal_bruteforce",
    "is_ci_graph_bruteforce",
    "is_cograph_bruteforce",
    "max_induced_cycle",
]

# number of labeled posets on n elements, n = 1..7
LABELED_POSET_COUNTS = (1, 3, 19, 219, 4231, 130023, 6129859)

_MAX_ENUM_N = 7
_MAX_SUBSET_N = 12


def _enumerate_tables(
    n: int,
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """All strict orders on 0..n-1 as (up, down, cover_up, cover_down) bitmask rows.

    Posets are built one element at a time: element k is inserted above a
    down-closed set D and below an up-closed set U, where every pair of D
    and U was already related (so transitivity never adds pairs among the
    old elements).  Each labeled poset arises from exactly one (D, U)
    choice, so no deduplication is needed.  Covers update locally: old
    covers between D and U are destroyed by the new element; the new
    element covers the maximal elements of D and is covered by the minimal
    elements of U.
    """
    if not 1 <= n <= _MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {_MAX_ENUM_N}, got {n}")

    def extend(k, up, down, cup, cdown):
        # down-closed subsets of 0..k-1
        full = (1 << k) - 1
        bitz = 1 << k
        ideals = [
            d
            for d in range(full + 1)
            if all(down[x] & d == down[x] for x in _bits(d))
        ]
        for d_mask in ideals:
            common_up = full & ~d_mask
            for x in _bits(d_mask):
                common_up &= up[x]
            # up-closed subsets of common_up
            u_mask = common_up
            while True:
                if all(up[x] & common_up & ~u_mask == 0 for x in _bits(u_mask)):
                    max_d = [x for x in _bits(d_mask) if up[x] & d_mask == 0]
                    min_u = [x for x in _bits(u_mask) if down[x] & u_mask == 0]
                    up2 = list(up)
                    down2 = list(down)
                    cup2 = list(cup)
                    cdown2 = list(cdown)
                    for x in _bits(d_mask):
                        up2[x] |= bitz
                        cup2[x] &= ~u_mask
                    for x in _bits(u_mask):
                        down2[x] |= bitz
                        cdown2[x] &= ~d_mask
                    for x in max_d:
                        cup2[x] |= bitz
                    for x in min_u:
                        cdown2[x] |= bitz
                    up2.append(u_mask)
                    down2.append(d_mask)
                    cup2.append(sum(1 << x for x in min_u))
                    cdown2.append(sum(1 << x for x in max_d))
                    yield tuple(up2), tuple(down2), tuple(cup2), tuple(cdown2)
                if u_mask == 0:
                    break
                u_mask = (u_mask - 1) & common_up

    def rec(k, state):
        if k == n:
            yield state
            return
        for nxt in extend(k, *state):
            yield from rec(k + 1, nxt)

    yield from rec(1, ((0,), (0,), (0,), (0,)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _poset_from_cover_rows(n: int, cup: tuple[int, ...]) -> Poset:
    covers = [(u, v) for u in range(n) for v in _bits(cup[u])]
    p = Poset(n, covers)
    assert p.validate(), "enumerated covers must form a valid poset"
    return p


def enumerate_labeled_posets(
    n: int, chunks: int = 1, chunk: int = 0
) -> Iterator[Poset]:
    """Every labeled poset on 0..n-1, exactly once, as a validated Poset.

    ``chunks``/``chunk`` split the stream round-robin for parallel sweeps;
    the union over all chunk indices is the full stream.
    """
    if chunks < 1 or not 0 <= chunk < chunks:
        raise ValueError("need chunks >= 1 and 0 <= chunk < chunks")
    for i, (up, down, cup, cdown) in enumerate(_enumerate_tables(n)):
        if i % chunks == chunk:
            yield _poset_from_cover_rows(n, cup)


def _ci_rows_match(g_masks, n, up, down, cup, cdown) -> bool:
    full = (1 << n) - 1
    for u in range(n):
        non_edges = (up[u] & ~cup[u]) | (down[u] & ~cdown[u])
        if full & ~(1 << u) & ~non_edges != g_masks[u]:
            return False
    return True


def is_ci_graph_bruteforce(g: Graph, chunks: int = 1, chunk: int = 0) -> Optional[Poset]:
    """A poset whose cover-incomparability graph equals ``g``, or None.

    Tries every labeled poset on the vertex set, comparing adjacency rows
    directly from the order relation: an edge is a cover pair or an
    incomparable pair, a non-edge a comparable non-cover pair.
    """
    if g.n > _MAX_ENUM_N:
        raise ValueError(
            f"brute-force membership is limited to {_MAX_ENUM_N} vertices"
        )
    if not is_connected(g):
        raise ContractViolation("C-I graphs are connected; input must be too")
    masks = g.adjacency_masks()
    n = g.n
    for i, (up, down, cup, cdown) in enumerate(_enumerate_tables(n)):
        if i % chunks != chunk:
            continue
        if _ci_rows_match(masks, n, up, down, cup, cdown):
            return _poset_from_cover_rows(n, cup)
    return None


def search_chunk(
    n: int, edges: list[tuple[int, int]], chunks: int, chunk: int
) -> Optional[list[tuple[int, int]]]:
    """Worker-friendly wrapper: covers of a matching poset from one chunk."""
    g = Graph(n, edges)
    p = is_ci_graph_bruteforce(g, chunks=chunks, chunk=chunk)
    return list(p.covers) if p is not None else None


# ---------------------------------------------------------------------------
# subset-enumeration checks


def _check_subset_size(g: Graph) -> None:
    if g.n > _MAX_SUBSET_N:
        raise ValueError(
            f"subset enumeration is limited to {_MAX_SUBSET_N} vertices"
        )


def _induces_cycle(g: Graph, members: list[int]) -> bool:
    """Do these vertices induce a (chordless, by construction) cycle?"""
    k = len(members)
    mset = set(members)
    for v in members:
        if sum(1 for w in g.adj[v] if w in mset) != 2:
            return False
    # all degrees 2: a disjoint union of cycles; connected iff one cycle
    start = members[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in g.adj[x]:
            if w in mset and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def max_induced_cycle(g: Graph) -> int:
    """Length of a longest induced cycle; 0 when there is none."""
    _check_subset_size(g)
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size < 3 or size <= best:
            continue
        members = [v for v in range(g.n) if mask >> v & 1]
        if _induces_cycle(g, members):
            best = size
    return best


def is_chordal_bruteforce(g: Graph) -> bool:
    """No induced cycle of length four or more, by subset enumeration."""
    _check_subset_size(g)
    for mask in range(1 << g.n):
        if mask.bit_count() < 4:
            continue
        members = [v for v in range(g.n) if mask >> v & 1]
        if _induces_cycle(g, members):
            return False
    return True


def is_cograph_bruteforce(g: Graph) -> bool:
    """No induced four-vertex path, over all 4-subsets.

    Among four-vertex graphs with exactly three edges only the path has
    maximum degree two, so the degree profile identifies it.
    """
    _check_subset_size(g)
    from itertools import combinations

    for quad in combinations(range(g.n), 4):
        qset = set(quad)
        degs = sorted(sum(1 for w in g.adj[v] if w in qset) for v in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True
