"""Simple undirected graphs and the simplicial-vertex machinery.

Vertices are dense integer indices ``0..n-1``.  Arbitrary string labels from
input files are mapped to indices on ingestion (see :mod:`cigraph.io`) and the
mapping travels with the graph for output.  Vertex sets are plain sorted
tuples of indices throughout the package.

Graphs are immutable after construction, so every operation here is a pure
read and instances can be shared freely across workers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Graph",
    "independent_simplicial_count",
    "is_claw_free",
    "is_connected",
    "is_simplicial",
    "simplicial_vertices",
]

# Brute-force independent-set search is capped at this many simplicial
# vertices; larger sets report "not computed" (None).
MAX_BRUTE_SIMPLICIAL = 20


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Neighbor lists are kept sorted so that pairwise-adjacency work can use
    merge-style scans and all outputs are deterministic; membership tests go
    through per-vertex frozensets, which never leak iteration order.
    """

    __slots__ = ("n", "m", "adj", "labels", "_adjsets", "_masks")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if n <= 0:
            raise ValueError("graph must have at least one vertex")
        seen: set[tuple[int, int]] = set()
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in neighbors
        )
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must match vertex count")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        self.labels: Optional[tuple[str, ...]] = labels
        self._adjsets: tuple[frozenset[int], ...] = tuple(
            frozenset(ns) for ns in self.adj
        )
        self._masks: Optional[tuple[int, ...]] = None

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as sorted pairs, lexicographically."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, built on first use."""
        if self._masks is None:
            masks = []
            for ns in self.adj:
                b = 0
                for w in ns:
                    b |= 1 << w
                masks.append(b)
            self._masks = tuple(masks)
        return self._masks

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under vertex permutation ``v -> perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of ``v`` induces a complete subgraph."""
    _check_vertex(g, v)
    ns = g.adj[v]
    for i, u in enumerate(ns):
        us = g._adjsets[u]
        for w in ns[i + 1 :]:
            if w not in us:
                return False
    return True


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if is_simplicial(g, v))


def _max_independent_subset(g: Graph, vertices: Sequence[int]) -> int:
    """Size of a maximum independent subset of ``vertices``, by branching."""
    verts = list(vertices)
    adjsets = g._adjsets

    def rec(candidates: list[int], size: int, best: int) -> int:
        if size + len(candidates) <= best:
            return best
        if not candidates:
            return max(best, size)
        v = candidates[0]
        rest = candidates[1:]
        # include v
        best = rec([w for w in rest if w not in adjsets[v]], size + 1, best)
        # exclude v
        best = rec(rest, size, best)
        return best

    return rec(verts, 0, 0)


def independent_simplicial_count(g: Graph) -> Optional[int]:
    """Maximum number of pairwise non-adjacent simplicial vertices.

    Returns None ("not computed") when the simplicial set exceeds
    MAX_BRUTE_SIMPLICIAL vertices; the quantity is only needed on chordal
    inputs and small oracle sweeps, where the set stays tiny.
    """
    simp = simplicial_vertices(g)
    if len(simp) > MAX_BRUTE_SIMPLICIAL:
        return None
    return _max_independent_subset(g, simp)


def is_connected(g: Graph) -> bool:
    """Standard connectivity; single-vertex graphs count as connected."""
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbors."""
    masks = g.adjacency_masks()
    for v in range(g.n):
        nb = masks[v]
        for a in g.adj[v]:
            # candidates for the second leaf: neighbors of v above a,
            # non-adjacent to a
            second = nb & ~masks[a] & ~((1 << (a + 1)) - 1)
            x = second
            while x:
                b = (x & -x).bit_length() - 1
                x &= x - 1
                third = second & ~masks[b] & ~((1 << (b + 1)) - 1)
                if third:
                    return False
    return True
