"""Finite posets given by cover relations, and their cover-incomparability graphs.

A poset on elements ``0..n-1`` is stored as its Hasse diagram: a list of
cover pairs ``(u, v)`` meaning ``u`` is covered by ``v``.  The cover digraph
must be acyclic and transitively reduced (no cover pair may also be joined by
a longer directed path); :meth:`Poset.validate` checks both.

The cover-incomparability graph joins two elements exactly when one covers
the other or the two are incomparable; equivalently its non-edges are the
comparable-but-not-covering pairs.  :func:`ci_graph` builds it in time
proportional to the output plus the Hasse diagram, so certificates for very
large sparse graphs stay cheap to check.

Posets are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence, Union

from cigraph.errors import ContractViolation
from cigraph.graphs import Graph

__all__ = [
    "Poset",
    "antichain",
    "chain",
    "ci_graph",
    "ci_graph_mismatch",
    "completely_ranked",
    "poset_sum",
    "transitive_reduction",
]

# Above this size comparability queries fall back to breadth-first search
# instead of materializing per-element closure bitmasks.
_CLOSURE_LIMIT = 20_000


class Poset:
    """Poset on ``0..n-1`` defined by its cover pairs (Hasse diagram edges)."""

    __slots__ = (
        "n",
        "covers",
        "ranks",
        "_succ",
        "_pred",
        "_order",
        "_violation",
        "_validated",
        "_up_masks",
        "_down_masks",
    )

    def __init__(
        self,
        n: int,
        covers: Iterable[tuple[int, int]],
        ranks: Optional[Sequence[int]] = None,
    ):
        if n <= 0:
            raise ValueError("poset must have at least one element")
        covers = tuple(sorted(tuple(c) for c in covers))
        for u, v in covers:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"cover ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"cover ({u}, {u}) relates an element to itself")
        self.n = n
        self.covers: tuple[tuple[int, int], ...] = covers
        self.ranks: Optional[tuple[int, ...]] = (
            tuple(ranks) if ranks is not None else None
        )
        succ: list[list[int]] = [[] for _ in range(n)]
        pred: list[list[int]] = [[] for _ in range(n)]
        for u, v in covers:
            succ[u].append(v)
            pred[v].append(u)
        self._succ = tuple(tuple(s) for s in succ)
        self._pred = tuple(tuple(p) for p in pred)
        self._order: Optional[tuple[int, ...]] = None
        self._violation: Optional[str] = None
        self._validated: Optional[bool] = None
        self._up_masks: Optional[tuple[int, ...]] = None
        self._down_masks: Optional[tuple[int, ...]] = None

    # -- structure ---------------------------------------------------------

    def upper_covers(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def lower_covers(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def topological_order(self) -> Optional[tuple[int, ...]]:
        """A linear extension of the cover digraph, or None if cyclic."""
        if self._order is None:
            indeg = [len(self._pred[v]) for v in range(self.n)]
            ready = deque(v for v in range(self.n) if indeg[v] == 0)
            out = []
            while ready:
                v = ready.popleft()
                out.append(v)
                for w in self._succ[v]:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        ready.append(w)
            self._order = tuple(out) if len(out) == self.n else ()
        return self._order if self._order else None

    def validate(self) -> bool:
        """True iff the covers are acyclic, duplicate-free and reduced."""
        if self._validated is None:
            self._violation = self._find_violation()
            self._validated = self._violation is None
        return self._validated

    def violation(self) -> Optional[str]:
        self.validate()
        return self._violation

    def _find_violation(self) -> Optional[str]:
        for i in range(1, len(self.covers)):
            if self.covers[i] == self.covers[i - 1]:
                return f"duplicate cover pair {self.covers[i]}"
        order = self.topological_order()
        if order is None:
            return "cover relation contains a directed cycle"
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        # A cover (u, v) is redundant iff v is reachable from another upper
        # cover of u; only multi-successor elements can offend.
        if any(len(s) > 1 for s in self._succ):
            nr_sets = _later_incomparables(self, order, pos, as_sets=True)
            for u in range(self.n):
                su = self._succ[u]
                if len(su) < 2:
                    continue
                for v in su:
                    for w in su:
                        if w is v:
                            continue
                        if pos[v] > pos[w] and v not in nr_sets[w]:
                            return (
                                f"cover ({u}, {v}) is implied by the path "
                                f"through {w}"
                            )
        return None

    def _require_valid(self) -> None:
        if not self.validate():
            raise ContractViolation(f"invalid poset: {self._violation}")

    # -- order queries -----------------------------------------------------

    def _closure_masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Strict up/down reachability bitmasks (small posets only)."""
        if self._up_masks is None:
            order = self.topological_order()
            assert order is not None
            up = [0] * self.n
            for x in reversed(order):
                acc = 0
                for y in self._succ[x]:
                    acc |= (1 << y) | up[y]
                up[x] = acc
            down = [0] * self.n
            for x in order:
                acc = 0
                for y in self._pred[x]:
                    acc |= (1 << y) | down[y]
                down[x] = acc
            self._up_masks = tuple(up)
            self._down_masks = tuple(down)
        return self._up_masks, self._down_masks

    def _reaches(self, a: int, b: int) -> bool:
        seen = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in self._succ[x]:
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def less(self, a: int, b: int) -> bool:
        """True iff ``a < b`` (a directed cover path runs from a to b)."""
        self._require_valid()
        if a == b:
            return False
        if self.n <= _CLOSURE_LIMIT:
            up, _ = self._closure_masks()
            return bool(up[a] >> b & 1)
        return self._reaches(a, b)

    def comparable(self, a: int, b: int) -> bool:
        self._require_valid()
        if a == b:
            raise ValueError("comparable() requires two distinct elements")
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise ValueError("element out of range")
        return self.less(a, b) or self.less(b, a)

    def maximal_elements(self) -> tuple[int, ...]:
        self._require_valid()
        return tuple(v for v in range(self.n) if not self._succ[v])

    def minimal_elements(self) -> tuple[int, ...]:
        self._require_valid()
        return tuple(v for v in range(self.n) if not self._pred[v])

    def height(self) -> int:
        """Cardinality of a longest chain."""
        self._require_valid()
        order = self.topological_order()
        assert order is not None
        h = [1] * self.n
        for x in order:
            for y in self._succ[x]:
                if h[x] + 1 > h[y]:
                    h[y] = h[x] + 1
        return max(h)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.n, self.covers))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={list(self.covers)})"


def antichain(n: int) -> Poset:
    return Poset(n, [], ranks=[0] * n)


def chain(n: int) -> Poset:
    return Poset(n, [(i, i + 1) for i in range(n - 1)], ranks=range(n))


Layer = Union[int, Iterable[int]]


def completely_ranked(layers: Sequence[Layer]) -> Poset:
    """Poset in which every rank-i element covers every rank-(i-1) element.

    Each layer is either a size (layers then use consecutive indices from 0)
    or an explicit collection of element indices; explicit layers must
    partition ``0..n-1``.
    """
    if not layers:
        raise ValueError("at least one layer is required")
    resolved: list[tuple[int, ...]] = []
    if all(isinstance(layer, int) for layer in layers):
        start = 0
        for size in layers:
            if size < 1:
                raise ValueError("layers must be nonempty")
            resolved.append(tuple(range(start, start + size)))
            start += size
        n = start
    else:
        for layer in layers:
            members = tuple(sorted(layer))  # type: ignore[arg-type]
            if not members:
                raise ValueError("layers must be nonempty")
            resolved.append(members)
        flat = [v for layer in resolved for v in layer]
        n = len(flat)
        if sorted(flat) != list(range(n)):
            raise ValueError("explicit layers must partition 0..n-1")
    covers = []
    for lower, upper in zip(resolved, resolved[1:]):
        covers.extend((u, v) for u in lower for v in upper)
    ranks = [0] * n
    for r, layer in enumerate(resolved):
        for v in layer:
            ranks[v] = r
    return Poset(n, covers, ranks=ranks)


def poset_sum(parts: Sequence[Poset]) -> Poset:
    """Disjoint union with index offsets; no cross-part comparabilities."""
    if not parts:
        raise ValueError("poset_sum requires at least one summand")
    covers = []
    ranks: Optional[list[int]] = [] if all(p.ranks is not None for p in parts) else None
    offset = 0
    for p in parts:
        p._require_valid()
        covers.extend((u + offset, v + offset) for u, v in p.covers)
        if ranks is not None:
            ranks.extend(p.ranks)  # type: ignore[arg-type]
        offset += p.n
    return Poset(offset, covers, ranks=ranks)


def transitive_reduction(n: int, relation: Iterable[tuple[int, int]]) -> Poset:
    """Poset whose order is the transitive closure of ``relation``.

    The relation is read as strict-order pairs (u, v) meaning u < v; it need
    not be reduced or closed.  Raises ValueError if it is cyclic.
    """
    pairs = set(relation)
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad relation pair ({u}, {v})")
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in pairs:
        succ[u].append(v)
        indeg[v] += 1
    ready = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while ready:
        v = ready.popleft()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != n:
        raise ValueError("relation is cyclic")
    up = [0] * n
    for x in reversed(order):
        acc = 0
        for y in succ[x]:
            acc |= (1 << y) | up[y]
        up[x] = acc
    covers = []
    for u in range(n):
        reach = up[u]
        x = reach
        while x:
            v = (x & -x).bit_length() - 1
            x &= x - 1
            # (u, v) is a cover iff nothing reachable from u reaches v
            between = reach & _strict_down(up, n, v)
            if not between:
                covers.append((u, v))
    return Poset(n, covers)


def _strict_down(up: list[int], n: int, v: int) -> int:
    mask = 0
    for u in range(n):
        if up[u] >> v & 1:
            mask |= 1 << u
    return mask


class _IncomparabilityOverflow(Exception):
    """More incomparable pairs than the caller's budget; carries a sample."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__("incomparable pair budget exceeded")
        self.pair = pair


def _later_incomparables(
    p: Poset,
    order: Sequence[int],
    pos: Sequence[int],
    as_sets: bool = False,
    cap: Optional[int] = None,
):
    """For each element x, the elements after x in ``order`` not above x.

    In a linear extension every element placed after x is either above x or
    incomparable to x, so these lists enumerate each incomparable pair once,
    from its earlier endpoint.  Work is proportional to the lists produced:
    for y1 the earliest-placed upper cover of x, everything strictly between
    x and y1 is unreachable from any cover of x, and the rest of the list is
    the y1-list filtered through the remaining covers' reachability.
    """
    n = p.n
    succ = p._succ
    nr_lists: list = [None] * n
    nr_sets: list = [None] * n
    total = 0
    for x in reversed(order):
        sx = succ[x]
        if not sx:
            lst = list(order[pos[x] + 1 :])
        else:
            y1 = sx[0]
            for y in sx:
                if pos[y] < pos[y1]:
                    y1 = y
            between = list(order[pos[x] + 1 : pos[y1]])
            if len(sx) == 1:
                rest = nr_lists[y1]
            else:
                others = [y for y in sx if y != y1]
                rest = []
                for z in nr_lists[y1]:
                    for yj in others:
                        if z == yj or (pos[z] > pos[yj] and z not in nr_sets[yj]):
                            break
                    else:
                        rest.append(z)
            lst = between + rest if between else rest
        nr_lists[x] = lst
        nr_sets[x] = frozenset(lst)
        if cap is not None:
            total += len(lst)
            if total > cap:
                raise _IncomparabilityOverflow((x, lst[0]))
    return nr_sets if as_sets else nr_lists


def _ci_edges(p: Poset, cap: Optional[int] = None) -> list[tuple[int, int]]:
    order = p.topological_order()
    assert order is not None
    pos = [0] * p.n
    for i, v in enumerate(order):
        pos[v] = i
    edges: list[tuple[int, int]] = list(dict.fromkeys(p.covers))
    nr = _later_incomparables(p, order, pos, cap=cap)
    for x in range(p.n):
        edges.extend((x, z) for z in nr[x])
    return edges


def ci_graph(p: Poset) -> Graph:
    """The cover-incomparability graph of ``p`` on the same element indices.

    Edges are the cover pairs plus the incomparable pairs; non-edges are
    exactly the comparable non-cover pairs.
    """
    p._require_valid()
    return Graph(p.n, _ci_edges(p))


def ci_graph_mismatch(p: Poset, g: Graph) -> Optional[tuple[int, int]]:
    """None if ci_graph(p) equals ``g`` exactly, else the first differing pair.

    Runs in time proportional to ``g`` even when the candidate poset is badly
    wrong: edge production is capped just above the size of ``g``.
    """
    p._require_valid()
    if p.n != g.n:
        raise ValueError("poset and graph sizes differ")
    try:
        edges = _ci_edges(p, cap=g.m + 1)
    except _IncomparabilityOverflow as exc:
        u, v = exc.pair
        return (u, v) if u < v else (v, u)
    bad = [
        (min(u, v), max(u, v)) for u, v in edges if not g.has_edge(u, v)
    ]
    if bad:
        return min(bad)
    if len(edges) == g.m:
        return None
    # some graph edge is not a C-I edge; report the lexicographically first
    ci_adj: list[list[int]] = [[] for _ in range(p.n)]
    for u, v in edges:
        ci_adj[u].append(v)
        ci_adj[v].append(u)
    for u in range(p.n):
        have = sorted(ci_adj[u])
        want = g.adj[u]
        if tuple(have) != want:
            for v in want:
                if v not in set(have):
                    if v > u:
                        return (u, v)
            # difference is below u; it was reported from the other side
    raise AssertionError("edge count mismatch without a differing pair")
