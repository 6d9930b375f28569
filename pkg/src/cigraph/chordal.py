"""Chordal recognition and the chordal cover-incomparability pipeline.

The pipeline answers whether a connected chordal graph is a
cover-incomparability graph: it computes a perfect elimination ordering,
builds a clique tree from it, and accepts exactly when the tree is a path
none of whose internal nodes owns a private vertex.  Accepted graphs get a
witness poset, grown by peeling simplicial vertices down to a complete core
and re-attaching them at the poset's pendant frontiers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from cigraph.errors import CertificateConstructionFailure, ContractViolation
from cigraph.graphs import Graph, is_connected
from cigraph.posets import Poset, antichain, ci_graph_mismatch

__all__ = [
    "ChordalVerdict",
    "CliqueTree",
    "PendantFrontier",
    "attach_vertex",
    "certify_chordal_ci",
    "chordless_cycle_witness",
    "clique_tree",
    "internal_private_vertex",
    "is_peo",
    "lex_bfs",
    "mcs",
    "pendant_frontier",
    "recognize_chordal",
    "recognize_chordal_ci",
    "validate_clique_tree",
]

NOT_CHORDAL = "not_chordal"
NOT_CI = "not_ci"
CHORDAL_CI = "chordal_ci"

REASON_TREE_NOT_PATH = "clique_tree_not_path"
REASON_PRIVATE_VERTEX = "internal_private_vertex"
REASON_THREE_SIMPLICIAL = "three_independent_simplicial"

# Local per-attachment adjacency checks cost O(current size); above this
# they are skipped and only the final whole-certificate validation runs.
_LOCAL_CHECK_LIMIT = 256


# ---------------------------------------------------------------------------
# elimination orderings


class _Block:
    __slots__ = ("members", "prev", "next", "twin", "round")

    def __init__(self, members: set[int]):
        self.members = members
        self.prev: Optional["_Block"] = None
        self.next: Optional["_Block"] = None
        self.twin: Optional["_Block"] = None
        self.round = -1


def lex_bfs(g: Graph, start: int = 0) -> tuple[int, ...]:
    """Lexicographic breadth-first order of a connected graph.

    Ties are broken by smallest vertex index, so the result is a pure
    function of the graph.  The reverse of the returned order is a perfect
    elimination ordering whenever the graph is chordal.
    """
    if not (0 <= start < g.n):
        raise ValueError(f"start vertex {start} out of range")
    if not is_connected(g):
        raise ContractViolation("lex_bfs requires a connected graph")
    n = g.n
    head = _Block(set())
    first = _Block({start})
    rest = _Block(set(range(n)) - {start})
    head.next = first
    first.prev = head
    if rest.members:
        first.next = rest
        rest.prev = first
    block_of: list[Optional[_Block]] = [rest] * n
    block_of[start] = first
    visited = bytearray(n)
    order = []
    for rnd in range(n):
        blk = head.next
        while not blk.members:  # skip emptied blocks left in place
            blk = blk.next
        v = min(blk.members)
        blk.members.remove(v)
        if not blk.members:
            _unlink(blk)
        visited[v] = 1
        block_of[v] = None
        order.append(v)
        for w in g.adj[v]:
            if visited[w]:
                continue
            b = block_of[w]
            if b.round != rnd:
                twin = _Block(set())
                twin.round = rnd
                b.round = rnd
                b.twin = twin
                twin.prev = b.prev
                twin.next = b
                b.prev.next = twin
                b.prev = twin
            b.members.remove(w)
            b.twin.members.add(w)
            block_of[w] = b.twin
            if not b.members:
                _unlink(b)
    return tuple(order)


def _unlink(blk: _Block) -> None:
    blk.prev.next = blk.next
    if blk.next is not None:
        blk.next.prev = blk.prev


def mcs(g: Graph, start: int = 0) -> tuple[int, ...]:
    """Maximum-cardinality-search order; an alternative to lex_bfs."""
    if not (0 <= start < g.n):
        raise ValueError(f"start vertex {start} out of range")
    if not is_connected(g):
        raise ContractViolation("mcs requires a connected graph")
    n = g.n
    weight = [0] * n
    weight[start] = 1  # forces the start vertex out first
    buckets: list[set[int]] = [set(range(n)) - {start}, {start}]
    top = 1
    visited = bytearray(n)
    order = []
    for _ in range(n):
        while not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].remove(v)
        visited[v] = 1
        order.append(v)
        for w in g.adj[v]:
            if visited[w]:
                continue
            buckets[weight[w]].discard(w)
            weight[w] += 1
            if weight[w] >= len(buckets):
                buckets.append(set())
            buckets[weight[w]].add(w)
            if weight[w] > top:
                top = weight[w]
    return tuple(order)


def is_peo(g: Graph, order: Sequence[int]) -> bool:
    """True iff each vertex's later neighbors form a clique.

    Uses the parent-witness test: it is enough that the later neighbors of
    v, minus the earliest of them, are all adjacent to that earliest one.
    """
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for i, v in enumerate(order):
        later = [w for w in g.adj[v] if pos[w] > i]
        if len(later) < 2:
            continue
        p = min(later, key=lambda w: pos[w])
        ps = g.neighbor_set(p)
        for w in later:
            if w != p and w not in ps:
                return False
    return True


def recognize_chordal(g: Graph, use_mcs: bool = False) -> Optional[tuple[int, ...]]:
    """A perfect elimination ordering of ``g``, or None if not chordal."""
    if not is_connected(g):
        raise ContractViolation("recognize_chordal requires a connected graph")
    search = mcs if use_mcs else lex_bfs
    peo = tuple(reversed(search(g)))
    return peo if is_peo(g, peo) else None


def chordless_cycle_witness(
    g: Graph, use_mcs: bool = False
) -> Optional[tuple[int, ...]]:
    """An induced cycle of length >= 4, extracted from the failed PEO check."""
    search = mcs if use_mcs else lex_bfs
    order = tuple(reversed(search(g)))
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for i, v in enumerate(order):
        later = [w for w in g.adj[v] if pos[w] > i]
        if len(later) < 2:
            continue
        p = min(later, key=lambda w: pos[w])
        ps = g.neighbor_set(p)
        for y in later:
            if y == p or y in ps:
                continue
            # v-p and v-y are edges, p-y is not: close the cycle through a
            # path from p to y avoiding the rest of N[v]
            allowed = set(range(g.n)) - g.neighbor_set(v) - {v}
            allowed.add(p)
            allowed.add(y)
            path = _shortest_path_within(g, p, y, allowed)
            if path is not None:
                return (v, *path)
    return None


def _shortest_path_within(
    g: Graph, src: int, dst: int, allowed: set[int]
) -> Optional[list[int]]:
    prev: dict[int, int] = {src: src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = [x]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in g.adj[x]:
            if w in allowed and w not in prev:
                prev[w] = x
                queue.append(w)
    return None


# ---------------------------------------------------------------------------
# clique trees


@dataclass(frozen=True)
class CliqueTree:
    """Tree of the maximal cliques of a chordal graph.

    ``vertex_cliques[v]`` lists the tree nodes containing v; the nodes
    holding any fixed vertex induce a connected subtree (running
    intersection).
    """

    n: int
    cliques: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    vertex_cliques: tuple[tuple[int, ...], ...]

    def node_degrees(self) -> list[int]:
        deg = [0] * len(self.cliques)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def leaf_count(self) -> int:
        """Number of leaf nodes; a single-node tree counts as one leaf."""
        if len(self.cliques) == 1:
            return 1
        return sum(1 for d in self.node_degrees() if d == 1)

    def is_path(self) -> bool:
        return all(d <= 2 for d in self.node_degrees())

    def path_order(self) -> tuple[int, ...]:
        """Node indices in path order (smallest-index endpoint first)."""
        if not self.is_path():
            raise ContractViolation("clique tree is not a path")
        k = len(self.cliques)
        if k == 1:
            return (0,)
        nbrs: list[list[int]] = [[] for _ in range(k)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        start = min(i for i in range(k) if len(nbrs[i]) == 1)
        out = [start]
        prev = -1
        cur = start
        while len(out) < k:
            nxt = [x for x in nbrs[cur] if x != prev]
            prev, cur = cur, nxt[0]
            out.append(cur)
        return tuple(out)

    def private_vertex(self, node: int) -> Optional[int]:
        """Smallest vertex living only in ``node``, if any."""
        for v in self.cliques[node]:
            if len(self.vertex_cliques[v]) == 1:
                return v
        return None


def clique_tree(g: Graph, peo: Sequence[int]) -> CliqueTree:
    """Clique tree built by one sweep over the elimination ordering.

    Vertices are processed in reverse elimination order; each either joins
    the clique of its elimination parent (when its later neighborhood is
    exactly that clique) or starts a new maximal clique hanging off it.
    """
    if not is_peo(g, peo):
        raise ContractViolation("ordering is not a perfect elimination ordering")
    n = g.n
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    clique_of = [-1] * n
    cliques: list[list[int]] = []
    edges: list[tuple[int, int]] = []
    for x in reversed(peo):
        later = [w for w in g.adj[x] if pos[w] > pos[x]]
        if not later:
            if cliques:
                raise ContractViolation("clique_tree requires a connected graph")
            clique_of[x] = 0
            cliques.append([x])
            continue
        p = min(later, key=lambda w: pos[w])
        cp = clique_of[p]
        if len(later) == len(cliques[cp]):
            # later == cliques[cp]: absorb x into the parent clique
            cliques[cp].append(x)
            clique_of[x] = cp
        else:
            ci = len(cliques)
            cliques.append(later + [x])
            clique_of[x] = ci
            edges.append((ci, cp))
    vc: list[list[int]] = [[] for _ in range(n)]
    for i, c in enumerate(cliques):
        for v in c:
            vc[v].append(i)
    return CliqueTree(
        n=n,
        cliques=tuple(tuple(sorted(c)) for c in cliques),
        edges=tuple(edges),
        vertex_cliques=tuple(tuple(ids) for ids in vc),
    )


def internal_private_vertex(g: Graph, t: CliqueTree) -> Optional[int]:
    """A vertex owned by an internal node of the clique path, if one exists.

    Such a vertex lies in no neighboring node, hence (running intersection)
    in no other node at all, and is therefore simplicial.
    """
    order = t.path_order()  # raises unless the tree is a path
    if len(order) <= 2:
        return None
    internal = set(order[1:-1])
    for v in range(t.n):
        ids = t.vertex_cliques[v]
        if len(ids) == 1 and ids[0] in internal:
            return v  # vertices scanned in increasing order
    return None


def validate_clique_tree(g: Graph, t: CliqueTree) -> list[str]:
    """Structural defects of a clique tree, empty when it is sound."""
    problems = []
    k = len(t.cliques)
    if len(t.edges) != k - 1:
        problems.append("edge count is not node count minus one")
    # connectivity of the tree itself
    nbrs: list[list[int]] = [[] for _ in range(k)]
    for a, b in t.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != k:
        problems.append("tree edges do not connect all nodes")
    covered = set()
    for i, c in enumerate(t.cliques):
        covered.update(c)
        for ai, a in enumerate(c):
            for b in c[ai + 1 :]:
                if not g.has_edge(a, b):
                    problems.append(f"node {i} is not a clique ({a}, {b})")
    if covered != set(range(g.n)):
        problems.append("nodes do not cover the vertex set")
    sets = [set(c) for c in t.cliques]
    for i in range(k):
        for j in range(k):
            if i != j and sets[i] <= sets[j]:
                problems.append(f"node {i} is contained in node {j}")
    for i, c in enumerate(t.cliques):
        cs = sets[i]
        for v in range(g.n):
            if v not in cs and cs <= g.neighbor_set(v):
                problems.append(f"node {i} is not maximal (extendable by {v})")
    # running intersection: nodes holding v must induce a connected subtree
    for v in range(g.n):
        ids = set(t.vertex_cliques[v])
        if not ids:
            continue
        start = next(iter(ids))
        seen_v = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y in ids and y not in seen_v:
                    seen_v.add(y)
                    stack.append(y)
        if seen_v != ids:
            problems.append(f"cliques containing {v} are not a subtree")
    return problems


# ---------------------------------------------------------------------------
# pendant frontiers and vertex attachment


@dataclass(frozen=True)
class PendantFrontier:
    """Both pendant cliques of a certificate poset, with their scaffolding.

    The top side holds the maximal elements, the elements they cover, and
    the trimmed union of both (dropping covered elements that sit two or
    more steps below another); the bottom side is the mirror image.
    """

    maximal: tuple[int, ...]
    below_maximal: tuple[int, ...]
    top_clique: tuple[int, ...]
    minimal: tuple[int, ...]
    above_minimal: tuple[int, ...]
    bottom_clique: tuple[int, ...]


def pendant_frontier(p: Poset) -> PendantFrontier:
    p._require_valid()
    maximal = p.maximal_elements()
    minimal = p.minimal_elements()
    s1 = sorted({w for u in maximal for w in p.lower_covers(u)})
    s1d = sorted({w for u in minimal for w in p.upper_covers(u)})
    trimmed = {
        u
        for u in s1
        if any(w != u and p.less(u, w) and w not in p.upper_covers(u) for w in s1)
    }
    trimmed_d = {
        u
        for u in s1d
        if any(w != u and p.less(w, u) and w not in p.lower_covers(u) for w in s1d)
    }
    top = tuple(sorted(set(maximal) | (set(s1) - trimmed)))
    bottom = tuple(sorted(set(minimal) | (set(s1d) - trimmed_d)))
    return PendantFrontier(
        maximal=maximal,
        below_maximal=tuple(s1),
        top_clique=top,
        minimal=minimal,
        above_minimal=tuple(s1d),
        bottom_clique=bottom,
    )


class _CertBuilder:
    """Mutable cover-relation builder used while growing a certificate."""

    def __init__(self, n: int):
        self.n = n
        self.covers: list[tuple[int, int]] = []
        self.succ: list[list[int]] = [[] for _ in range(n)]
        self.pred: list[list[int]] = [[] for _ in range(n)]
        self.members: list[int] = []
        self.member_set: set[int] = set()
        self.maximal: set[int] = set()
        self.minimal: set[int] = set()

    def seed(self, bottom: int, mid: Iterable[int], top: Iterable[int]) -> None:
        """Base poset for a complete core plus one pendant vertex.

        ``bottom`` is the pendant vertex, ``mid`` its neighbors in the core,
        ``top`` the rest of the core.  Only one mediator from ``mid`` is made
        comparable: bottom < mediator < every top element.  Everything else
        stays incomparable, which keeps both pendant frontiers as wide as the
        graph's actual pendant cliques and leaves room for every later
        attachment.
        """
        mid = sorted(mid)
        top = sorted(top)
        self.members = [bottom] + mid + top
        self.member_set = set(self.members)
        mediator = mid[0]
        self._add_cover(bottom, mediator)
        for d in top:
            self._add_cover(mediator, d)
        self.maximal = set(top) | set(mid[1:])
        self.minimal = {bottom} | set(mid[1:])

    def seed_elements(self, minimal: Iterable[int]) -> None:
        mins = list(minimal)
        self.members = list(mins)
        self.member_set = set(mins)
        self.maximal = set(mins)
        self.minimal = set(mins)

    def _add_cover(self, u: int, v: int) -> None:
        self.covers.append((u, v))
        self.succ[u].append(v)
        self.pred[v].append(u)

    def _pop_cover(self) -> None:
        u, v = self.covers.pop()
        self.succ[u].pop()
        self.pred[v].pop()

    def _upset(self, w: int) -> set[int]:
        seen: set[int] = set()
        stack = [w]
        while stack:
            x = stack.pop()
            for y in self.succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def _downset(self, w: int) -> set[int]:
        seen: set[int] = set()
        stack = [w]
        while stack:
            x = stack.pop()
            for y in self.pred[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def frontier(self, top_side: bool) -> tuple[set[int], set[int]]:
        """(extreme elements, trimmed pendant clique) for one side."""
        extreme = self.maximal if top_side else self.minimal
        cov = self.pred if top_side else self.succ
        s1 = {w for u in extreme for w in cov[u]}
        if len(s1) > 1:
            # drop covered elements sitting two or more steps beyond another
            reach = {
                w: (self._upset(w) if top_side else self._downset(w)) for w in s1
            }
            direct = {w: set(self.succ[w] if top_side else self.pred[w]) for w in s1}
            s1 -= {
                u
                for u in s1
                if any(w in reach[u] and w not in direct[u] for w in s1 if w != u)
            }
        return set(extreme), extreme | s1

    def attach(self, x: int, nbrs: Sequence[int], top_side: bool) -> None:
        """Extend by ``x`` whose graph neighborhood is ``nbrs``, one side.

        x covers (is covered by) exactly the extremal elements of its
        neighborhood within the poset: covering a non-extremal neighbor
        would put another neighbor strictly between it and x and cost that
        neighbor its edge.  The remaining neighbors stay incomparable to x,
        and every non-neighbor must already lie beyond a covered one, which
        the frontier fit guarantees for pendant-clique attachments.
        """
        if len(nbrs) == 1:
            cover_from = list(nbrs)
        else:
            reach = {
                w: (self._upset(w) if top_side else self._downset(w)) for w in nbrs
            }
            cover_from = sorted(
                w for w in nbrs if not any(w in reach[w2] for w2 in nbrs if w2 != w)
            )
        for u in cover_from:
            if top_side:
                self._add_cover(u, x)
            else:
                self._add_cover(x, u)
        self.members.append(x)
        self.member_set.add(x)
        if top_side:
            self.maximal -= set(cover_from)
            self.maximal.add(x)
        else:
            self.minimal -= set(cover_from)
            self.minimal.add(x)

    def rollback(self, n_covers: int, x: int, top_side: bool) -> None:
        while len(self.covers) > n_covers:
            self._pop_cover()
        self.members.pop()
        self.member_set.discard(x)
        if top_side:
            self.maximal = {v for v in self.member_set if not self.succ[v]}
        else:
            self.minimal = {v for v in self.member_set if not self.pred[v]}

    def local_adjacency_ok(self, x: int, nbrs: Sequence[int], top_side: bool) -> bool:
        comp = self._downset(x) if top_side else self._upset(x)
        covers_x = set(self.pred[x] if top_side else self.succ[x])
        ci_nbrs = covers_x | (self.member_set - comp - {x})
        return ci_nbrs == set(nbrs)

    def attach_best(self, x: int, nbrs: Sequence[int]) -> None:
        nbset = set(nbrs)
        fits_top = fits_bottom = False
        if self.maximal <= nbset:  # cheap necessary test before the clique
            _, top_clique = self.frontier(True)
            fits_top = nbset <= top_clique
        if self.minimal <= nbset:
            _, bot_clique = self.frontier(False)
            fits_bottom = nbset <= bot_clique
        if not fits_top and not fits_bottom:
            raise CertificateConstructionFailure(
                f"neighborhood of {x} matches neither pendant clique"
            )
        check = fits_top and fits_bottom or len(self.members) <= _LOCAL_CHECK_LIMIT
        if fits_top:
            mark = len(self.covers)
            self.attach(x, nbrs, top_side=True)
            if not check or self.local_adjacency_ok(x, nbrs, True):
                return
            if not fits_bottom:
                raise CertificateConstructionFailure(
                    f"attachment of {x} failed its adjacency check"
                )
            self.rollback(mark, x, top_side=True)
        mark = len(self.covers)
        self.attach(x, nbrs, top_side=False)
        if check and not self.local_adjacency_ok(x, nbrs, False):
            raise CertificateConstructionFailure(
                f"attachment of {x} failed its adjacency check"
            )


def attach_vertex(p: Poset, v: int, nbrs: Iterable[int]) -> Poset:
    """Extend a certificate poset by one element with a given neighborhood.

    ``v`` must be the next free index ``p.n``; ``nbrs`` must contain one
    pendant clique's extreme elements and stay inside that pendant clique.
    The extension follows the case split on how much of the pendant clique
    the new vertex sees; the result is returned as a validated poset.
    """
    p._require_valid()
    if v != p.n:
        raise ValueError(f"new element must be {p.n}, got {v}")
    nbrs = sorted(set(nbrs))
    if not nbrs:
        raise ValueError("new element needs at least one neighbor")
    if any(not 0 <= w < p.n for w in nbrs):
        raise ValueError("neighbors out of range")
    builder = _CertBuilder(p.n + 1)
    builder.members = list(range(p.n))
    builder.member_set = set(builder.members)
    for u, w in p.covers:
        builder._add_cover(u, w)
    builder.maximal = set(p.maximal_elements())
    builder.minimal = set(p.minimal_elements())
    builder.attach_best(v, nbrs)
    out = Poset(p.n + 1, builder.covers)
    if not out.validate():
        raise CertificateConstructionFailure(
            f"attachment produced an invalid poset: {out.violation()}"
        )
    return out


# ---------------------------------------------------------------------------
# the pipeline


@dataclass(frozen=True)
class ChordalVerdict:
    """Outcome of the chordal pipeline.

    status is one of "chordal_ci", "not_chordal", "not_ci".  Rejections
    carry a reason and a witness: a chordless cycle for non-chordal inputs,
    otherwise three pairwise non-adjacent simplicial vertices.  Acceptances
    carry a certificate poset whose cover-incomparability graph equals the
    input.
    """

    status: str
    reason: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None
    certificate: Optional[Poset] = None

    @property
    def accepted(self) -> bool:
        return self.status == CHORDAL_CI


def _leaf_simplicial_witness(t: CliqueTree, nodes: Iterable[int]) -> tuple[int, ...]:
    out = []
    for node in nodes:
        v = t.private_vertex(node)
        assert v is not None, "leaf clique without a private vertex"
        out.append(v)
    return tuple(sorted(out))


def recognize_chordal_ci(
    g: Graph, use_mcs: bool = False, build_certificate: bool = True
) -> ChordalVerdict:
    """Decide whether a connected graph is a chordal C-I graph.

    Accepts exactly the complete graphs and the chordal graphs with two
    independent simplicial vertices; every acceptance carries a certificate
    poset unless ``build_certificate`` is disabled.
    """
    if not is_connected(g):
        raise ContractViolation("recognize_chordal_ci requires a connected graph")
    peo = recognize_chordal(g, use_mcs=use_mcs)
    if peo is None:
        return ChordalVerdict(
            status=NOT_CHORDAL, witness=chordless_cycle_witness(g, use_mcs=use_mcs)
        )
    t = clique_tree(g, peo)
    if not t.is_path():
        deg = t.node_degrees()
        leaves = [i for i in range(len(t.cliques)) if deg[i] <= 1][:3]
        return ChordalVerdict(
            status=NOT_CI,
            reason=REASON_TREE_NOT_PATH,
            witness=_leaf_simplicial_witness(t, leaves),
        )
    pv = internal_private_vertex(g, t)
    if pv is not None:
        order = t.path_order()
        ends = _leaf_simplicial_witness(t, (order[0], order[-1]))
        return ChordalVerdict(
            status=NOT_CI,
            reason=REASON_PRIVATE_VERTEX,
            witness=tuple(sorted((pv, *ends))),
        )
    cert = certify_chordal_ci(g, peo=peo) if build_certificate else None
    return ChordalVerdict(status=CHORDAL_CI, certificate=cert)


def certify_chordal_ci(g: Graph, peo: Optional[Sequence[int]] = None) -> Poset:
    """Witness poset for an accepted chordal graph.

    Simplicial vertices are peeled in elimination order until the remainder
    is complete; the last peeled vertex and the complete core seed the base
    poset (pendant vertex < one mediator neighbor < the non-neighbors), and
    the other peeled vertices re-attach in reverse order at whichever
    pendant frontier holds their neighborhood.  The result is validated
    against the input before being returned.
    """
    if peo is None:
        peo = recognize_chordal(g)
        if peo is None:
            raise ContractViolation("certify_chordal_ci requires a chordal graph")
    n = g.n
    pos = [0] * n
    for i, v in enumerate(peo):
        pos[v] = i
    later: list[list[int]] = [
        sorted(w for w in g.adj[v] if pos[w] > pos[v]) for v in range(n)
    ]
    # longest suffix of the elimination order inducing a complete graph
    kstar = n
    for j in range(n - 1, -1, -1):
        if len(later[peo[j]]) == n - 1 - j:
            kstar = j
        else:
            break
    if kstar == 0:
        return antichain(n)
    vk = peo[kstar - 1]
    core = peo[kstar:]
    mid = later[vk]
    top = sorted(set(core) - set(mid))
    assert mid and top, "non-complete graph must split its complete core"
    builder = _CertBuilder(n)
    builder.seed(vk, mid, top)
    for j in range(kstar - 2, -1, -1):
        x = peo[j]
        builder.attach_best(x, later[x])
    cert = Poset(n, builder.covers)
    bad = cert.violation()
    if bad is not None:
        raise CertificateConstructionFailure(f"certificate poset invalid: {bad}")
    mismatch = ci_graph_mismatch(cert, g)
    if mismatch is not None:
        raise CertificateConstructionFailure(
            f"certificate disagrees with the input at pair {mismatch}"
        )
    return cert
