"""Cograph recognition via cotrees and the cograph cover-incomparability test.

A cotree is a rooted tree whose internal nodes are labeled 0 (disjoint
union) or 1 (join) and whose leaves are the graph's vertices; two vertices
are adjacent exactly when their lowest common ancestor is a 1-node.  A
connected cograph is a cover-incomparability graph iff its cotree has a very
rigid shape: the root may have leaf children (universal vertices) and
0-nodes, there are at least as many universal vertices as 0-nodes, every
0-node has exactly two branches, and branches are leaves or 1-nodes of
leaves.  Accepted graphs decompose into triples (C1, C2, C3) whose
three-layer ranked posets sum to a witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from cigraph.errors import CertificateConstructionFailure, ContractViolation
from cigraph.graphs import Graph, is_connected
from cigraph.posets import Poset, antichain, ci_graph_mismatch

__all__ = [
    "CographDecomposition",
    "CographVerdict",
    "Cotree",
    "CotreeNode",
    "build_cotree",
    "certify_ci_cograph",
    "check_tc_family",
    "decompose",
    "find_induced_p4",
    "format_cotree",
    "normalize_cotree",
    "parse_cotree",
    "recognize_ci_cograph",
]

NOT_COGRAPH = "not_cograph"
NOT_CI = "not_ci"
CI_COGRAPH = "ci_cograph"

REASON_ONLY_ZERO_CHILDREN = "only_zero_children"
REASON_TOO_FEW_UNIVERSAL = "too_few_universal"
REASON_ZERO_NODE_ARITY = "zero_node_arity"
REASON_DEEP_ONE_NODE = "deep_one_node"


class CotreeNode:
    """Internal 0/1 node or leaf of a cotree."""

    __slots__ = ("label", "vertex", "children")

    def __init__(
        self,
        label: Optional[int] = None,
        vertex: Optional[int] = None,
        children: Optional[list["CotreeNode"]] = None,
    ):
        self.label = label
        self.vertex = vertex
        self.children = children if children is not None else []

    @property
    def is_leaf(self) -> bool:
        return self.label is None

    def leaves(self) -> list[int]:
        if self.is_leaf:
            return [self.vertex]
        out: list[int] = []
        for ch in self.children:
            out.extend(ch.leaves())
        return out


@dataclass(frozen=True)
class Cotree:
    """Canonical cotree: alternating labels, every internal node >= 2 children."""

    root: CotreeNode
    n: int

    def leaves(self) -> list[int]:
        return self.root.leaves()

    def node_count(self) -> int:
        def count(node: CotreeNode) -> int:
            return 1 + sum(count(ch) for ch in node.children)

        return count(self.root)

    def to_graph(self) -> Graph:
        """Graph defined by the adjacency law (LCA labeled 1)."""
        edges: list[tuple[int, int]] = []

        def walk(node: CotreeNode) -> list[int]:
            if node.is_leaf:
                return [node.vertex]
            groups = [walk(ch) for ch in node.children]
            if node.label == 1:
                for i in range(len(groups)):
                    for j in range(i + 1, len(groups)):
                        edges.extend((a, b) for a in groups[i] for b in groups[j])
            return [v for grp in groups for v in grp]

        walk(self.root)
        return Graph(self.n, edges)

    def canonical_violation(self) -> Optional[str]:
        """Why this tree is not canonical, or None."""
        seen = sorted(self.leaves())
        if seen != list(range(self.n)):
            return "leaves are not a bijection with the vertices"

        def walk(node: CotreeNode, parent_label: Optional[int]) -> Optional[str]:
            if node.is_leaf:
                return None
            if node.label not in (0, 1):
                return f"internal node labeled {node.label!r}"
            if len(node.children) < 2:
                return "internal node with fewer than two children"
            if parent_label is not None and node.label == parent_label:
                return "equal labels on a child-parent pair"
            for ch in node.children:
                bad = walk(ch, node.label)
                if bad:
                    return bad
            return None

        return walk(self.root, None)


# ---------------------------------------------------------------------------
# construction


class _NotCograph(Exception):
    def __init__(self, verts: list[int]):
        super().__init__("region is connected and co-connected")
        self.verts = verts


def _components(g: Graph, verts: Sequence[int]) -> list[list[int]]:
    comps = []
    left = set(verts)
    while left:
        seed = min(left)
        left.remove(seed)
        comp = [seed]
        stack = [seed]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w in left:
                    left.remove(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _co_components(g: Graph, verts: Sequence[int]) -> list[list[int]]:
    left = set(verts)
    comps = []
    while left:
        seed = min(left)
        left.remove(seed)
        comp = [seed]
        stack = [seed]
        while stack:
            x = stack.pop()
            grab = left - g.neighbor_set(x)
            if grab:
                left -= grab
                comp.extend(grab)
                stack.extend(grab)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _build(g: Graph, verts: list[int], joined: bool) -> CotreeNode:
    """Recursive union/join split; ``joined`` means try components first."""
    if len(verts) == 1:
        return CotreeNode(vertex=verts[0])
    if joined:
        comps = _components(g, verts)
        if len(comps) > 1:
            return CotreeNode(label=0, children=[_build(g, c, False) for c in comps])
        cocomps = _co_components(g, verts)
        if len(cocomps) > 1:
            return CotreeNode(label=1, children=[_build(g, c, True) for c in cocomps])
    else:
        cocomps = _co_components(g, verts)
        if len(cocomps) > 1:
            return CotreeNode(label=1, children=[_build(g, c, True) for c in cocomps])
        comps = _components(g, verts)
        if len(comps) > 1:
            return CotreeNode(label=0, children=[_build(g, c, False) for c in comps])
    raise _NotCograph(verts)


def build_cotree(g: Graph) -> Optional[Cotree]:
    """The canonical cotree of ``g``, or None when ``g`` contains a P4.

    The recursion splits each region into connected components (0-node) or
    complement components (1-node); a region admitting neither split is
    both connected and co-connected, which certifies an induced P4.
    """
    try:
        root = _build(g, list(range(g.n)), joined=True)
    except _NotCograph:
        return None
    return Cotree(root=root, n=g.n)


def find_induced_p4(
    g: Graph, verts: Optional[Sequence[int]] = None
) -> Optional[tuple[int, int, int, int]]:
    """Four vertices inducing a path, in path order, if any exist.

    Fast path: a shortest path of length three is induced.  Complete
    fallback: for an edge (b, c), any a in N(b)-N[c] and d in N(c)-N[b]
    with a and d non-adjacent close an induced P4 (every induced P4 has
    this form around its middle edge).
    """
    pool = list(range(g.n)) if verts is None else list(verts)
    member = set(pool)
    for s in pool:
        dist = {s: 0}
        prev = {}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if dist[x] == 3:
                path = [x]
                while path[-1] != s:
                    path.append(prev[path[-1]])
                a, b, c, d = path[::-1]
                return (a, b, c, d)
            for w in g.adj[x]:
                if w in member and w not in dist:
                    dist[w] = dist[x] + 1
                    prev[w] = x
                    queue.append(w)
    for b in pool:
        for c in g.adj[b]:
            if c not in member or c < b:
                continue
            bs = g.neighbor_set(b)
            cs = g.neighbor_set(c)
            aa = [a for a in g.adj[b] if a in member and a != c and a not in cs]
            dd = [d for d in g.adj[c] if d in member and d != b and d not in bs]
            for a in aa:
                as_ = g.neighbor_set(a)
                for d in dd:
                    if d != a and d not in as_:
                        return (a, b, c, d)
    return None


def normalize_cotree(root: CotreeNode, n: Optional[int] = None) -> Cotree:
    """Canonical form of a raw 0/1-labeled tree.

    Coalesces child-parent pairs with equal labels and parents with a
    single child; idempotent on already-canonical trees.
    """

    def norm(node: CotreeNode) -> CotreeNode:
        if node.is_leaf:
            return node
        if node.label not in (0, 1):
            raise ValueError(f"internal node labeled {node.label!r}")
        merged: list[CotreeNode] = []
        for ch in node.children:
            c2 = norm(ch)
            if not c2.is_leaf and c2.label == node.label:
                merged.extend(c2.children)
            else:
                merged.append(c2)
        if len(merged) == 0:
            raise ValueError("internal node without children")
        if len(merged) == 1:
            return merged[0]
        return CotreeNode(label=node.label, children=merged)

    root = norm(root)
    leaves = sorted(root.leaves())
    size = len(leaves) if n is None else n
    t = Cotree(root=root, n=size)
    bad = t.canonical_violation()
    if bad:
        raise ValueError(f"malformed cotree: {bad}")
    return t


# ---------------------------------------------------------------------------
# the shape test and the decomposition


def check_tc_family(t: Cotree) -> Optional[tuple[str, tuple[int, ...]]]:
    """None when the cotree has the accepted shape, else (reason, vertices).

    Accepted: all root children are leaves (complete graph), or the root
    mixes leaf children with 0-nodes, at most as many 0-nodes as leaves,
    each 0-node has exactly two branches, and every deeper 1-node has only
    leaf children.  The offending node's leaves are returned as witness.
    """
    root = t.root
    if root.is_leaf:
        return None  # single vertex, a complete graph
    if root.label != 1:
        raise ContractViolation("cotree of a connected graph must have a 1-root")
    leaf_children = [ch for ch in root.children if ch.is_leaf]
    zero_children = [ch for ch in root.children if not ch.is_leaf]
    assert all(ch.label == 0 for ch in zero_children), "non-canonical cotree"
    if not zero_children:
        return None  # complete graph
    if not leaf_children:
        return (REASON_ONLY_ZERO_CHILDREN, tuple(sorted(t.leaves())))
    if len(zero_children) > len(leaf_children):
        return (
            REASON_TOO_FEW_UNIVERSAL,
            tuple(sorted(ch.vertex for ch in leaf_children)),
        )
    for z in zero_children:
        if len(z.children) != 2:
            return (REASON_ZERO_NODE_ARITY, tuple(sorted(z.leaves())))
    for z in zero_children:
        for branch in z.children:
            if branch.is_leaf:
                continue
            assert branch.label == 1, "non-canonical cotree"
            for gc in branch.children:
                if not gc.is_leaf:
                    return (REASON_DEEP_ONE_NODE, tuple(sorted(branch.leaves())))
    return None


@dataclass(frozen=True)
class CographDecomposition:
    """Vertex partition read off an accepted cotree.

    ``parts[i]`` is the triple (C1, C2, C3) of the i-th 0-branch: the two
    non-adjacent cliques and their slice of the universal vertices.  For a
    complete graph ``parts`` is empty and every vertex is universal.
    """

    parts: tuple[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]], ...]
    universal: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.parts)


def decompose(t: Cotree) -> CographDecomposition:
    """Partition of an accepted, non-complete cotree into (C1, C2, C3) triples.

    Within a 0-node the branch holding the smallest vertex becomes C1.
    Universal vertices are dealt one per triple in index order; the
    remainder joins the first triple.
    """
    if check_tc_family(t) is not None:
        raise ContractViolation("cotree is not in the accepted family")
    root = t.root
    if root.is_leaf or all(ch.is_leaf for ch in root.children):
        raise ContractViolation("complete graphs have no triple decomposition")
    universal = sorted(ch.vertex for ch in root.children if ch.is_leaf)
    zero_children = [ch for ch in root.children if not ch.is_leaf]
    branches = []
    for z in zero_children:
        first, second = (sorted(b.leaves()) for b in z.children)
        if first[0] > second[0]:
            first, second = second, first
        branches.append((first, second))
    branches.sort(key=lambda fs: fs[0][0])
    r = len(branches)
    assert r <= len(universal), "excluded by the shape test"
    c2s = [[universal[i]] for i in range(r)]
    c2s[0].extend(universal[r:])
    parts = tuple(
        (tuple(c1), tuple(sorted(c2)), tuple(c3))
        for (c1, c3), c2 in zip(branches, c2s)
    )
    return CographDecomposition(parts=parts, universal=tuple(universal))


def certify_ci_cograph(
    d: CographDecomposition, g: Optional[Graph] = None
) -> Poset:
    """Witness poset of a decomposition: the sum of its three-layer rankings.

    Each triple contributes a completely ranked poset C1 < C2 < C3 on the
    original vertex indices; distinct triples stay incomparable.  When the
    graph is provided the result is checked against it exactly.
    """
    n = len(d.universal) + sum(
        len(c1) + len(c3) for c1, _, c3 in d.parts
    )
    covers = []
    ranks = [0] * n
    for c1, c2, c3 in d.parts:
        covers.extend((u, v) for u in c1 for v in c2)
        covers.extend((u, v) for u in c2 for v in c3)
        for v in c2:
            ranks[v] = 1
        for v in c3:
            ranks[v] = 2
    cert = Poset(n, covers, ranks=ranks)
    if g is not None:
        mismatch = ci_graph_mismatch(cert, g)
        if mismatch is not None:
            raise CertificateConstructionFailure(
                f"certificate disagrees with the input at pair {mismatch}"
            )
    return cert


@dataclass(frozen=True)
class CographVerdict:
    """Outcome of the cograph pipeline.

    status is one of "ci_cograph", "not_cograph", "not_ci"; rejections
    carry a witness (an induced P4, or the leaves under the offending
    cotree node) and acceptances a certificate plus its decomposition.
    """

    status: str
    reason: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None
    certificate: Optional[Poset] = None
    decomposition: Optional[CographDecomposition] = None
    cotree: Optional[Cotree] = None

    @property
    def accepted(self) -> bool:
        return self.status == CI_COGRAPH


def recognize_ci_cograph(g: Graph) -> CographVerdict:
    """Decide whether a connected graph is a C-I cograph, with certificate."""
    if not is_connected(g):
        raise ContractViolation("recognize_ci_cograph requires a connected graph")
    t = build_cotree(g)
    if t is None:
        return CographVerdict(status=NOT_COGRAPH, witness=find_induced_p4(g))
    shape = check_tc_family(t)
    if shape is not None:
        reason, witness = shape
        return CographVerdict(
            status=NOT_CI, reason=reason, witness=witness, cotree=t
        )
    if t.root.is_leaf or all(ch.is_leaf for ch in t.root.children):
        d = CographDecomposition(parts=(), universal=tuple(range(g.n)))
        cert = antichain(g.n)
        mismatch = ci_graph_mismatch(cert, g)
        if mismatch is not None:
            raise CertificateConstructionFailure(
                f"certificate disagrees with the input at pair {mismatch}"
            )
        return CographVerdict(
            status=CI_COGRAPH, certificate=cert, decomposition=d, cotree=t
        )
    d = decompose(t)
    cert = certify_ci_cograph(d, g)
    return CographVerdict(
        status=CI_COGRAPH, certificate=cert, decomposition=d, cotree=t
    )


# ---------------------------------------------------------------------------
# text form


def format_cotree(t: Cotree, labels: Optional[Sequence[str]] = None) -> str:
    """Nested parenthesized form, e.g. ``1(0(1(0 1) 1(3 4)) 2)``."""

    def fmt(node: CotreeNode) -> str:
        if node.is_leaf:
            return labels[node.vertex] if labels else str(node.vertex)
        inner = " ".join(fmt(ch) for ch in node.children)
        return f"{node.label}({inner})"

    return fmt(t.root)


def parse_cotree(text: str, labels: Optional[Sequence[str]] = None) -> Cotree:
    """Parse the nested parenthesized form and normalize the result."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse_node() -> CotreeNode:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of cotree text")
        tok = tokens[pos]
        if pos + 1 < len(tokens) and tokens[pos + 1] == "(":
            if tok not in ("0", "1"):
                raise ValueError(f"internal node label must be 0 or 1, got {tok!r}")
            pos += 2
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(parse_node())
            if pos >= len(tokens):
                raise ValueError("missing closing parenthesis")
            pos += 1
            return CotreeNode(label=int(tok), children=children)
        pos += 1
        if labels is not None:
            try:
                return CotreeNode(vertex=list(labels).index(tok))
            except ValueError:
                raise ValueError(f"unknown leaf label {tok!r}") from None
        if not tok.lstrip("-").isdigit():
            raise ValueError(f"leaf {tok!r} is not a vertex index")
        return CotreeNode(vertex=int(tok))

    root = parse_node()
    if pos != len(tokens):
        raise ValueError("trailing tokens after cotree")
    return normalize_cotree(root)
