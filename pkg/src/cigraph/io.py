"""Reading and writing graphs, posets, and DOT renderings.

Edge-list files start with ``n m`` and carry one edge per line; endpoints
are 0-based indices, or arbitrary string labels which get mapped to indices
in order of first appearance (the mapping is kept on the graph).  graph6 is
the standard bit-packed ASCII encoding.  Certificates travel as a small
text document listing elements, cover pairs and optional ranks.
"""

from __future__ import annotations

from typing import Optional, Sequence

from cigraph.graphs import Graph
from cigraph.posets import Poset

__all__ = [
    "format_edge_list",
    "format_graph6",
    "format_poset",
    "graph_dot",
    "hasse_dot",
    "parse_edge_list",
    "parse_graph6",
    "parse_poset",
]


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_edge_list(text: str) -> Graph:
    """Graph from ``n m`` header plus ``u v`` lines; labels map to indices."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"expected integer 'n m' header, got {lines[0]!r}") from None
    if n <= 0:
        raise ValueError("graph must have at least one vertex")
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header promises {m} edges, found {len(body)}")
    pairs = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {line!r}")
        pairs.append((parts[0], parts[1]))
    tokens = [t for uv in pairs for t in uv]
    as_indices = None
    if all(_is_index(t, n) for t in tokens):
        as_indices = [(int(u), int(v)) for u, v in pairs]
        return Graph(n, as_indices)
    mapping: dict[str, int] = {}
    for t in tokens:
        if t not in mapping:
            if len(mapping) == n:
                raise ValueError(f"more than {n} distinct labels in edge list")
            mapping[t] = len(mapping)
    if len(mapping) != n:
        raise ValueError(
            "labeled edge lists must mention every vertex "
            f"({len(mapping)} labels for n={n})"
        )
    labels = [""] * n
    for t, i in mapping.items():
        labels[i] = t
    return Graph(n, [(mapping[u], mapping[v]) for u, v in pairs], labels=labels)


def _is_index(token: str, n: int) -> bool:
    if not token.isdigit():
        return False
    return 0 <= int(token) < n


def format_edge_list(g: Graph) -> str:
    name = g.labels if g.labels else [str(v) for v in range(g.n)]
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{name[u]} {name[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    else:
        raise ValueError("graph6 output supports up to 258047 vertices")
    bits = []
    for j in range(1, n):
        js = g.neighbor_set(j)
        for i in range(j):
            bits.append(1 if i in js else 0)
    chars = []
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 input")
    if ord(s[0]) == 126:
        if len(s) >= 4 and ord(s[1]) != 126:
            n = 0
            for c in s[1:4]:
                n = n << 6 | (ord(c) - 63)
            rest = s[4:]
        else:
            raise ValueError("graph6 input beyond supported size")
    else:
        n = ord(s[0]) - 63
        rest = s[1:]
    if n <= 0:
        raise ValueError("graph must have at least one vertex")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ValueError(f"graph6 body has {len(rest)} chars, expected {need}")
    bits = []
    for c in rest:
        value = ord(c) - 63
        if not 0 <= value < 64:
            raise ValueError(f"invalid graph6 character {c!r}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise ValueError("nonzero padding bits in graph6 input")
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# poset documents


def format_poset(p: Poset) -> str:
    lines = [f"elements {p.n}", f"covers {len(p.covers)}"]
    lines.extend(f"{u} {v}" for u, v in p.covers)
    if p.ranks is not None:
        lines.append("ranks " + " ".join(str(r) for r in p.ranks))
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    lines = _content_lines(text)
    if not lines or lines[0].split()[0] != "elements":
        raise ValueError("poset document must start with 'elements N'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("poset document must start with 'elements N'") from None
    if len(lines) < 2 or lines[1].split()[0] != "covers":
        raise ValueError("poset document needs a 'covers M' line")
    m = int(lines[1].split()[1])
    body = lines[2 : 2 + m]
    if len(body) != m:
        raise ValueError(f"poset document promises {m} covers, found {len(body)}")
    covers = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' cover line, got {line!r}")
        covers.append((int(parts[0]), int(parts[1])))
    ranks: Optional[list[int]] = None
    trailer = lines[2 + m :]
    if trailer:
        parts = trailer[0].split()
        if parts[0] != "ranks" or len(trailer) > 1:
            raise ValueError("only a single 'ranks ...' line may follow the covers")
        ranks = [int(x) for x in parts[1:]]
        if len(ranks) != n:
            raise ValueError("ranks line must list one rank per element")
    return Poset(n, covers, ranks=ranks)


# ---------------------------------------------------------------------------
# DOT


def _dot_name(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(p: Poset, labels: Optional[Sequence[str]] = None) -> str:
    """Hasse diagram in DOT (covers drawn upward)."""
    name = labels if labels else [str(v) for v in range(p.n)]
    lines = ["digraph hasse {", "  rankdir=BT;"]
    lines.extend(f"  {v} [label={_dot_name(name[v])}];" for v in range(p.n))
    lines.extend(f"  {u} -> {v};" for u, v in p.covers)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: Graph) -> str:
    name = g.labels if g.labels else [str(v) for v in range(g.n)]
    lines = ["graph g {"]
    lines.extend(f"  {v} [label={_dot_name(name[v])}];" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
