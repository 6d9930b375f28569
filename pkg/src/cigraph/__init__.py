"""Posets, their cover-incomparability graphs, and recognition pipelines.

The library answers one question two ways: given a connected graph, is it
the cover-incomparability graph of some poset?  For chordal inputs and for
cographs the answer is decided in (near-)linear time and every YES comes
with a witness poset; a brute-force oracle over all labeled posets settles
small instances unconditionally.
"""

from cigraph.graphs import (
    Graph,
    independent_simplicial_count,
    is_claw_free,
    is_connected,
    is_simplicial,
    simplicial_vertices,
)
from cigraph.posets import (
    Poset,
    ci_graph,
    completely_ranked,
    poset_sum,
    transitive_reduction,
)
from cigraph.chordal import (
    ChordalVerdict,
    certify_chordal_ci,
    clique_tree,
    is_peo,
    lex_bfs,
    recognize_chordal,
    recognize_chordal_ci,
)
from cigraph.cographs import (
    CographVerdict,
    Cotree,
    build_cotree,
    recognize_ci_cograph,
)
from cigraph.oracle import (
    enumerate_labeled_posets,
    is_chordal_bruteforce,
    is_ci_graph_bruteforce,
    is_cograph_bruteforce,
)

__all__ = [
    "Graph",
    "Poset",
    "ChordalVerdict",
    "CographVerdict",
    "Cotree",
    "build_cotree",
    "certify_chordal_ci",
    "ci_graph",
    "clique_tree",
    "completely_ranked",
    "enumerate_labeled_posets",
    "independent_simplicial_count",
    "is_chordal_bruteforce",
    "is_ci_graph_bruteforce",
    "is_claw_free",
    "is_cograph_bruteforce",
    "is_connected",
    "is_peo",
    "is_simplicial",
    "lex_bfs",
    "poset_sum",
    "recognize_chordal",
    "recognize_chordal_ci",
    "recognize_ci_cograph",
    "simplicial_vertices",
    "transitive_reduction",
]

__version__ = "0.1.0"
