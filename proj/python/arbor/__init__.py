"""Rooted minimum cuts and arborescence packings via expander hierarchies.

Vertex and edge ids are 0-based; edge ids index the normalized graph.
"""

from ._arbor import (
    ArborError,
    Graph,
    PackingResult,
    approx_rooted_mincut,
    build_hierarchy,
    exact_rooted_mincut,
    generate,
    generator_kinds,
    pack,
    verify_arborescence,
    verify_packing,
)

__all__ = [
    "ArborError",
    "Graph",
    "PackingResult",
    "approx_rooted_mincut",
    "build_hierarchy",
    "exact_rooted_mincut",
    "generate",
    "generator_kinds",
    "pack",
    "verify_arborescence",
    "verify_packing",
]
