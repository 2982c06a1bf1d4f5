from .core import (
    Digraph,
    Graph,
    bfs_distances,
    diameter,
    distance,
    distance_matrix,
    from_edges,
    girth,
    is_connected,
    s_arcs,
    underlying,
)
from .search import AUT_VERTEX_CAP, automorphism_group, automorphism_search, isomorphic, isomorphism

__all__ = [
    "AUT_VERTEX_CAP",
    "Digraph",
    "Graph",
    "automorphism_group",
    "automorphism_search",
    "bfs_distances",
    "diameter",
    "distance",
    "distance_matrix",
    "from_edges",
    "girth",
    "is_connected",
    "isomorphic",
    "isomorphism",
    "s_arcs",
    "underlying",
]
