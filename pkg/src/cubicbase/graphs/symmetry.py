"""Transitivity on vertices, edges, arcs and s-arcs; quotients by groups of automorphisms."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from ..errors import HypothesisError
from ..perm import Permutation
from ..permgroup import PermGroup
from .core import Digraph, Graph, s_arcs
from .search import automorphism_group

MAX_S = 6


def _orbit_of(start: tuple, gens: Sequence[Permutation], image) -> set:
    seen = {start}
    queue = [start]
    for a in queue:
        for g in gens:
            b = image(g, a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def _tuple_image(g, t):
    return tuple(g[v] for v in t)


def _edge_image(g, e):
    a, b = g[e[0]], g[e[1]]
    return (a, b) if a < b else (b, a)


def orbits_on(items: Iterable[Hashable], gens: Sequence[Permutation], image) -> list[list]:
    """Orbits of a group (given by generators) on a finite set of items."""
    items = list(items)
    seen = set()
    out = []
    for it in items:
        if it in seen:
            continue
        orb = _orbit_of(it, gens, image)
        seen |= orb
        out.append(sorted(orb))
    return out


def _group(g: Graph, group: PermGroup | None) -> PermGroup:
    return automorphism_group(g) if group is None else group


def is_vertex_transitive(g: Graph, group: PermGroup | None = None) -> bool:
    return _group(g, group).is_transitive()


def is_edge_transitive(g: Graph, group: PermGroup | None = None) -> bool:
    edges = g.edges()
    if not edges:
        return True
    G = _group(g, group)
    return len(_orbit_of(edges[0], G.generators, _edge_image)) == len(edges)


def is_s_arc_transitive(g: Graph, s: int, group: PermGroup | None = None) -> bool:
    if s == 0:
        return is_vertex_transitive(g, group)
    G = _group(g, group)
    if not G.is_transitive():
        return False
    first = s_arcs(g, s, start=0)
    if not first:
        return False
    total = len(first) * g.n if g.valency() is not None else len(s_arcs(g, s))
    return len(_orbit_of(first[0], G.generators, _tuple_image)) == total


def is_arc_transitive(g: Graph, group: PermGroup | None = None) -> bool:
    return is_s_arc_transitive(g, 1, group)


def is_arc_transitive_under(g: Graph, group: PermGroup) -> bool:
    return is_s_arc_transitive(g, 1, group)


def max_s_arc_transitivity(g: Graph, group: PermGroup | None = None) -> int:
    """Largest s <= 6 for which the group is transitive on s-arcs; -1 if not vertex-transitive."""
    G = _group(g, group)
    best = -1
    for s in range(MAX_S + 1):
        if not is_s_arc_transitive(g, s, G):
            break
        best = s
    return best


def edge_orbits(g: Graph, group: PermGroup | None = None) -> list[list[tuple[int, int]]]:
    return orbits_on(g.edges(), _group(g, group).generators, _edge_image)


def arc_orbits(g: Graph, group: PermGroup | None = None) -> list[list[tuple[int, int]]]:
    return orbits_on(g.arcs(), _group(g, group).generators, _tuple_image)


def is_half_arc_transitive_under(g: Graph, group: PermGroup) -> bool:
    return (
        group.is_transitive()
        and is_edge_transitive(g, group)
        and not is_arc_transitive(g, group)
    )


def orientations(g: Graph, group: PermGroup | None = None) -> tuple[Digraph, Digraph]:
    """Both oriented graphs given by the two arc orbits of a half-arc-transitive group."""
    G = _group(g, group)
    if not is_half_arc_transitive_under(g, G):
        raise HypothesisError("group is not half-arc-transitive on the graph")
    orbs = arc_orbits(g, G)
    if len(orbs) != 2:
        raise HypothesisError(f"expected 2 arc orbits, found {len(orbs)}")
    return Digraph.from_arcs(g.n, orbs[0]), Digraph.from_arcs(g.n, orbs[1])


def quotient(g: Graph | Digraph, group: PermGroup) -> Graph | Digraph:
    """Graph on the orbits of ``group``; distinct orbits joined when some representatives are.

    Orbits are numbered by their least vertex.  Digraph quotients keep direction.
    """
    if group.degree != g.n:
        raise ValueError("group degree differs from the vertex count")
    for h in group.generators:
        if not g.is_automorphism(h):
            raise HypothesisError("group is not a subgroup of the automorphism group")
    orbs = group.orbits()
    where = [0] * g.n
    for i, orb in enumerate(orbs):
        for v in orb:
            where[v] = i
    pairs = {(where[u], where[v]) for u, v in g.arcs() if where[u] != where[v]}
    if isinstance(g, Digraph):
        return Digraph.from_arcs(len(orbs), pairs)
    return Graph.from_edges(len(orbs), pairs)
