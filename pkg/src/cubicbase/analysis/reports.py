"""Structural checks on vertex stabilisers, size bounds, local graph configurations and regular-orbit counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import HypothesisError
from ..graphs import Graph, automorphism_group, bfs_distances, girth
from ..graphs.symmetry import is_arc_transitive, max_s_arc_transitivity
from ..perm import Permutation
from ..permgroup import ENUMERATION_CAP, PermGroup
from .colourings import is_two_group


@dataclass(frozen=True)
class StabiliserReport:
    arc_transitive: bool
    stabiliser_order: int
    two_group: bool
    nilpotency_class: int | None
    exponent: int | None
    passed: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def stabiliser_structure_report(g: Graph, group: PermGroup | None = None) -> StabiliserReport:
    """Arc-transitive: |G_a| divides 48.  Otherwise G_a is a 2-group of class <= 2, exponent <= 4."""
    G = automorphism_group(g) if group is None else group
    if not G.is_transitive():
        raise HypothesisError("not vertex-transitive")
    stab = G.point_stabiliser(0)
    order = stab.order()
    at = is_arc_transitive(g, G)
    two = is_two_group(stab)
    cls = exp = None
    if two:
        cls = stab.nilpotency_class()
        exp = stab.exponent()
    if at:
        passed = 48 % order == 0
    else:
        passed = two and cls <= 2 and exp <= 4
    return StabiliserReport(at, order, two, cls, exp, passed)


# ---- global bounds ----------------------------------------------------------------


def aut_bound_holds(g: Graph, group: PermGroup | None = None) -> bool:
    G = automorphism_group(g) if group is None else group
    return G.order() <= 2 * g.n * g.n


def abelian_pair(group: PermGroup) -> tuple[int, int] | None:
    """Two distinct points whose pointwise stabiliser is abelian, first in scan order."""
    for orb in group.orbits():
        a = orb[0]
        stab = group.point_stabiliser(a)
        for o2 in stab.orbits():
            b = o2[0]
            if b == a:
                continue
            if stab.point_stabiliser(b).is_abelian():
                return (a, b)
    return None


# ---- local configurations as checkable implications ----------------------------


def twin_vertices(g: Graph) -> tuple[int, int] | None:
    """Two distinct vertices with the same neighbourhood."""
    seen = {}
    for v in range(g.n):
        key = g.adj[v]
        if key in seen:
            return (seen[key], v)
        seen[key] = v
    return None


def prism_configuration(g: Graph) -> tuple[int, int, int] | None:
    """(a, b, c): a ~ c, |N(a) ∩ N(b)| = 2 and d(a,b) = d(b,c) = 2."""
    dist = [bfs_distances(g, v) for v in range(g.n)]
    for a in range(g.n):
        na = set(g.adj[a])
        for b in range(g.n):
            if b == a or dist[a][b] != 2 or len(na & set(g.adj[b])) != 2:
                continue
            for c in g.adj[a]:
                if c != b and dist[b][c] == 2:
                    return (a, b, c)
    return None


def girth_from_fixed_s_arc(g: Graph, group: PermGroup | None = None) -> bool | None:
    """For an s-arc-regular graph: if the endpoints of some s-arc share a nontrivial stabiliser, girth <= 2s.

    Returns ``None`` when the hypothesis (arc-transitive, regular on s-arcs)
    does not apply, otherwise whether the implication holds.
    """
    from ..graphs.core import s_arcs

    G = automorphism_group(g) if group is None else group
    s = max_s_arc_transitivity(g, G)
    if s < 1:
        return None
    arcs = s_arcs(g, s, start=0)
    if len(arcs) * g.n != G.order():
        return None
    stab = G.point_stabiliser(0)
    premise = any(not stab.point_stabiliser(arc[-1]).is_trivial() for arc in arcs)
    if not premise:
        return True
    return girth(g) <= 2 * s


# ---- regular-orbit counting -------------------------------------------------------


def induced_action(group: PermGroup, sub_gens, points) -> PermGroup:
    index = {p: i for i, p in enumerate(points)}
    gens = [Permutation._raw(index[h[p]] for p in points) for h in sub_gens] or [
        Permutation.identity(len(points))
    ]
    return PermGroup(gens)


def inflate_bound(group: PermGroup, blocks) -> tuple[int, int]:
    """(regular orbits of H_delta on Delta, kappa |H_sigma : H_delta|^2) for delta = 0."""
    blocks = [tuple(b) for b in blocks]
    sigma = next(b for b in blocks if 0 in b)
    h_sigma = group.setwise_stabiliser(sigma)
    h_delta = group.point_stabiliser(0)
    block_index = {}
    for i, b in enumerate(blocks):
        for p in b:
            block_index[p] = i
    on_blocks = [Permutation._raw(block_index[h[b[0]]] for b in blocks) for h in h_sigma.generators]
    kappa_group = PermGroup(on_blocks)
    # regular orbits of H_sigma on the blocks, measured against |H_sigma| itself
    hs = h_sigma.order()
    kappa = sum(1 for orb in kappa_group.orbits() if len(orb) == hs)
    lhs = h_delta.regular_orbit_count()
    index_ = hs // h_delta.order()
    return lhs, kappa * index_ * index_


def involution_fpr_sum(p: PermGroup, cap: int = ENUMERATION_CAP) -> Fraction:
    n = p.degree
    return sum(
        (Fraction(len(h.fixed_points()), n) for h in p.elements(cap) if h.order() == 2),
        Fraction(0),
    )


def three_regular_orbits_hypothesis(p: PermGroup) -> bool:
    return involution_fpr_sum(p) <= 1 - Fraction(3 * p.order(), p.degree)


def fpr_identity_holds(group: PermGroup, x: Permutation, point: int = 0, cap: int = 5000) -> bool:
    """|Fix(x)| / n equals |x^G ∩ G_point| / |x^G| exactly."""
    return group.fixed_point_ratio(x) == group.conjugacy_fixed_point_ratio(x, point, cap)
