"""Trivial intersections P ∩ P^t and distinct double cosets PtP inside small groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CapExceeded, HypothesisError
from ..perm import Permutation
from ..permgroup import PermGroup

STAR_CAP = 50000
DOUBLE_COSET_CAP = 10**6


@dataclass(frozen=True)
class StarWitness:
    """Representatives t with P ∩ P^t = 1 lying in distinct double cosets PtP.

    ``t`` holds at most three of them; ``satisfied`` says whether three exist.
    ``trivial_intersections`` counts every t in T with P ∩ P^t = 1 and
    ``double_cosets`` the number of distinct PtP among those.
    """

    t: tuple[Permutation, ...]
    satisfied: bool
    trivial_intersections: int = 0
    double_cosets: int = 0
    first_witness: Permutation | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "t": [list(x) for x in self.t],
            "satisfied": self.satisfied,
            "trivial_intersections": self.trivial_intersections,
            "double_cosets": self.double_cosets,
        }


def double_coset(p: PermGroup, t: Permutation, cap: int = DOUBLE_COSET_CAP) -> frozenset:
    elems = p.elements()
    if len(elems) ** 2 > cap:
        raise CapExceeded(f"double coset enumeration needs {len(elems) ** 2} products")
    left = [a * t for a in elems]
    return frozenset(x * b for x in left for b in elems)


def double_cosets_distinct(p: PermGroup, t1: Permutation, t2: Permutation, cap: int = DOUBLE_COSET_CAP) -> bool:
    """True when t2 is not in P t1 P (so the two double cosets are disjoint)."""
    return t2 not in double_coset(p, t1, cap)


def conjugate_meets_trivially(p_elems, p_set, t: Permutation) -> bool:
    """P ∩ P^t = 1, using x ∈ P^t iff t x t^-1 ∈ P."""
    t_inv = t.inverse()
    return not any(t * x * t_inv in p_set for x in p_elems)


def star_check(
    g: PermGroup,
    t_group: PermGroup,
    p: PermGroup,
    *,
    cap: int = STAR_CAP,
    check_normal: bool = True,
) -> StarWitness:
    """Scan T for trivial intersections and greedily keep double-coset-distinct ones."""
    if g.order() > cap:
        raise CapExceeded(f"|G| = {g.order()} exceeds the star cap {cap}")
    if not p.is_subgroup_of(g):
        raise HypothesisError("P is not a subgroup of G")
    if not t_group.is_subgroup_of(g):
        raise HypothesisError("T is not a subgroup of G")
    if check_normal and not all(t_group.contains(x ** y) for x in t_group.generators for y in g.generators):
        raise HypothesisError("T is not normal in G")
    p_nontrivial = [x for x in p.elements() if not x.is_identity()]
    p_set = p.element_set()
    kept: list[Permutation] = []
    covered: set = set()
    count = 0
    first = None
    for t in t_group.elements(cap):
        if not conjugate_meets_trivially(p_nontrivial, p_set, t):
            continue
        count += 1
        if first is None:
            first = t
        if t in covered:
            continue
        kept.append(t)
        covered |= double_coset(p, t)
    return StarWitness(
        t=tuple(kept[:3]),
        satisfied=len(kept) >= 3,
        trivial_intersections=count,
        double_cosets=len(kept),
        first_witness=first,
    )


def revalidate(p: PermGroup, witness: StarWitness) -> bool:
    """Direct recheck of the kept representatives."""
    p_nontrivial = [x for x in p.elements() if not x.is_identity()]
    p_set = p.element_set()
    for t in witness.t:
        if not conjugate_meets_trivially(p_nontrivial, p_set, t):
            return False
        if not p.conjugate(t).intersection(p).is_trivial():
            return False
    for i in range(len(witness.t)):
        for j in range(i + 1, len(witness.t)):
            if not double_cosets_distinct(p, witness.t[i], witness.t[j]):
                return False
    return True
