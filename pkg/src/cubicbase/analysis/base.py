"""Exact base size by iterative deepening over stabiliser chains."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CapExceeded
from ..permgroup import PermGroup

BASE_DEGREE_CAP = 200
BASE_ORDER_CAP = 10**7


@dataclass(frozen=True)
class BaseResult:
    size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class PairResult:
    """Outcome of a two-point base scan.

    ``witness`` is a base of size at most 2 when one exists; otherwise
    ``checked`` lists the (alpha, beta) representatives that were refuted.
    """

    found: bool
    witness: tuple[int, ...] | None
    checked: tuple[tuple[int, int], ...] = ()


def _orbit_reps(group: PermGroup) -> list[int]:
    return [orb[0] for orb in group.orbits() if len(orb) > 1]


def _same_group(a: PermGroup, b: PermGroup) -> bool:
    return a.order() == b.order() and a.is_subgroup_of(b)


def is_base(group: PermGroup, points) -> bool:
    return group.pointwise_stabiliser(list(points)).is_trivial()


def base_size(
    group: PermGroup, *, degree_cap: int = BASE_DEGREE_CAP, order_cap: int = BASE_ORDER_CAP
) -> BaseResult:
    """Minimum size of a base, with a witness found first in natural scan order."""
    if group.degree > degree_cap:
        raise CapExceeded(f"degree {group.degree} exceeds base-size cap {degree_cap}")
    if group.order() > order_cap:
        raise CapExceeded(f"order {group.order()} exceeds base-size cap {order_cap}")
    if group.is_trivial():
        return BaseResult(0, ())

    def search(h: PermGroup, depth: int, prefix: list[int]):
        if h.is_trivial():
            return tuple(prefix)
        if depth == 0:
            return None
        reps = _orbit_reps(h)
        # each further point cuts the order by at most the largest orbit length
        longest = max(len(h.orbit(a)) for a in reps)
        if longest ** depth < h.order():
            return None
        expanded: list[PermGroup] = []
        for a in reps:
            stab = h.point_stabiliser(a)
            if any(_same_group(stab, e) for e in expanded):
                continue
            expanded.append(stab)
            found = search(stab, depth - 1, prefix + [a])
            if found is not None:
                return found
        return None

    depth = 1
    while True:
        found = search(group, depth, [])
        if found is not None:
            return BaseResult(depth, found)
        depth += 1


def has_base_le2(group: PermGroup) -> PairResult:
    """Decide whether some two points have trivial pointwise stabiliser.

    {alpha, beta} is a base exactly when beta lies in a regular orbit of
    G_alpha, so only orbit representatives alpha need to be tried.
    """
    if group.is_trivial():
        return PairResult(True, ())
    checked = []
    for orbit in group.orbits():
        alpha = orbit[0]
        stab = group.point_stabiliser(alpha)
        if stab.is_trivial():
            return PairResult(True, (alpha,))
        order = stab.order()
        for orb in stab.orbits():
            if len(orb) == order:
                return PairResult(True, (alpha, orb[0]))
            checked.append((alpha, orb[0]))
    return PairResult(False, None, tuple(checked))
