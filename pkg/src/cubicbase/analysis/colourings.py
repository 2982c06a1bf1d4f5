"""Asymmetric sets and asymmetric 3-colourings for permutation 2-groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import HypothesisError
from ..perm import Permutation
from ..permgroup import PermGroup
from .distinguishing import _combos, _good_subsets, _nonidentity

EXHAUSTIVE_DEGREE = 16
PAIR_COLOURS = ((0, 1), (0, 2), (1, 2))


class ExcludedGroup(HypothesisError):
    """The dihedral group of order 8 on 4 points, which has no asymmetric subset."""


@dataclass(frozen=True)
class Colouring:
    """Colours 0..num_colours-1 on the points of a domain.

    ``num_colours`` is the palette size; a colouring may leave some palette
    colours unused (two points coloured 0 and 2 differ from 0 and 1).
    """

    colours: tuple[int, ...]
    num_colours: int = 3

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        if any(not 0 <= c < self.num_colours for c in self.colours):
            raise ValueError("colour out of palette range")

    def __len__(self):
        return len(self.colours)

    def classes(self) -> list[list[int]]:
        return [[v for v, c in enumerate(self.colours) if c == k] for k in range(self.num_colours)]

    def image(self, g: Sequence[int]) -> Colouring:
        """The colouring moved by g: point g[v] receives the colour of v."""
        out = [0] * len(self.colours)
        for v, c in enumerate(self.colours):
            out[g[v]] = c
        return Colouring(tuple(out), self.num_colours)


def is_two_group(group: PermGroup) -> bool:
    order = group.order()
    return order & (order - 1) == 0


def _check_two_group(group: PermGroup):
    if not is_two_group(group):
        raise HypothesisError(f"group of order {group.order()} is not a 2-group")


def _is_d8_degree4(group: PermGroup) -> bool:
    return group.degree == 4 and group.order() == 8


def colour_stabiliser(group: PermGroup, colours: Sequence[int]) -> PermGroup:
    """Elements of the group preserving each colour class."""
    base = group.base

    def prefix_ok(i, g):
        b = base[i]
        return colours[g[b]] == colours[b]

    def leaf_ok(g):
        return all(colours[g[v]] == colours[v] for v in range(group.degree))

    return group._collect(group._search(prefix_ok, leaf_ok))


def colour_transporter(group: PermGroup, c1: Sequence[int], c2: Sequence[int]) -> Permutation | None:
    """Some g with c2[g[v]] == c1[v] for every v, or ``None``."""
    base = group.base

    def prefix_ok(i, g):
        b = base[i]
        return c2[g[b]] == c1[b]

    def leaf_ok(g):
        return all(c2[g[v]] == c1[v] for v in range(group.degree))

    return next(group._search(prefix_ok, leaf_ok), None)


def is_asymmetric(group: PermGroup, colours: Sequence[int]) -> bool:
    return colour_stabiliser(group, colours).is_trivial()


def set_is_asymmetric(group: PermGroup, points) -> bool:
    s = set(points)
    return is_asymmetric(group, [1 if v in s else 0 for v in range(group.degree)])


# ---- asymmetric subsets ----------------------------------------------------


def _exhaustive_set(group: PermGroup) -> tuple[int, ...] | None:
    n = group.degree
    E = _nonidentity(group, 10**6)
    limit = n if n <= 8 else (n - 1) // 2
    for k in range(1, limit + 1):
        combos = _combos(n, k, 0)
        good = np.flatnonzero(_good_subsets(E, combos))
        if len(good):
            return tuple(int(v) for v in combos[good[0]])
    return None


def _central_involution(group: PermGroup) -> Permutation:
    for z in group.center().elements():
        if not z.is_identity() and (z * z).is_identity():
            return z
    raise RuntimeError("a nontrivial 2-group has a central involution")


def _asymmetric_set(group: PermGroup) -> tuple[int, ...]:
    n = group.degree
    if n <= EXHAUSTIVE_DEGREE:
        x = _exhaustive_set(group)
        if x is None:
            if _is_d8_degree4(group):
                raise ExcludedGroup("D8 acting on 4 points has no asymmetric subset")
            raise RuntimeError(f"no asymmetric subset found for a group of degree {n}")
        return x
    z = _central_involution(group)
    # orbits of <z> have size 2 because a central element of a transitive group is fixed-point-free
    pairs = sorted({(min(v, z[v]), max(v, z[v])) for v in range(n)})
    index = {}
    for i, (a, b) in enumerate(pairs):
        index[a] = index[b] = i
    action = [Permutation._raw(index[g[a]] for a, _ in pairs) for g in group.generators]
    quotient = PermGroup(action)
    chosen = set(_asymmetric_set(quotient))
    return tuple(sorted(a for i, (a, _) in enumerate(pairs) if i not in chosen))


def asymmetric_set(group: PermGroup) -> tuple[int, ...]:
    """X with trivial setwise stabiliser, and |X| < n/2 when n > 8.

    Needs a transitive 2-group of class at most 2 other than D8 on 4 points.
    Degrees up to 16 are searched exhaustively; larger ones recurse on the
    orbits of a central involution, keeping one point from every orbit not
    used by the smaller solution.
    """
    _check_two_group(group)
    if not group.is_transitive():
        raise HypothesisError("group is not transitive")
    if group.nilpotency_class() > 2:
        raise HypothesisError("group has nilpotency class greater than 2")
    if group.degree == 1:
        return (0,)
    x = _asymmetric_set(group)
    if not set_is_asymmetric(group, x):
        raise RuntimeError("constructed set has a nontrivial stabiliser")
    if group.degree > 8 and not 2 * len(x) < group.degree:
        raise RuntimeError("constructed set is too large")
    return x


# ---- asymmetric 3-colourings ------------------------------------------------


def _pair_block_system(group: PermGroup):
    for b in range(1, group.degree):
        bs = group.block_system([0, b])
        if bs.block_size == 2:
            return bs
    raise RuntimeError("transitive 2-group without blocks of size 2")


def _three_colourings(group: PermGroup) -> list[list[int]]:
    n = group.degree
    if n == 1:
        return [[0], [1], [2]]
    if group.is_trivial():
        return [[k] + [0] * (n - 1) for k in range(3)]
    orbits = group.orbits()
    if len(orbits) > 1:
        out = [[0] * n for _ in range(3)]
        for orb in orbits:
            index = {v: i for i, v in enumerate(orb)}
            sub = PermGroup([Permutation._raw(index[g[v]] for v in orb) for g in group.generators])
            for j, col in enumerate(_three_colourings(sub)):
                for v in orb:
                    out[j][v] = col[index[v]]
        return out
    bs = _pair_block_system(group)
    upper = _three_colourings(bs.block_action)
    out = []
    for col in upper:
        c = [0] * n
        for i, (a, b) in enumerate(bs.blocks):
            c[a], c[b] = PAIR_COLOURS[col[i]]
        out.append(c)
    return out


def asymmetric_3colourings(group: PermGroup) -> list[Colouring]:
    """Three pairwise inequivalent colourings with at most 3 colours, each fixed only by 1.

    Orbits are coloured independently (colouring j on every orbit); a
    transitive group is handled through a block system with blocks of size 2,
    colouring the blocks recursively and spelling block colour k as the k-th
    pair of distinct colours.
    """
    _check_two_group(group)
    if group.degree < 2:
        raise HypothesisError("need at least two points")
    cols = [Colouring(tuple(c)) for c in _three_colourings(group)]
    validate_colourings(group, cols)
    return cols


def validate_colourings(group: PermGroup, cols: Sequence[Colouring]) -> None:
    for c in cols:
        if not is_asymmetric(group, c.colours):
            raise RuntimeError(f"colouring {c.colours} has a nontrivial stabiliser")
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            if colour_transporter(group, cols[i].colours, cols[j].colours) is not None:
                raise RuntimeError(f"colourings {i} and {j} are equivalent")
