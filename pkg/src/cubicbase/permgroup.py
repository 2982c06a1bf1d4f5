"""Permutation groups backed by a stabiliser chain.

Orders are exact Python integers.  The chain is built by deterministic
Schreier-Sims: every Schreier generator is sifted before a level is accepted.
When the order of the group is already known (for example after a change of
base) a seeded random Schreier-Sims is used instead, and it only stops once
the chain reaches exactly that order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Callable, Iterable, Iterator, Sequence

from .errors import CapExceeded, HypothesisError
from .perm import Permutation

ENUMERATION_CAP = 10**6
INTERSECTION_ENUM_LIMIT = 2**16


@dataclass
class _Level:
    point: int
    gens: list[Permutation] = field(default_factory=list)
    trans: dict[int, Permutation] = field(default_factory=dict)
    inv: dict[int, Permutation] = field(default_factory=dict)
    checked: set = field(default_factory=set)

    def extend_orbit(self, n: int) -> None:
        if not self.trans:
            e = Permutation.identity(n)
            self.trans[self.point] = e
            self.inv[self.point] = e
        queue = list(self.trans)
        i = 0
        while i < len(queue):
            beta = queue[i]
            i += 1
            u = self.trans[beta]
            for x in self.gens:
                gamma = x[beta]
                if gamma not in self.trans:
                    w = u * x
                    self.trans[gamma] = w
                    self.inv[gamma] = w.inverse()
                    queue.append(gamma)

    def copy(self) -> _Level:
        return _Level(self.point, list(self.gens), dict(self.trans), dict(self.inv), set(self.checked))


def _sift(levels: Sequence[_Level], g: Permutation, start: int = 0) -> tuple[Permutation, int]:
    for j in range(start, len(levels)):
        lev = levels[j]
        beta = g[lev.point]
        if beta == lev.point:
            continue
        inv = lev.inv.get(beta)
        if inv is None:
            return g, j
        g = g * inv
    return g, len(levels)


def _first_moved(g: Permutation) -> int:
    for i, j in enumerate(g):
        if i != j:
            return i
    raise ValueError("identity has no moved point")


class PermGroup:
    """A permutation group given by generators, with a verified stabiliser chain."""

    def __init__(
        self,
        generators: Iterable[Sequence[int]],
        *,
        base: Sequence[int] = (),
        known_order: int | None = None,
        seed: int = 0,
    ):
        gens = [g if isinstance(g, Permutation) else Permutation.checked(g) for g in generators]
        if not gens:
            raise ValueError("empty generator list")
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("generators have different degrees")
        self.degree = n
        self.generators = tuple(gens)
        self._elements: list[Permutation] | None = None
        self._element_set: frozenset | None = None
        nontrivial = [g for g in gens if not g.is_identity()]
        if known_order is not None:
            self._levels = _random_schreier_sims(n, nontrivial, list(base), known_order, seed)
        else:
            self._levels = _schreier_sims(n, nontrivial, list(base))

    @classmethod
    def _from_levels(cls, degree: int, levels: list[_Level], generators=None) -> PermGroup:
        self = cls.__new__(cls)
        self.degree = degree
        self._levels = levels
        self._elements = None
        self._element_set = None
        if generators is None:
            seen = []
            for lev in levels:
                for g in lev.gens:
                    if g not in seen:
                        seen.append(g)
            generators = seen or [Permutation.identity(degree)]
        self.generators = tuple(generators)
        return self

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls([Permutation.identity(degree)])

    # ---- basic queries -------------------------------------------------

    def order(self) -> int:
        return prod(len(lev.trans) for lev in self._levels)

    def __len__(self):
        return self.order()

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        out = []
        for lev in self._levels:
            for g in lev.gens:
                if g not in out:
                    out.append(g)
        return out

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lev.trans) for lev in self._levels]

    def is_trivial(self) -> bool:
        return self.order() == 1

    def contains(self, g: Sequence[int]) -> bool:
        if len(g) != self.degree:
            return False
        g = g if isinstance(g, Permutation) else Permutation._raw(g)
        h, j = _sift(self._levels, g)
        return j == len(self._levels) and h.is_identity()

    __contains__ = contains

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # ---- elements ------------------------------------------------------

    def elements(self, cap: int = ENUMERATION_CAP) -> list[Permutation]:
        """All elements, in a fixed order determined by the chain."""
        if self._elements is None:
            if self.order() > cap:
                raise CapExceeded(f"group of order {self.order()} exceeds enumeration cap {cap}")
            elems = [self.identity()]
            for lev in reversed(self._levels):
                reps = list(lev.trans.values())
                elems = [h * u for u in reps for h in elems]
            self._elements = elems
        return self._elements

    def element_set(self, cap: int = ENUMERATION_CAP) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements(cap))
        return self._element_set

    def random_element(self, rng: random.Random) -> Permutation:
        g = self.identity()
        for lev in reversed(self._levels):
            g = g * rng.choice(list(lev.trans.values()))
        return g

    # ---- orbits --------------------------------------------------------

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for a in queue:
            for g in self.generators:
                b = g[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(queue)

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for a in range(self.degree):
            if not seen[a]:
                orb = self.orbit(a)
                for b in orb:
                    seen[b] = True
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_semiregular(self) -> bool:
        order = self.order()
        return all(len(orb) == order for orb in self.orbits())

    def regular_orbit_count(self) -> int:
        order = self.order()
        return sum(1 for orb in self.orbits() if len(orb) == order)

    # ---- subgroups -----------------------------------------------------

    def with_base(self, prefix: Sequence[int]) -> PermGroup:
        """Same group, chain rebuilt so that its base starts with ``prefix``.

        The trivial group is returned unchanged, with an empty base.
        """
        prefix = list(prefix)
        if self.base[: len(prefix)] == prefix:
            return self
        if self.is_trivial():
            return self
        return PermGroup(self.strong_generators, base=prefix, known_order=self.order())

    def pointwise_stabiliser(self, points: Sequence[int]) -> PermGroup:
        points = list(dict.fromkeys(points))
        if not points or self.is_trivial():
            return self
        g = self.with_base(points)
        k = len(points)
        levels = [lev.copy() for lev in g._levels[k:]]
        return PermGroup._from_levels(self.degree, levels)

    def transversal_map(self, point: int) -> dict[int, Permutation]:
        """For each ``b`` in the orbit of ``point``, an element sending ``point`` to ``b``."""
        if self.is_trivial():
            return {point: self.identity()}
        return dict(self.with_base([point])._levels[0].trans)

    def point_stabiliser(self, point: int) -> PermGroup:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range")
        return self.pointwise_stabiliser([point])

    def subgroup(self, gens: Iterable[Permutation]) -> PermGroup:
        gens = list(gens) or [self.identity()]
        return PermGroup(gens)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __hash__(self):
        return hash((self.degree, self.order()))

    def conjugate(self, t: Permutation) -> PermGroup:
        """``G^t = t^-1 G t``."""
        t_inv = t.inverse()
        gens = [t_inv * g * t for g in self.generators]
        return PermGroup(gens, known_order=self.order()) if not self.is_trivial() else PermGroup(gens)

    def _search(
        self,
        prefix_ok: Callable[[int, Permutation], bool],
        leaf_ok: Callable[[Permutation], bool],
    ) -> Iterator[Permutation]:
        """Depth-first walk over the elements via base images.

        ``prefix_ok(i, g)`` sees a partial product whose images of base points
        ``0..i`` are final.
        """
        levels = self._levels
        k = len(levels)

        def rec(i: int, partial: Permutation):
            if i == k:
                if leaf_ok(partial):
                    yield partial
                return
            for u in levels[i].trans.values():
                g = u * partial
                if prefix_ok(i, g):
                    yield from rec(i + 1, g)

        yield from rec(0, self.identity())

    def _collect(self, candidates: Iterable[Permutation]) -> PermGroup:
        found: PermGroup = PermGroup.trivial(self.degree)
        gens: list[Permutation] = []
        for g in candidates:
            if not found.contains(g):
                gens.append(g)
                found = PermGroup(gens)
        return found

    def setwise_stabiliser(self, points: Iterable[int]) -> PermGroup:
        s = frozenset(points)
        if not s or any(not 0 <= a < self.degree for a in s):
            raise ValueError("set must be nonempty and within the degree")
        base = self.base

        def prefix_ok(i, g):
            return (base[i] in s) == (g[base[i]] in s)

        def leaf_ok(g):
            return all(g[a] in s for a in s)

        return self._collect(self._search(prefix_ok, leaf_ok))

    def intersection(self, other: PermGroup) -> PermGroup:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        small, big = (self, other) if self.order() <= other.order() else (other, self)
        if small.order() <= INTERSECTION_ENUM_LIMIT:
            return small._collect(g for g in small.elements() if big.contains(g))
        # backtrack over ``small`` keeping the partial image realisable in ``big``
        big = big.with_base(small.base)
        big_levels = big._levels
        base = small.base

        def prefix_ok(i, g):
            r = None
            for j in range(i + 1):
                beta = g[base[j]] if r is None else r[g[base[j]]]
                step = big_levels[j].inv.get(beta)
                if step is None:
                    return False
                r = step if r is None else r * step
            return True

        return small._collect(small._search(prefix_ok, big.contains))

    def intersection_trivial(self, other: PermGroup) -> bool:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        small, big = (self, other) if self.order() <= other.order() else (other, self)
        if small.order() <= INTERSECTION_ENUM_LIMIT:
            return not any(big.contains(g) for g in small.elements() if not g.is_identity())
        return self.intersection(other).is_trivial()

    def normal_closure(self, gens: Iterable[Permutation]) -> PermGroup:
        """Normal closure in ``self`` of the subgroup generated by ``gens``."""
        current = [g for g in gens if not g.is_identity()]
        if not current:
            return PermGroup.trivial(self.degree)
        n = PermGroup(current)
        i = 0
        while i < len(current):
            x = current[i]
            i += 1
            for g in self.generators:
                y = x ** g
                if not n.contains(y):
                    current.append(y)
                    n = PermGroup(current)
        return n

    def commutator_subgroup(self, other: PermGroup) -> PermGroup:
        """``[other, self]`` for ``other`` normal in ``self``."""
        comms = [x.commutator(g) for x in other.generators for g in self.generators]
        return self.normal_closure(comms)

    def derived_subgroup(self) -> PermGroup:
        return self.commutator_subgroup(self)

    def derived_series(self) -> list[PermGroup]:
        series = [self]
        while True:
            d = series[-1].derived_subgroup()
            if d.order() == series[-1].order():
                return series
            series.append(d)
            if d.is_trivial():
                return series

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def lower_central_series(self) -> list[PermGroup]:
        series = [self]
        while not series[-1].is_trivial():
            nxt = self.commutator_subgroup(series[-1])
            if nxt.order() == series[-1].order():
                raise HypothesisError("group is not nilpotent")
            series.append(nxt)
        return series

    def nilpotency_class(self) -> int:
        return len(self.lower_central_series()) - 1

    def exponent(self, cap: int = ENUMERATION_CAP) -> int:
        return lcm(1, *{g.order() for g in self.elements(cap)})

    def center(self, cap: int = ENUMERATION_CAP) -> PermGroup:
        gens = self.generators
        return self._collect(
            z for z in self.elements(cap) if all(z * g == g * z for g in gens)
        )

    def centraliser(self, x: Permutation, cap: int = ENUMERATION_CAP) -> PermGroup:
        return self._collect(g for g in self.elements(cap) if g * x == x * g)

    def normaliser(self, sub: PermGroup, cap: int = ENUMERATION_CAP) -> PermGroup:
        return self._collect(
            g for g in self.elements(cap) if all(sub.contains(h ** g) for h in sub.generators)
        )

    def conjugacy_class(self, x: Permutation, cap: int = 5000) -> list[Permutation]:
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self.generators:
                z = y ** g
                if z not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"conjugacy class larger than {cap}")
                    seen.add(z)
                    queue.append(z)
        return queue

    def sylow2(self, cap: int = ENUMERATION_CAP) -> PermGroup:
        """A Sylow 2-subgroup, grown one step at a time inside normalisers."""
        order = self.order()
        target = order & -order
        elems = self.elements(cap)
        p_gens: list[Permutation] = []
        p_set = {self.identity()}
        while len(p_set) < target:
            for g in elems:
                if g in p_set or g * g not in p_set:
                    continue
                g_inv = g.inverse()
                if all(g_inv * h * g in p_set for h in p_gens):
                    break
            else:  # pragma: no cover - excluded by Sylow's theorems
                raise RuntimeError("normaliser climb stalled")
            p_gens.append(g)
            p_set = set(PermGroup(p_gens).elements())
        if not p_gens:
            return PermGroup.trivial(self.degree)
        return PermGroup(p_gens)

    # ---- actions -------------------------------------------------------

    def block_system(self, seed: Sequence[int]) -> BlockSystem:
        """Finest block system with the seed points in one block."""
        if not self.is_transitive():
            raise HypothesisError("block systems need a transitive group")
        parent = list(range(self.degree))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        seed = list(seed)
        pending = []
        for b in seed[1:]:
            ra, rb = find(seed[0]), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
                pending.append((seed[0], b))
        while pending:
            a, b = pending.pop()
            for g in self.generators:
                ra, rb = find(g[a]), find(g[b])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
                    pending.append((g[a], g[b]))
        cells: dict[int, list[int]] = {}
        for a in range(self.degree):
            cells.setdefault(find(a), []).append(a)
        blocks = sorted(cells.values())
        index = {a: i for i, blk in enumerate(blocks) for a in blk}
        action = [
            Permutation._raw(index[g[blk[0]]] for blk in blocks) for g in self.generators
        ]
        return BlockSystem(tuple(tuple(b) for b in blocks), PermGroup(action))

    def fixed_point_ratio(self, x: Permutation) -> Fraction:
        if not self.contains(x):
            raise ValueError("element is not in the group")
        return Fraction(len(x.fixed_points()), self.degree)

    def conjugacy_fixed_point_ratio(self, x: Permutation, point: int = 0, cap: int = 5000) -> Fraction:
        """``|x^G ∩ G_point| / |x^G|``; equals the fixed-point ratio when transitive."""
        if not self.contains(x):
            raise ValueError("element is not in the group")
        cls = self.conjugacy_class(x, cap)
        return Fraction(sum(1 for y in cls if y[point] == point), len(cls))

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        gens = [Permutation.checked(g) for g in data["generators"]]
        if any(len(g) != data["degree"] for g in gens):
            raise ValueError("generator degree does not match declared degree")
        return cls(gens)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple[tuple[int, ...], ...]
    block_action: PermGroup

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def block_of(self, point: int) -> int:
        for i, blk in enumerate(self.blocks):
            if point in blk:
                return i
        raise ValueError(point)

    def is_trivial(self) -> bool:
        return len(self.blocks) == 1 or self.block_size == 1


@dataclass(frozen=True)
class ActionStats:
    fixed_points: dict
    fpr: dict
    regular_orbit_count: int


def action_stats(group: PermGroup, cap: int = ENUMERATION_CAP) -> ActionStats:
    fixed = {g: frozenset(g.fixed_points()) for g in group.elements(cap)}
    n = group.degree
    return ActionStats(
        fixed_points=fixed,
        fpr={g: Fraction(len(f), n) for g, f in fixed.items()},
        regular_orbit_count=group.regular_orbit_count(),
    )


def coset_action(group: PermGroup, sub: PermGroup, cap: int = ENUMERATION_CAP) -> PermGroup:
    """Action of ``group`` on the right cosets of ``sub`` by right multiplication."""
    sub_elems = sub.elements(cap)
    reps: dict[Permutation, int] = {}
    labels: list[Permutation] = []
    for g in group.elements(cap):
        key = min(h * g for h in sub_elems)
        if key not in reps:
            reps[key] = len(labels)
            labels.append(key)

    def label(g):
        return reps[min(h * g for h in sub_elems)]

    gens = [Permutation._raw(label(rep * x) for rep in labels) for x in group.generators]
    return PermGroup(gens)


def from_generators(gens: Sequence[Sequence[int]]) -> PermGroup:
    return PermGroup(gens)


# ---- chain construction ----------------------------------------------------


def _new_levels(n: int, gens: list[Permutation], base: list[int]) -> list[_Level]:
    base = list(dict.fromkeys(base))
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = []
    for i, b in enumerate(base):
        lev = _Level(b, [g for g in gens if all(g[c] == c for c in base[:i])])
        lev.extend_orbit(n)
        levels.append(lev)
    return levels


def _add_strong_generator(n: int, levels: list[_Level], h: Permutation, start: int, stop: int) -> None:
    if stop == len(levels):
        levels.append(_Level(_first_moved(h)))
    for lev in levels[start: stop + 1]:
        lev.gens.append(h)
        lev.extend_orbit(n)


def _schreier_sims(n: int, gens: list[Permutation], base: list[int]) -> list[_Level]:
    levels = _new_levels(n, gens, base)
    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        restart = False
        for beta in list(lev.trans):
            u = lev.trans[beta]
            for gi, x in enumerate(lev.gens):
                key = (beta, gi)
                if key in lev.checked:
                    continue
                gamma = x[beta]
                h = u * x * lev.inv[gamma]
                residue, j = _sift(levels, h, i + 1)
                if j < len(levels) or not residue.is_identity():
                    _add_strong_generator(n, levels, residue, i + 1, j)
                    i = j
                    restart = True
                    break
                lev.checked.add(key)
            if restart:
                break
        if not restart:
            i -= 1
    for lev in levels:
        lev.checked.clear()
    return levels


def _random_schreier_sims(
    n: int, gens: list[Permutation], base: list[int], known_order: int, seed: int
) -> list[_Level]:
    if not gens:
        if known_order != 1:
            raise ValueError("known order does not match the generators")
        return _new_levels(n, gens, base)
    levels = _new_levels(n, gens, base)
    rng = random.Random(seed)
    pool = list(gens) * max(1, (10 // len(gens)) + 1)
    acc = Permutation.identity(n)

    def current():
        return prod(len(lev.trans) for lev in levels)

    stall = 0
    while current() < known_order:
        a, b = rng.sample(range(len(pool)), 2)
        pool[a] = pool[a] * pool[b] if rng.random() < 0.5 else pool[b] * pool[a]
        acc = acc * pool[a]
        residue, j = _sift(levels, acc)
        if j < len(levels) or not residue.is_identity():
            _add_strong_generator(n, levels, residue, 0, j)
            stall = 0
        else:
            stall += 1
            if stall > 2000:
                # generators might not generate a group of that order
                levels = _schreier_sims(n, gens, base)
                break
    if current() != known_order:
        raise ValueError(
            f"generators give order {current()}, expected {known_order}"
        )
    return levels
