"""Permutations of {0, ..., n-1} acting on the right.

A permutation ``p`` sends point ``i`` to ``p[i]``.  Products follow the right
action convention used throughout the package: ``i^(p*q) = (i^p)^q``, so
``(p * q)[i] == q[p[i]]``.  Conjugation is ``p ** g == g^-1 * p * g``.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence


class Permutation(tuple):
    """An immutable permutation stored as its tuple of images."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        self = tuple.__new__(cls, images)
        if not self:
            raise ValueError("degree-0 permutations are not allowed")
        return self

    @classmethod
    def _raw(cls, images: Iterable[int]) -> Permutation:
        # unchecked constructor for hot paths
        return tuple.__new__(cls, images)

    @classmethod
    def checked(cls, images: Sequence[int]) -> Permutation:
        p = cls(images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation: {list(images)!r}")
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._raw(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for a in cycle:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle {cycle!r} for degree {n}")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Permutation._raw(map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return other.inverse() * self * other
        k = int(other)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, point: int) -> int:
        return self[point]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self) if i == j]

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self) if i != j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                continue
            cycle = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def commutator(self, other: Permutation) -> Permutation:
        """``[x, g] = x^-1 * x^g``."""
        return self.inverse() * (self ** other)

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{len(self)}>{cyc or '()'}"

    def to_json(self) -> list[int]:
        return list(self)


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return Permutation(p) * Permutation(q)


def inverse(p: Permutation) -> Permutation:
    return Permutation(p).inverse()
