"""Automorphisms and isomorphisms by colour refinement and individualisation.

The refinement is 1-dimensional Weisfeiler-Leman: a vertex's new colour is the
rank of (old colour, sorted multiset of neighbour colours) among all such
signatures.  Ranks depend only on isomorphism-invariant data, so two
isomorphic coloured structures refine to corresponding colourings, and the
per-round signature tables are an invariant that prunes the search.

Target cell: the smallest non-singleton colour class, lowest colour first.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from math import prod
from typing import Sequence

import numpy as np

from ..errors import CapExceeded
from ..perm import Permutation
from ..permgroup import PermGroup
from .core import Digraph, Graph

AUT_VERTEX_CAP = 2000


def _padded(lists: Sequence[Sequence[int]], n: int) -> np.ndarray:
    width = max((len(a) for a in lists), default=0)
    arr = np.full((n, max(width, 1)), n, dtype=np.int64)
    for i, a in enumerate(lists):
        arr[i, : len(a)] = a
    return arr


class _Structure:
    """Adjacency data prepared for refinement."""

    def __init__(self, g: Graph | Digraph, colours: Sequence[int] | None = None):
        self.n = g.n
        if isinstance(g, Digraph):
            self.out = _padded(g.out, g.n)
            self.inn = _padded(g.inn, g.n)
            arcs = g.arcs()
        else:
            self.out = _padded(g.adj, g.n)
            self.inn = None
            arcs = g.arcs()
        a = np.array(arcs, dtype=np.int64).reshape(-1, 2)
        self.tails = a[:, 0]
        self.heads = a[:, 1]
        self.codes = np.sort(self.tails * self.n + self.heads)
        if colours is None:
            self.initial = np.zeros(self.n, dtype=np.int64)
        else:
            self.initial = np.asarray(colours, dtype=np.int64)

    def refine(self, col: np.ndarray, reference: list | None = None):
        """Stable refinement of ``col``; ``None`` if the trace departs from ``reference``."""
        _, col = np.unique(col, return_inverse=True)
        col = col.reshape(-1)
        k = int(col.max()) + 1 if len(col) else 0
        trace = []
        rnd = 0
        while True:
            ext = np.append(col, -1)
            parts = [col[:, None], np.sort(ext[self.out], axis=1)]
            if self.inn is not None:
                parts.append(np.sort(ext[self.inn], axis=1))
            sig = np.hstack(parts)
            uniq, inv = np.unique(sig, axis=0, return_inverse=True)
            if reference is not None:
                if rnd >= len(reference) or not np.array_equal(uniq, reference[rnd]):
                    return None, None
            trace.append(uniq)
            rnd += 1
            if len(uniq) == k:
                if reference is not None and rnd != len(reference):
                    return None, None
                return col, trace
            col = inv.reshape(-1)
            k = len(uniq)

    @staticmethod
    def individualise(col: np.ndarray, v: int) -> np.ndarray:
        out = col * 2
        out[v] += 1
        return out

    @staticmethod
    def target_cell(col: np.ndarray) -> int | None:
        counts = np.bincount(col)
        multi = np.flatnonzero(counts > 1)
        if len(multi) == 0:
            return None
        sizes = counts[multi]
        return int(multi[np.argmin(sizes)])

    def maps_into(self, other: _Structure, g: np.ndarray) -> bool:
        codes = np.sort(g[self.tails] * other.n + g[self.heads])
        return np.array_equal(codes, other.codes)


@dataclass
class _Node:
    col: np.ndarray
    trace: list
    cell_colour: int | None = None
    vertex: int | None = None


def _first_path(s: _Structure) -> list[_Node]:
    col, trace = s.refine(s.initial)
    nodes = [_Node(col, trace)]
    while True:
        node = nodes[-1]
        c = s.target_cell(node.col)
        if c is None:
            return nodes
        v = int(np.flatnonzero(node.col == c)[0])
        node.cell_colour = c
        node.vertex = v
        col, trace = s.refine(s.individualise(node.col, v))
        nodes.append(_Node(col, trace))


def _match(src: _Structure, nodes: list[_Node], dst: _Structure, col: np.ndarray, level: int):
    """Find a leaf below ``col`` in ``dst`` whose labelling maps ``src``'s first leaf onto it."""
    if level == len(nodes) - 1:
        leaf_src = nodes[-1].col
        pos = np.empty(dst.n, dtype=np.int64)
        pos[col] = np.arange(dst.n)
        g = pos[leaf_src]
        return g if src.maps_into(dst, g) else None
    c = nodes[level].cell_colour
    ref = nodes[level + 1].trace
    for u in np.flatnonzero(col == c):
        child, _ = dst.refine(dst.individualise(col, int(u)), ref)
        if child is None:
            continue
        g = _match(src, nodes, dst, child, level + 1)
        if g is not None:
            return g
    return None


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]


@dataclass
class AutomorphismResult:
    generators: list[Permutation]
    base: list[int]
    orbit_lengths: list[int]

    @property
    def order(self) -> int:
        return prod(self.orbit_lengths)


def automorphism_search(g: Graph | Digraph, colours: Sequence[int] | None = None) -> AutomorphismResult:
    """Generators, base and basic orbit lengths of the colour-preserving automorphisms."""
    s = _Structure(g, colours)
    nodes = _first_path(s)
    uf = _UnionFind(s.n)
    gens: list[Permutation] = []
    lengths = []
    for i in range(len(nodes) - 2, -1, -1):
        node = nodes[i]
        v = node.vertex
        for w in np.flatnonzero(node.col == node.cell_colour):
            w = int(w)
            if uf.find(w) == uf.find(v):
                continue
            child, _ = s.refine(s.individualise(node.col, w), nodes[i + 1].trace)
            if child is None:
                continue
            perm = _match(s, nodes, s, child, i + 1)
            if perm is None:
                continue
            p = Permutation._raw(perm.tolist())
            gens.append(p)
            for a, b in enumerate(p):
                uf.union(a, b)
        lengths.append(uf.size[uf.find(v)])
    lengths.reverse()
    base = [node.vertex for node in nodes[:-1]]
    return AutomorphismResult(gens, base, lengths)


def _seed() -> int:
    return int(os.environ.get("CUBICBASE_SEED", "0"))


def automorphism_group(
    g: Graph | Digraph,
    *,
    cap: int = AUT_VERTEX_CAP,
    colours: Sequence[int] | None = None,
    check_relabelled: bool = True,
) -> PermGroup:
    """``Aut(g)`` as a permutation group on the vertices.

    Every generator is checked to preserve adjacency, the chain is verified by
    deterministic Schreier-Sims, and unless disabled the order is recomputed on
    a randomly relabelled copy; any disagreement raises ``RuntimeError``.
    """
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the automorphism cap {cap}")
    if g.n == 0:
        raise ValueError("empty graph")
    res = automorphism_search(g, colours)
    for p in res.generators:
        if not g.is_automorphism(p):
            raise RuntimeError("search produced a non-automorphism")
        if colours is not None and any(colours[p[v]] != colours[v] for v in range(g.n)):
            raise RuntimeError("search produced a colour-changing map")
    gens = res.generators or [Permutation.identity(g.n)]
    group = PermGroup(gens, base=res.base)
    if group.order() != res.order:
        raise RuntimeError(f"chain order {group.order()} != search order {res.order}")
    if check_relabelled:
        rng = random.Random(_seed() * 1_000_003 + g.n)
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled_colours = None
        if colours is not None:
            shuffled_colours = [0] * g.n
            for v in range(g.n):
                shuffled_colours[perm[v]] = colours[v]
        other = automorphism_search(g.relabel(perm), shuffled_colours)
        if other.order != res.order:
            raise RuntimeError(
                f"automorphism group order changed under relabelling: {res.order} vs {other.order}"
            )
    return group


def isomorphism(g1: Graph | Digraph, g2: Graph | Digraph, *, cap: int = AUT_VERTEX_CAP):
    """A vertex map ``m`` with ``m[u] ~ m[v]`` iff ``u ~ v``, or ``None``."""
    if type(g1) is not type(g2) or g1.n != g2.n:
        return None
    if max(g1.n, g2.n) > cap:
        raise CapExceeded(f"graphs exceed the isomorphism cap {cap}")
    s1, s2 = _Structure(g1), _Structure(g2)
    if len(s1.codes) != len(s2.codes):
        return None
    if g1.n == 0:
        return Permutation.identity(1)[:0]
    nodes = _first_path(s1)
    col, _ = s2.refine(s2.initial, nodes[0].trace)
    if col is None:
        return None
    g = _match(s1, nodes, s2, col, 0)
    if g is None:
        return None
    return Permutation._raw(g.tolist())


def isomorphic(g1: Graph | Digraph, g2: Graph | Digraph, *, cap: int = AUT_VERTEX_CAP) -> bool:
    return isomorphism(g1, g2, cap=cap) is not None
