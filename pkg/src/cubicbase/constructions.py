"""Praeger-Xu graphs, splits and merges, ladders and the exceptional cubic graphs.

Vertices of C(r, s) are pairs (x; e0 e1 ... e_{s-1}) with x in Z_r and a binary
word of length s, numbered lexicographically: index = x * 2**s + int(word, 2),
with e0 the most significant bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import DegenerateMerge, HypothesisError
from .graphs import Digraph, Graph, automorphism_group, is_connected
from .perm import Permutation
from .permgroup import PermGroup


class PXVertex(NamedTuple):
    x: int
    word: str


def _check_rs(r: int, s: int):
    if not (isinstance(r, int) and isinstance(s, int)):
        raise TypeError("r and s must be integers")
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if not 1 <= s <= r - 1:
        raise ValueError(f"s must satisfy 1 <= s <= r-1, got s={s} for r={r}")


def px_vertex_index(r: int, s: int, x: int, word: str) -> int:
    if len(word) != s:
        raise ValueError(f"word {word!r} has length {len(word)}, expected {s}")
    return (x % r) * (1 << s) + int(word, 2)


def px_vertices(r: int, s: int) -> list[PXVertex]:
    _check_rs(r, s)
    return [PXVertex(x, format(w, f"0{s}b")) for x in range(r) for w in range(1 << s)]


def px_digraph(r: int, s: int) -> Digraph:
    _check_rs(r, s)
    m = 1 << s
    low = (1 << (s - 1)) - 1
    out = []
    for x in range(r):
        nxt = ((x + 1) % r) * m
        for w in range(m):
            h = w & low
            out.append([nxt + (h << 1), nxt + (h << 1) + 1])
    return Digraph(r * m, out)


def px_graph(r: int, s: int) -> Graph:
    d = px_digraph(r, s)
    return Graph.from_edges(d.n, d.arcs())


class PXGenerators(NamedTuple):
    tau: list[Permutation]
    rho: Permutation
    sigma: Permutation


def px_generators(r: int, s: int) -> PXGenerators:
    """The natural lifts of tau_i, rho and sigma from C(r,1) to C(r,s)."""
    _check_rs(r, s)
    m = 1 << s
    n = r * m
    tau = []
    for i in range(r):
        img = list(range(n))
        for x in range(r):
            j = (i - x) % r
            if j < s:
                bit = 1 << (s - 1 - j)
                for w in range(m):
                    img[x * m + w] = x * m + (w ^ bit)
        tau.append(Permutation._raw(img))
    rho = Permutation._raw((v + m) % n for v in range(n))
    sigma = []
    for x in range(r):
        y = (-x - s + 1) % r
        for w in range(m):
            rev = int(format(w, f"0{s}b")[::-1], 2)
            sigma.append(y * m + rev)
    return PXGenerators(tau, rho, Permutation._raw(sigma))


class PXGroups(NamedTuple):
    K: PermGroup
    H_plus: PermGroup
    H: PermGroup


def px_groups(r: int, s: int) -> PXGroups:
    """K = <tau_i>, H+ = K : <rho> and H = K : <rho, sigma> acting on V C(r,s)."""
    gens = px_generators(r, s)
    return PXGroups(
        PermGroup(gens.tau),
        PermGroup(gens.tau + [gens.rho]),
        PermGroup(gens.tau + [gens.rho, gens.sigma]),
    )


# ---- cycle decompositions, split, merge ---------------------------------


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles (as vertex sequences) partitioning the edge set of a graph."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        for c in self.cycles:
            if len(c) < 3 or len(set(c)) != len(c):
                raise ValueError(f"not a cycle: {c}")

    def cycle_edges(self, i: int) -> list[frozenset]:
        c = self.cycles[i]
        return [frozenset((c[j], c[(j + 1) % len(c)])) for j in range(len(c))]

    def edge_index(self) -> dict[frozenset, int]:
        out = {}
        for i in range(len(self.cycles)):
            for e in self.cycle_edges(i):
                if e in out:
                    raise ValueError(f"edge {sorted(e)} lies on two cycles")
                out[e] = i
        return out

    def validate(self, g: Graph):
        idx = self.edge_index()
        edges = {frozenset(e) for e in g.edges()}
        if set(idx) != edges:
            raise ValueError("cycles do not partition the edge set")

    def is_invariant(self, perm: Sequence[int]) -> bool:
        keys = {frozenset(self.cycle_edges(i)) for i in range(len(self.cycles))}
        for i in range(len(self.cycles)):
            img = frozenset(frozenset(perm[v] for v in e) for e in self.cycle_edges(i))
            if img not in keys:
                return False
        return True

    def image_index(self, perm: Sequence[int]) -> list[int]:
        """Index of the image of each cycle under ``perm``."""
        idx = self.edge_index()
        out = []
        for i in range(len(self.cycles)):
            c = self.cycles[i]
            out.append(idx[frozenset((perm[c[0]], perm[c[1]]))])
        return out


def canonical_px_decomposition(r: int, s: int) -> CycleDecomposition:
    """The 4-cycles (x;0h) (x+1;h0) (x;1h) (x+1;h1) over x in Z_r and words h of length s-1."""
    _check_rs(r, s)
    m = 1 << s
    half = 1 << (s - 1)
    cycles = []
    for x in range(r):
        a = x * m
        b = ((x + 1) % r) * m
        for h in range(half):
            cycles.append((a + h, b + (h << 1), a + half + h, b + (h << 1) + 1))
    return CycleDecomposition(tuple(cycles))


def split_labels(delta: Graph, decomposition: CycleDecomposition) -> list[tuple[int, int]]:
    """Vertices (alpha, cycle index) of the split, in the order used for numbering."""
    labels = set()
    for i, c in enumerate(decomposition.cycles):
        for v in c:
            labels.add((v, i))
    return sorted(labels)


def split(delta: Graph, decomposition: CycleDecomposition) -> Graph:
    if delta.valency() != 4:
        raise ValueError("split needs a 4-valent graph")
    decomposition.validate(delta)
    labels = split_labels(delta, decomposition)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    by_vertex: dict[int, list[int]] = {}
    for (v, c), i in index.items():
        by_vertex.setdefault(v, []).append(i)
    for v, ids in by_vertex.items():
        if len(ids) != 2:
            raise ValueError(f"vertex {v} lies on {len(ids)} cycles, expected 2")
        edges.append(tuple(ids))
    for ci in range(len(decomposition.cycles)):
        for e in decomposition.cycle_edges(ci):
            u, v = tuple(e)
            edges.append((index[(u, ci)], index[(v, ci)]))
    g = Graph.from_edges(len(labels), edges)
    if not g.is_cubic():
        raise ValueError("split is not cubic; decomposition is malformed")
    return g


def lift_to_split(perm: Sequence[int], delta: Graph, decomposition: CycleDecomposition) -> Permutation:
    """Action on split vertices of an automorphism of ``delta`` preserving the decomposition."""
    labels = split_labels(delta, decomposition)
    index = {lab: i for i, lab in enumerate(labels)}
    cimg = decomposition.image_index(perm)
    return Permutation._raw(index[(perm[v], cimg[c])] for v, c in labels)


def split_px(r: int, s: int) -> Graph:
    return split(px_graph(r, s), canonical_px_decomposition(r, s))


def split_px_group(r: int, s: int) -> PermGroup:
    """H acting on the vertices of sC(r,s)."""
    delta = px_graph(r, s)
    dec = canonical_px_decomposition(r, s)
    gens = px_generators(r, s)
    lifted = [lift_to_split(g, delta, dec) for g in gens.tau + [gens.rho, gens.sigma]]
    return PermGroup(lifted)


def merge_matching(gamma: Graph, group: PermGroup) -> list[int]:
    """Partner of each vertex: the unique neighbour fixed by its stabiliser in ``group``."""
    from .graphs.symmetry import is_arc_transitive_under

    if not gamma.is_cubic():
        raise ValueError("merge needs a cubic graph")
    if not is_connected(gamma):
        raise ValueError("merge needs a connected graph")
    for g in group.generators:
        if not gamma.is_automorphism(g):
            raise ValueError("group does not act by automorphisms")
    if not group.is_transitive():
        raise HypothesisError("group is not vertex-transitive")
    if is_arc_transitive_under(gamma, group):
        raise HypothesisError("group is arc-transitive")
    stab0 = group.point_stabiliser(0)
    reps = group.transversal_map(0)
    partner = []
    for v in range(gamma.n):
        t = reps[v]
        gens = [h ** t for h in stab0.strong_generators]
        fixed = [w for w in gamma.adj[v] if all(h[w] == w for h in gens)]
        if len(fixed) != 1:
            raise HypothesisError(f"stabiliser of {v} fixes {len(fixed)} neighbours, expected 1")
        partner.append(fixed[0])
    for v, w in enumerate(partner):
        if partner[w] != v:
            raise HypothesisError("fixed-neighbour relation is not a matching")
    return partner


def merge(gamma: Graph, group: PermGroup) -> Graph:
    """Contract the invariant perfect matching of a cubic graph."""
    partner = merge_matching(gamma, group)
    pairs = sorted({(min(v, w), max(v, w)) for v, w in enumerate(partner)})
    index = {}
    for i, (a, b) in enumerate(pairs):
        index[a] = index[b] = i
    seen = set()
    edges = []
    for u, v in gamma.edges():
        if partner[u] == v:
            continue
        e = (min(index[u], index[v]), max(index[u], index[v]))
        if e[0] == e[1] or e in seen:
            raise DegenerateMerge("contraction creates a loop or a parallel edge")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(len(pairs), edges)


# ---- ladders ----------------------------------------------------------


def circular_ladder(n: int) -> Graph:
    """Cay(Z_n x Z_2, {(0,1), (1,0), (-1,0)}), vertex (i, j) numbered 2i + j."""
    if n < 3:
        raise ValueError(f"circular ladder needs n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges.append((2 * i, 2 * i + 1))
        for j in (0, 1):
            edges.append((2 * i + j, 2 * ((i + 1) % n) + j))
    return Graph.from_edges(2 * n, edges)


def moebius_ladder(n: int) -> Graph:
    """Cay(Z_2n, {1, -1, n})."""
    if n < 2:
        raise ValueError(f"Moebius ladder needs n >= 2, got {n}")
    m = 2 * n
    edges = [(i, (i + 1) % m) for i in range(m)] + [(i, i + n) for i in range(n)]
    return Graph.from_edges(m, edges)


def cayley_graph(elements: Sequence, connection: Sequence, mul) -> Graph:
    """Cayley graph with x ~ s*x for s in the (inverse-closed) connection set."""
    index = {e: i for i, e in enumerate(elements)}
    edges = []
    for e in elements:
        for c in connection:
            f = mul(c, e)
            if f != e:
                edges.append((index[e], index[f]))
    return Graph.from_edges(len(elements), edges)


def dihedral_cayley_cubic(n: int, a: int = 1) -> Graph:
    """Cubic Cayley graph of the dihedral group of order 2n on three reflections.

    Elements are pairs (k, f) standing for r^k s^f; the connection set is
    {s, r s, r^a s}.
    """
    elements = [(k, f) for f in (0, 1) for k in range(n)]

    def mul(x, y):
        k1, f1 = x
        k2, f2 = y
        return ((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)

    return cayley_graph(elements, [(0, 1), (1, 1), (a % n, 1)], mul)


# ---- the exceptional graphs ---------------------------------------------


def lcf_graph(code: Sequence[int], repeats: int) -> Graph:
    c = list(code) * repeats
    n = len(c)
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, (i + c[i]) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def kneser_graph(n: int, k: int) -> Graph:
    subsets = list(itertools.combinations(range(n), k))
    edges = [
        (i, j)
        for i, a in enumerate(subsets)
        for j, b in enumerate(subsets)
        if i < j and not set(a) & set(b)
    ]
    return Graph.from_edges(len(subsets), edges)


def cube_graph() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)])


class Table1Row(NamedTuple):
    name: str
    vertices: int
    aut_order: int
    stabiliser_order: int
    base_size: int


TABLE1 = {
    row.name: row
    for row in [
        Table1Row("K4", 4, 24, 6, 3),
        Table1Row("K3_3", 6, 72, 12, 4),
        Table1Row("Cube", 8, 48, 6, 3),
        Table1Row("Petersen", 10, 120, 12, 3),
        Table1Row("Heawood", 14, 336, 24, 3),
        Table1Row("Pappus", 18, 216, 12, 3),
        Table1Row("Desargues", 20, 240, 12, 3),
        Table1Row("TutteCoxeter", 30, 1440, 48, 3),
        Table1Row("Foster", 90, 4320, 48, 3),
    ]
}

_LCF = {
    "Heawood": ([5, -5], 7),
    "Pappus": ([5, 7, -7, 7, -7, -5], 3),
    "Desargues": ([5, -5, 9, -9], 5),
    "TutteCoxeter": ([-13, -9, 7, -7, 9, 13], 5),
    "Foster": ([17, -9, 37, -37, 9, -17], 15),
}


def _build_table1(name: str) -> Graph:
    if name == "K4":
        return Graph.from_edges(4, itertools.combinations(range(4), 2))
    if name == "K3_3":
        return Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    if name == "Cube":
        return cube_graph()
    if name == "Petersen":
        return kneser_graph(5, 2)
    code, reps = _LCF[name]
    return lcf_graph(code, reps)


@lru_cache(maxsize=None)
def table1_graph(name: str) -> Graph:
    """One of the nine exceptional graphs, checked against its vertex count and |Aut|."""
    if name not in TABLE1:
        raise KeyError(f"unknown exceptional graph {name!r}; choose from {sorted(TABLE1)}")
    g = _build_table1(name)
    row = TABLE1[name]
    if g.n != row.vertices or not g.is_cubic():
        raise RuntimeError(f"construction of {name} has {g.n} vertices, expected {row.vertices}")
    order = automorphism_group(g).order()
    if order != row.aut_order:
        raise RuntimeError(f"construction of {name} has |Aut| = {order}, expected {row.aut_order}")
    return g


def table1_names() -> list[str]:
    return list(TABLE1)
