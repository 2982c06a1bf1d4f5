from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence


class Graph:
    """A simple undirected graph on vertices ``0..n-1`` with sorted neighbour lists."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, nbrs)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u]]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def valency(self) -> int | None:
        """Common degree, or ``None`` when the graph is not regular."""
        degs = {len(a) for a in self.adj}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def is_cubic(self) -> bool:
        return self.valency() == 3

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = _bisect(a, v)
        return i < len(a) and a[i] == v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        return all(self.has_edge(perm[u], perm[v]) for u, v in self.edges())

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u in vertices for v in self.adj[u] if v in index and u < v),
        )

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(data["n"], data["edges"])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges()})"


class Digraph:
    """A loopless digraph with sorted out-neighbour lists."""

    __slots__ = ("n", "out", "inn")

    def __init__(self, n: int, out: Sequence[Sequence[int]]):
        self.n = n
        self.out = tuple(tuple(sorted(set(a))) for a in out)
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, a in enumerate(self.out):
            for v in a:
                if u == v:
                    raise ValueError(f"loop at vertex {u}")
                inn[v].append(u)
        self.inn = tuple(tuple(sorted(a)) for a in inn)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
        out: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            out[u].add(v)
        return cls(n, out)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out[u]]

    def out_valency(self, v: int) -> int:
        return len(self.out[v])

    def in_valency(self, v: int) -> int:
        return len(self.inn[v])

    def has_arc(self, u: int, v: int) -> bool:
        a = self.out[u]
        i = _bisect(a, v)
        return i < len(a) and a[i] == v

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        return all(self.has_arc(perm[u], perm[v]) for u, v in self.arcs())

    def relabel(self, perm: Sequence[int]) -> Digraph:
        return Digraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.out == other.out

    def __hash__(self):
        return hash((self.n, self.out))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs())})"


def underlying(d: Digraph) -> Graph:
    return Graph.from_edges(d.n, d.arcs())


def _bisect(a: Sequence[int], x: int) -> int:
    lo, hi = 0, len(a)
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edges(n, edges)


# ---- metric properties --------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    d = bfs_distances(g, u)[v]
    return math.inf if d < 0 else d


def distance_matrix(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph | Digraph) -> bool:
    if isinstance(g, Digraph):
        g = underlying(g)
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def diameter(g: Graph) -> int | float:
    worst = 0
    for v in range(g.n):
        d = bfs_distances(g, v)
        if min(d) < 0:
            return math.inf
        worst = max(worst, max(d))
    return worst


def s_arcs(g: Graph, s: int, start: int | None = None) -> list[tuple[int, ...]]:
    """All s-arcs, optionally only those starting at ``start``."""
    out = []
    starts = range(g.n) if start is None else [start]

    def extend(path):
        if len(path) == s + 1:
            out.append(tuple(path))
            return
        last = path[-1]
        prev = path[-2] if len(path) > 1 else -1
        for v in g.adj[last]:
            if v != prev:
                path.append(v)
                extend(path)
                path.pop()

    for v in starts:
        extend([v])
    return out
