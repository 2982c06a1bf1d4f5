"""graph6 / sparse6 text encodings (via networkx) and JSON adjacency."""

from __future__ import annotations

import json
from typing import Iterator

import networkx as nx

from .core import Graph

_HEADERS = (b">>graph6<<", b">>sparse6<<")


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    if any(u == v for u, v in h.edges()):
        raise ValueError("encoded graph has a loop")
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(_to_nx(g), header=False).decode("ascii").strip()


def to_sparse6(g: Graph) -> str:
    return nx.to_sparse6_bytes(_to_nx(g), header=False).decode("ascii").strip()


def encode(g: Graph, fmt: str = "auto") -> str:
    """Sparse6 for sparse graphs when ``fmt`` is auto, graph6 otherwise."""
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "sparse6":
        return to_sparse6(g)
    if fmt != "auto":
        raise ValueError(f"unknown format {fmt!r}")
    return to_sparse6(g) if g.num_edges() * 8 < g.n * g.n else to_graph6(g)


def decode(line: str | bytes) -> Graph:
    """Parse one graph6 or sparse6 string (format picked by the leading ':')."""
    data = line.encode("ascii") if isinstance(line, str) else line
    data = data.strip()
    for head in _HEADERS:
        if data.startswith(head):
            data = data[len(head):]
    if not data:
        raise ValueError("empty encoding")
    try:
        if data.startswith(b":"):
            h = nx.from_sparse6_bytes(data)
        else:
            h = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise ValueError(f"bad encoding: {exc}") from None
    if h.is_multigraph():
        if h.number_of_edges() != nx.Graph(h).number_of_edges():
            raise ValueError("encoded graph has parallel edges")
        h = nx.Graph(h)
    return _from_nx(h)


def read_lines(path: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, text) for each non-blank line of a census file."""
    with open(path, "r", encoding="ascii") as fh:
        for i, line in enumerate(fh, 1):
            text = line.strip()
            if text:
                yield i, text


def to_json(g: Graph) -> str:
    return json.dumps(g.to_json(), separators=(",", ":"))


def from_json(text: str) -> Graph:
    return Graph.from_json(json.loads(text))
