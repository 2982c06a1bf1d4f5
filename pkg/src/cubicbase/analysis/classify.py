"""Trichotomy classification of connected cubic vertex-transitive graphs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..constructions import TABLE1, split_px, table1_graph
from ..errors import CapExceeded, HypothesisError
from ..graphs import AUT_VERTEX_CAP, Graph, automorphism_group, is_connected, isomorphic
from ..permgroup import PermGroup
from .base import BASE_DEGREE_CAP, BASE_ORDER_CAP, base_size, has_base_le2

EXCEPTIONAL = "Exceptional"
SPLIT_PX = "SplitPX"
BASE_LE2 = "BaseSizeAtMost2"
# only emitted if a graph fits none of the three classes
UNEXPLAINED = "Unexplained"


@dataclass(frozen=True)
class Verdict:
    kind: str
    name: str | None = None
    r: int | None = None
    s: int | None = None
    witness: tuple[int, ...] | None = None

    def __str__(self):
        if self.kind == EXCEPTIONAL:
            return f"Exceptional({self.name})"
        if self.kind == SPLIT_PX:
            return f"SplitPX({self.r},{self.s})"
        if self.kind == BASE_LE2:
            return f"BaseSizeAtMost2({','.join(map(str, self.witness or ()))})"
        return self.kind


@dataclass
class ClassificationReport:
    verdict: Verdict
    base_size: int | None
    aut_order: int
    n: int
    witness: tuple[int, ...] | None
    graph: str = ""
    timings_ms: dict = field(default_factory=dict)

    def consistent(self) -> bool:
        """Exceptional or split-PX verdicts go with base size at least 3, the rest with at most 2."""
        big = self.verdict.kind in (EXCEPTIONAL, SPLIT_PX)
        if self.base_size is None:
            return big
        return big == (self.base_size >= 3)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "aut_order": str(self.aut_order),
            "verdict": str(self.verdict),
            "base_size": self.base_size,
            "witness": list(self.witness) if self.witness is not None else None,
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
        }


def split_px_parameters(n: int) -> list[tuple[int, int]]:
    """(r, s) with 2 r 2^s = n, r >= 3 and 1 <= s <= r-1, in (r, s) order."""
    out = []
    for s in range(1, n.bit_length() + 1):
        q, rem = divmod(n, 2 << s)
        if rem == 0 and q >= 3 and s <= q - 1:
            out.append((q, s))
    return sorted(out)


def is_split_px(g: Graph, *, cap: int = AUT_VERTEX_CAP) -> tuple[int, int] | None:
    """First (r, s) in increasing order with g isomorphic to sC(r, s)."""
    for r, s in split_px_parameters(g.n):
        if isomorphic(g, split_px(r, s), cap=cap):
            return (r, s)
    return None


def exceptional_name(g: Graph) -> str | None:
    for name, row in TABLE1.items():
        if row.vertices == g.n and isomorphic(g, table1_graph(name)):
            return name
    return None


def check_preconditions(g: Graph, group: PermGroup | None = None) -> str | None:
    """Reason the graph is outside the classifier's scope, or ``None``."""
    if g.n == 0:
        return "empty graph"
    if not g.is_cubic():
        return "not cubic"
    if not is_connected(g):
        return "not connected"
    if group is not None and not group.is_transitive():
        return "not vertex-transitive"
    return None


def classify(
    g: Graph,
    *,
    name: str = "",
    group: PermGroup | None = None,
    aut_cap: int = AUT_VERTEX_CAP,
    base_cap: int = BASE_DEGREE_CAP,
) -> ClassificationReport:
    timings = {}
    t0 = time.perf_counter()
    reason = check_preconditions(g)
    if reason:
        raise HypothesisError(reason)
    G = automorphism_group(g, cap=aut_cap) if group is None else group
    timings["aut"] = (time.perf_counter() - t0) * 1000
    if not G.is_transitive():
        raise HypothesisError("not vertex-transitive")

    t1 = time.perf_counter()
    pair = has_base_le2(G)
    timings["pair_scan"] = (time.perf_counter() - t1) * 1000

    t1 = time.perf_counter()
    verdict = None
    ex = exceptional_name(g)
    if ex is not None:
        verdict = Verdict(EXCEPTIONAL, name=ex)
    else:
        rs = is_split_px(g, cap=aut_cap)
        if rs is not None and 2 * rs[1] < rs[0]:
            verdict = Verdict(SPLIT_PX, r=rs[0], s=rs[1])
    timings["recognise"] = (time.perf_counter() - t1) * 1000

    t1 = time.perf_counter()
    if pair.found:
        witness = pair.witness
        if not G.pointwise_stabiliser(list(witness)).is_trivial():
            raise RuntimeError("pair witness failed re-validation")
        size = len(witness)
        if verdict is None:
            verdict = Verdict(BASE_LE2, witness=witness)
    else:
        try:
            res = base_size(G, degree_cap=base_cap, order_cap=BASE_ORDER_CAP)
            size, witness = res.size, res.witness
            if not G.pointwise_stabiliser(list(witness)).is_trivial():
                raise RuntimeError("base witness failed re-validation")
        except CapExceeded:
            size, witness = None, None
        if verdict is None:
            verdict = Verdict(UNEXPLAINED)
    timings["base"] = (time.perf_counter() - t1) * 1000
    timings["total"] = (time.perf_counter() - t0) * 1000
    return ClassificationReport(verdict, size, G.order(), g.n, witness, name, timings)
