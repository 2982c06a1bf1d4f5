"""Built-in verification suites: expected value against computed value for every check."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .analysis import (
    ExcludedGroup,
    abelian_pair,
    asymmetric_3colourings,
    asymmetric_set,
    aut_bound_holds,
    has_base_le2,
    is_split_px,
    star_check,
)
from .analysis.base import base_size
from .analysis.colourings import set_is_asymmetric
from .analysis.distinguishing import NOT_APPLICABLE, distinguishing_cost_witness, distinguishing_number
from .analysis.star import STAR_CAP, revalidate
from .constructions import (
    TABLE1,
    circular_ladder,
    merge,
    px_graph,
    px_groups,
    split_px,
    split_px_group,
    table1_graph,
)
from .corpus import PX_RANGE, corpus, random_transitive_groups, two_group_entries
from .errors import CapExceeded
from .graphs import automorphism_group, isomorphic
from .named_groups import alternating, exceptional_p64, pgl2, psl2, symmetric

SWEEP_AUT_CAP = 5000


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    expected: object
    computed: object
    holds: bool | None = None

    @property
    def passed(self) -> bool:
        """``holds`` overrides plain equality for inequality checks."""
        return self.expected == self.computed if self.holds is None else self.holds

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.suite}: {self.name}: expected {self.expected}, computed {self.computed}"


def table1_checks() -> Iterator[Check]:
    for name, row in TABLE1.items():
        g = table1_graph(name)
        G = automorphism_group(g)
        got = (g.n, G.order(), G.point_stabiliser(0).order(), base_size(G).size)
        want = (row.vertices, row.aut_order, row.stabiliser_order, row.base_size)
        yield Check("table1", f"{name} (|V|, |Aut|, |G_a|, base)", want, got)


@lru_cache(maxsize=None)
def _px_aut(r: int, s: int):
    return automorphism_group(px_graph(r, s), cap=SWEEP_AUT_CAP)


def px_order_checks() -> Iterator[Check]:
    for r, s in PX_RANGE:
        A = _px_aut(r, s)
        groups = px_groups(r, s)
        if r == 4:
            want = {1: 9, 2: 3, 3: 2}[s]
            yield Check("px-sweep", f"C({r},{s}) |H|", 128, groups.H.order())
            yield Check("px-sweep", f"C({r},{s}) |Aut| / |H|", want, Fraction(A.order(), groups.H.order()))
        else:
            yield Check("px-sweep", f"C({r},{s}) |Aut|", (2**r) * 2 * r, A.order())


def px_base_checks() -> Iterator[Check]:
    """Aut base <= 2 iff 2s > r (this covers (4,3), where Aut exceeds H), and K base >= 3 iff 2s < r."""
    for r, s in PX_RANGE:
        A = _px_aut(r, s)
        groups = px_groups(r, s)
        yield Check("px-sweep", f"C({r},{s}) Aut base <= 2", 2 * s > r, has_base_le2(A).found)
        yield Check("px-sweep", f"C({r},{s}) K base >= 3", 2 * s < r, not has_base_le2(groups.K).found)


def spx_sweep_checks() -> Iterator[Check]:
    for r, s in PX_RANGE:
        A = automorphism_group(split_px(r, s), cap=SWEEP_AUT_CAP)
        yield Check("spx-sweep", f"sC({r},{s}) base >= 3", 2 * s < r, not has_base_le2(A).found)


def splitmerge_checks() -> Iterator[Check]:
    for r, s in PX_RANGE:
        merged = merge(split_px(r, s), split_px_group(r, s))
        yield Check(
            "splitmerge", f"merge(split(C({r},{s}))) ~ C({r},{s})", True,
            isomorphic(merged, px_graph(r, s), cap=SWEEP_AUT_CAP),
        )


def star_cases():
    s5, s6, s8, a5 = symmetric(5), symmetric(6), symmetric(8), alternating(5)
    p7 = psl2(7)
    return [
        ("Sym(5), Sylow 2", s5, alternating(5), s5.sylow2(), False),
        ("PGL2(7), Sylow 2 of PSL2(7)", pgl2(7), p7, p7.sylow2(), False),
        ("Sym(6), Sylow 2", s6, alternating(6), s6.sylow2(), False),
        ("Sym(8), order-64 P", s8, alternating(8), exceptional_p64(), False),
        ("Alt(5), V4", a5, a5, a5.sylow2(), True),
    ]


def star_checks(cap: int = STAR_CAP) -> Iterator[Check]:
    for name, g, t, p, want in star_cases():
        w = star_check(g, t, p, cap=cap)
        yield Check("star", f"{name} satisfied", want, w.satisfied)
        yield Check("star", f"{name} has t with trivial intersection", True, w.trivial_intersections > 0)
        yield Check("star", f"{name} witness revalidates", True, revalidate(p, w))


def colouring_checks() -> Iterator[Check]:
    entries = two_group_entries()
    yield Check("colourings", "corpus size >= 50", True, len(entries) >= 50)
    for e in entries:
        G = e.group
        excluded = G.degree == 4 and G.order() == 8
        admissible = G.is_transitive() and G.nilpotency_class() <= 2
        if admissible:
            try:
                x = asymmetric_set(G)
                got = "set" if set_is_asymmetric(G, x) else "bad set"
            except ExcludedGroup:
                got = "excluded"
            yield Check("colourings", f"{e.name} asymmetric set", "excluded" if excluded else "set", got)
        cols = asymmetric_3colourings(G)
        yield Check("colourings", f"{e.name} three inequivalent asymmetric colourings", 3, len(cols))


def corollary_checks() -> Iterator[Check]:
    for e in corpus():
        g = e.graph
        G = automorphism_group(g, cap=SWEEP_AUT_CAP)
        yield Check("corollaries", f"{e.name} abelian two-point stabiliser", True, abelian_pair(G) is not None)
        if e.family == "spx" or is_split_px(g, cap=SWEEP_AUT_CAP):
            continue
        yield Check("corollaries", f"{e.name} |Aut|", f"<= {2 * g.n * g.n}", G.order(), aut_bound_holds(g, G))
        cost = distinguishing_cost_witness(G)
        if cost is NOT_APPLICABLE:
            continue
        yield Check("corollaries", f"{e.name} distinguishing cost", "<= 3", cost.cost, cost.cost <= 3)
    ladder = automorphism_group(circular_ladder(3))
    yield Check("corollaries", "ladder on 6 vertices (number, cost)", (2, 3),
                (distinguishing_number(ladder), distinguishing_cost_witness(ladder).cost))
    s61 = automorphism_group(split_px(6, 1))
    cost = distinguishing_cost_witness(s61)
    yield Check("corollaries", "sC(6,1) distinguishing cost", "> 3", cost.cost, cost.cost > 3)


def fpr_checks(count: int = 20, seed: int = 0) -> Iterator[Check]:
    """The two fixed-point-ratio expressions agree on every small conjugacy class."""
    for e in random_transitive_groups(count, seed):
        G = e.group
        seen = set()
        bad = 0
        classes = 0
        for x in G.elements():
            if x in seen:
                continue
            try:
                cls = G.conjugacy_class(x, 5000)
            except CapExceeded:
                seen.add(x)
                continue
            seen.update(cls)
            classes += 1
            if G.fixed_point_ratio(x) != G.conjugacy_fixed_point_ratio(x, 0, 5000):
                bad += 1
        yield Check("fpr", f"{e.name} ({classes} classes)", 0, bad)


def px_sweep_checks() -> Iterator[Check]:
    yield from px_order_checks()
    yield from px_base_checks()


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "table1": table1_checks,
    "px-sweep": px_sweep_checks,
    "spx-sweep": spx_sweep_checks,
    "splitmerge": splitmerge_checks,
    "star": star_checks,
    "colourings": colouring_checks,
    "corollaries": corollary_checks,
}


def run(suite: str, emit: Callable[[str], None] = print, star_cap: int = STAR_CAP) -> bool:
    """Run one suite (or ``all``), emitting a line per check; True when every check passes."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    names = list(SUITES) if suite == "all" else [suite]
    ok = True
    for name in names:
        t0 = time.perf_counter()
        passed = failed = 0
        checks = SUITES[name](star_cap) if name == "star" else SUITES[name]()
        for check in checks:
            emit(check.line())
            if check.passed:
                passed += 1
            else:
                failed += 1
        ok = ok and failed == 0
        emit(f"== {name}: {passed} passed, {failed} failed ({time.perf_counter() - t0:.1f}s)")
    return ok


__all__ = ["Check", "SUITES", "fpr_checks", "run", "star_cases"]
