"""Distinguishing number and distinguishing cost of graphs (or of permutation groups)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import CapExceeded
from ..graphs import Graph, automorphism_group
from ..permgroup import PermGroup

DIST_ELEMENT_CAP = 10**5
COLOURING_SCAN_CAP = 3 * 10**6
_CHUNK = 4 * 10**6


class _NotApplicable:
    """Marker for a cost query on a graph that needs more than two colours."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NOT_APPLICABLE"

    def __bool__(self):
        return False


NOT_APPLICABLE = _NotApplicable()


def _group(g, group):
    if isinstance(g, PermGroup):
        return g
    return automorphism_group(g) if group is None else group


def _nonidentity(group: PermGroup, cap: int) -> np.ndarray:
    elems = [e for e in group.elements(cap) if not e.is_identity()]
    if not elems:
        return np.zeros((0, group.degree), dtype=np.int64)
    return np.array(elems, dtype=np.int64)


def _good_subsets(E: np.ndarray, combos: np.ndarray) -> np.ndarray:
    """Mask of subsets (rows of ``combos``, sorted) whose setwise stabiliser is trivial."""
    m, k = E.shape[0], combos.shape[1]
    out = np.ones(len(combos), dtype=bool)
    if m == 0:
        return out
    step = max(1, _CHUNK // max(1, m * k))
    for lo in range(0, len(combos), step):
        c = combos[lo: lo + step]
        img = np.sort(E[:, c], axis=2)
        kept = (img == c[None]).all(axis=2)
        out[lo: lo + step] = ~kept.any(axis=0)
    return out


def _combos(n: int, k: int, must: int | None) -> np.ndarray:
    if must is None:
        it = itertools.combinations(range(n), k)
        return np.array(list(it), dtype=np.int64).reshape(-1, k)
    rest = [v for v in range(n) if v != must]
    rows = [tuple(sorted((must,) + c)) for c in itertools.combinations(rest, k - 1)]
    return np.array(rows, dtype=np.int64).reshape(-1, k)


@dataclass(frozen=True)
class CostResult:
    cost: int
    witness: tuple[int, ...]


def min_asymmetric_subset(group: PermGroup, max_size: int | None = None, cap: int = DIST_ELEMENT_CAP):
    """Smallest X with trivial setwise stabiliser, searched by size; ``None`` if none up to ``max_size``.

    For a transitive group X may be assumed to contain point 0.
    """
    n = group.degree
    if group.is_trivial():
        return ()
    E = _nonidentity(group, cap)
    must = 0 if group.is_transitive() else None
    top = n if max_size is None else min(n, max_size)
    for k in range(1, top + 1):
        combos = _combos(n, k, must)
        if len(combos) == 0:
            continue
        good = np.flatnonzero(_good_subsets(E, combos))
        if len(good):
            return tuple(int(v) for v in combos[good[0]])
    return None


def distinguishing_colouring(group: PermGroup, d: int, cap: int = DIST_ELEMENT_CAP):
    """A colouring with ``d`` colours fixed by no nonidentity element, or ``None``."""
    n = group.degree
    if d ** n > COLOURING_SCAN_CAP:
        raise CapExceeded(f"{d}^{n} colourings exceed the scan cap")
    E = _nonidentity(group, cap)
    if len(E) == 0:
        return (0,) * n
    total = d ** n
    step = max(1, _CHUNK // (len(E) * n))
    powers = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for lo in range(0, total, step):
        codes = np.arange(lo, min(total, lo + step), dtype=np.int64)
        cols = (codes[:, None] // powers[None, :]) % d
        same = (cols[:, E] == cols[:, None, :]).all(axis=2)
        ok = np.flatnonzero(~same.any(axis=1))
        if len(ok):
            return tuple(int(c) for c in cols[ok[0]])
    return None


def distinguishing_number(g: Graph | PermGroup, group: PermGroup | None = None, cap: int = DIST_ELEMENT_CAP) -> int:
    G = _group(g, group)
    if G.is_trivial():
        return 1
    if min_asymmetric_subset(G, max_size=G.degree // 2, cap=cap) is not None:
        return 2
    d = 3
    while distinguishing_colouring(G, d, cap) is None:
        d += 1
    return d


def distinguishing_cost(g: Graph | PermGroup, group: PermGroup | None = None, cap: int = DIST_ELEMENT_CAP):
    """Smallest colour class over distinguishing 2-colourings.

    Returns ``NOT_APPLICABLE`` when two colours do not suffice, and 0 for
    asymmetric graphs (a single colour already distinguishes).
    """
    res = distinguishing_cost_witness(g, group, cap)
    return res if res is NOT_APPLICABLE else res.cost


def distinguishing_cost_witness(g, group=None, cap: int = DIST_ELEMENT_CAP):
    G = _group(g, group)
    if G.is_trivial():
        return CostResult(0, ())
    x = min_asymmetric_subset(G, max_size=G.degree // 2, cap=cap)
    if x is None:
        return NOT_APPLICABLE
    return CostResult(len(x), x)


def has_distinguishing_set_of_size(group: PermGroup, k: int, cap: int = DIST_ELEMENT_CAP):
    """Some X with |X| = k and trivial setwise stabiliser, or ``None``."""
    E = _nonidentity(group, cap)
    combos = _combos(group.degree, k, 0 if group.is_transitive() else None)
    good = np.flatnonzero(_good_subsets(E, combos))
    return tuple(int(v) for v in combos[good[0]]) if len(good) else None
