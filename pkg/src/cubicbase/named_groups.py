"""Small permutation groups used as test subjects and in the exceptional pairs."""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .perm import Permutation
from .permgroup import PermGroup


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.trivial(1)
    if n == 2:
        return PermGroup([[1, 0]])
    return PermGroup([Permutation.from_cycles(n, [(0, 1)]), Permutation.from_cycles(n, [tuple(range(n))])])


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup.trivial(n)
    gens = [Permutation.from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return PermGroup(gens)


def cyclic(n: int) -> PermGroup:
    """Regular cyclic group on n points."""
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n, acting on its n vertices."""
    if n < 3:
        raise ValueError("dihedral action needs n >= 3")
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, ref])


def klein_four_in_a5() -> PermGroup:
    return PermGroup([Permutation.from_cycles(5, [(0, 1), (2, 3)]), Permutation.from_cycles(5, [(0, 2), (1, 3)])])


def regular_representation(elements: Sequence, mul: Callable, generators: Sequence) -> PermGroup:
    """Right regular action of an abstract group given by its element list."""
    index = {e: i for i, e in enumerate(elements)}
    gens = [Permutation([index[mul(e, g)] for e in elements]) for g in generators]
    return PermGroup(gens)


def abelian_regular(orders: Sequence[int]) -> PermGroup:
    """Regular action of Z_{m1} x ... x Z_{mk} on itself."""
    elements = list(itertools.product(*[range(m) for m in orders]))

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, orders))

    gens = []
    for i in range(len(orders)):
        g = [0] * len(orders)
        g[i] = 1
        gens.append(tuple(g))
    return regular_representation(elements, mul, gens or [()])


def dihedral_regular(n: int) -> PermGroup:
    """Regular action of the dihedral group of order 2n."""
    elements = [(k, f) for f in (0, 1) for k in range(n)]

    def mul(a, b):
        return ((a[0] + (-b[0] if a[1] else b[0])) % n, a[1] ^ b[1])

    return regular_representation(elements, mul, [(1, 0), (0, 1)])


def quaternion_regular() -> PermGroup:
    """Q8 acting regularly on itself; elements are (sign, unit) with unit in 1, i, j, k."""
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(a, b):
        sign, unit = table[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    return regular_representation(elements, mul, [(1, "i"), (1, "j")])


def wreath_c2(group: PermGroup) -> PermGroup:
    """C_2 wr group: ``group`` permutes pairs {2i, 2i+1}; one generator swaps the first pair."""
    m = group.degree
    gens = [Permutation([2 * g[i // 2] + (i % 2) for i in range(2 * m)]) for g in group.generators]
    swap = list(range(2 * m))
    swap[0], swap[1] = 1, 0
    gens.append(Permutation(swap))
    return PermGroup(gens)


def iterated_wreath(k: int) -> PermGroup:
    """Sylow 2-subgroup of Sym(2^k), built as C_2 wr ... wr C_2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = PermGroup([[1, 0]])
    for _ in range(k - 1):
        g = wreath_c2(g)
    return g


def projective_line_group(p: int, maps: Sequence[Callable[[int], int]]) -> PermGroup:
    """Group of maps on the projective line over F_p; point p stands for infinity."""
    gens = [Permutation([f(x) for x in range(p + 1)]) for f in maps]
    return PermGroup(gens)


def _mobius(p: int, a: int, b: int, c: int, d: int) -> Callable[[int], int]:
    inf = p

    def f(x):
        if x == inf:
            return inf if c % p == 0 else (a * pow(c, -1, p)) % p
        num = (a * x + b) % p
        den = (c * x + d) % p
        if den == 0:
            return inf
        return (num * pow(den, -1, p)) % p

    return f


def _nonsquare(p: int) -> int:
    squares = {(x * x) % p for x in range(1, p)}
    return next(x for x in range(2, p) if x not in squares)


def psl2(p: int) -> PermGroup:
    """PSL_2(p) on the p+1 points of the projective line (p an odd prime)."""
    return projective_line_group(p, [_mobius(p, 1, 1, 0, 1), _mobius(p, 0, -1, 1, 0)])


def pgl2(p: int) -> PermGroup:
    w = _nonsquare(p)
    return projective_line_group(
        p, [_mobius(p, 1, 1, 0, 1), _mobius(p, 0, -1, 1, 0), _mobius(p, w, 0, 0, 1)]
    )


# the order-64 2-subgroup of Sym(8) from the exceptional list, written with points 1..8
EXCEPTIONAL_P64_CYCLES = [
    [(1, 7), (3, 5)],
    [(1, 2, 7, 6), (3, 8), (4, 5)],
    [(1, 2), (3, 5), (4, 8), (6, 7)],
    [(1, 2, 7, 6), (3, 4, 5, 8)],
]


def exceptional_p64() -> PermGroup:
    gens = [
        Permutation.from_cycles(8, [tuple(a - 1 for a in c) for c in cycles])
        for cycles in EXCEPTIONAL_P64_CYCLES
    ]
    return PermGroup(gens)


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """Intransitive product acting on the disjoint union of the two domains."""
    n, m = a.degree, b.degree
    gens = [Permutation(list(g) + list(range(n, n + m))) for g in a.generators]
    gens += [Permutation(list(range(n)) + [n + x for x in g]) for g in b.generators]
    return PermGroup(gens)


def product_action(a: PermGroup, b: PermGroup) -> PermGroup:
    """a x b on pairs (i, j), numbered i * deg(b) + j."""
    n, m = a.degree, b.degree
    gens = [Permutation([g[v // m] * m + v % m for v in range(n * m)]) for g in a.generators]
    gens += [Permutation([(v // m) * m + g[v % m] for v in range(n * m)]) for g in b.generators]
    return PermGroup(gens)
