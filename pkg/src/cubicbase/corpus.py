"""The built-in collection of cubic vertex-transitive graphs used by the sweeps."""

from __future__ import annotations

import random
from typing import Iterator, NamedTuple

from .constructions import (
    circular_ladder,
    dihedral_cayley_cubic,
    moebius_ladder,
    split_px,
    table1_graph,
    table1_names,
)
from .graphs import Graph
from .named_groups import (
    abelian_regular,
    dihedral,
    dihedral_regular,
    direct_product,
    exceptional_p64,
    iterated_wreath,
    pgl2,
    product_action,
    psl2,
    quaternion_regular,
    symmetric,
    wreath_c2,
)
from .perm import Permutation
from .permgroup import PermGroup, coset_action

PX_RANGE = [(r, s) for r in range(3, 9) for s in range(1, r)]
LADDER_MAX_VERTICES = 40


class CorpusEntry(NamedTuple):
    name: str
    graph: Graph
    family: str


def table1_entries() -> Iterator[CorpusEntry]:
    for name in table1_names():
        yield CorpusEntry(f"table1:{name}", table1_graph(name), "table1")


def split_px_entries(max_vertices: int | None = None) -> Iterator[CorpusEntry]:
    for r, s in PX_RANGE:
        if max_vertices is not None and 2 * r * (1 << s) > max_vertices:
            continue
        yield CorpusEntry(f"spx:{r},{s}", split_px(r, s), "spx")


def ladder_entries(max_vertices: int = LADDER_MAX_VERTICES) -> Iterator[CorpusEntry]:
    for n in range(3, max_vertices // 2 + 1):
        yield CorpusEntry(f"ladder:{n}", circular_ladder(n), "prism")
    for n in range(2, max_vertices // 2 + 1):
        yield CorpusEntry(f"moebius:{n}", moebius_ladder(n), "moebius")


def dihedral_entries() -> Iterator[CorpusEntry]:
    for n, a in [(7, 3), (10, 3), (12, 5), (13, 5), (14, 3), (14, 5), (15, 4), (16, 5)]:
        yield CorpusEntry(f"dihedral:{n},{a}", dihedral_cayley_cubic(n, a), "cayley")


def corpus(max_spx_vertices: int | None = None) -> list[CorpusEntry]:
    return [
        *table1_entries(),
        *split_px_entries(max_spx_vertices),
        *ladder_entries(),
        *dihedral_entries(),
    ]


# ---- permutation group samples --------------------------------------------------

ABELIAN_TYPES = [(2,), (4,), (2, 2), (8,), (4, 2), (2, 2, 2), (16,), (8, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)]


class GroupEntry(NamedTuple):
    name: str
    group: PermGroup


def relabel_group(group: PermGroup, perm) -> PermGroup:
    """The same action with point v renamed perm[v]."""
    p = Permutation(perm)
    return PermGroup([g ** p for g in group.generators])


def two_group_entries(seed: int = 0, random_count: int = 40) -> list[GroupEntry]:
    """2-groups of degree at most 16: named families, then random subgroups of the Sylow 2-subgroup of Sym(16)."""
    out = [GroupEntry(f"abelian{t}", abelian_regular(t)) for t in ABELIAN_TYPES]
    out += [GroupEntry(f"dihedral-on-{n}", dihedral(n)) for n in (4, 8, 16)]
    out += [GroupEntry(f"dihedral-regular-{n}", dihedral_regular(n)) for n in (2, 4, 8)]
    out.append(GroupEntry("quaternion", quaternion_regular()))
    out += [GroupEntry(f"wreath-{k}", iterated_wreath(k)) for k in range(1, 5)]
    out.append(GroupEntry("p64", exceptional_p64()))
    out.append(GroupEntry("sylow2-sym6", symmetric(6).sylow2()))
    out.append(GroupEntry("quaternion-wr-2", wreath_c2(quaternion_regular())))
    out.append(GroupEntry("c4xc2-wr-2", wreath_c2(abelian_regular((4, 2)))))
    out.append(GroupEntry("d8xc2", direct_product(dihedral(4), abelian_regular((2,)))))
    d8, c2, c4 = dihedral(4), abelian_regular((2,)), abelian_regular((4,))
    products = {
        "d8.c2": product_action(d8, c2),
        "d8.c4": product_action(d8, c4),
        "d8.v4": product_action(d8, abelian_regular((2, 2))),
        "d8.d8": product_action(d8, d8),
        "q8.c2": product_action(quaternion_regular(), c2),
    }
    out += [GroupEntry(f"product-{k}", g) for k, g in products.items()]
    rng = random.Random(seed)
    out += _class2_quotients(rng, 15)
    host = iterated_wreath(4)
    for i in range(random_count):
        gens = [host.random_element(rng) for _ in range(rng.randint(1, 3))]
        g = PermGroup(gens)
        if rng.random() < 0.5:
            perm = list(range(16))
            rng.shuffle(perm)
            g = relabel_group(g, perm)
        out.append(GroupEntry(f"random-{i}", g))
    return out


def _class2_quotients(rng: random.Random, count: int) -> list[GroupEntry]:
    """Transitive images of class-2 groups acting on cosets of random subgroups of index 4 to 16."""
    hosts = [
        ("d8.d8", product_action(dihedral(4), dihedral(4))),
        ("p64", exceptional_p64()),
        ("q8+d8", direct_product(quaternion_regular(), dihedral(4))),
    ]
    out = []
    while len(out) < count:
        name, host = hosts[len(out) % len(hosts)]
        sub = PermGroup([host.random_element(rng) for _ in range(rng.randint(1, 2))])
        if not 4 <= host.order() // sub.order() <= 16:
            continue
        out.append(GroupEntry(f"quotient-{name}-{len(out)}", coset_action(host, sub)))
    return out


def _random_hosts() -> list[tuple[str, PermGroup]]:
    return [
        *[(f"sym{n}", symmetric(n)) for n in range(4, 8)],
        *[(f"dihedral{n}", dihedral(n)) for n in (9, 12, 20, 30)],
        ("wr-sym3", wreath_c2(symmetric(3))),
        ("wr-dihedral5", wreath_c2(dihedral(5))),
        ("wreath4", iterated_wreath(4)),
        ("wr-psl2-7", wreath_c2(psl2(7))),
        *[(f"psl2-{p}", psl2(p)) for p in (11, 13)],
        *[(f"pgl2-{p}", pgl2(p)) for p in (17, 19, 23, 29)],
    ]


def random_transitive_groups(count: int = 20, seed: int = 0, max_order: int = 10**5) -> list[GroupEntry]:
    """Groups generated by a few random elements of a host, kept when transitive; points are shuffled."""
    rng = random.Random(seed)
    hosts = _random_hosts()
    out = []
    while len(out) < count:
        name, host = rng.choice(hosts)
        gens = [host.random_element(rng) for _ in range(rng.randint(2, 3))]
        g = PermGroup(gens)
        if not g.is_transitive() or g.order() > max_order:
            continue
        perm = list(range(g.degree))
        rng.shuffle(perm)
        out.append(GroupEntry(f"{name}-sub{len(out)}", relabel_group(g, perm)))
    return out
