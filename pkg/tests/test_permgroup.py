import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubicbase import PermGroup
from cubicbase.errors import CapExceeded, HypothesisError
from cubicbase.named_groups import (
    alternating,
    dihedral,
    exceptional_p64,
    iterated_wreath,
    pgl2,
    psl2,
    quaternion_regular,
    symmetric,
)
from cubicbase.perm import Permutation
from cubicbase.permgroup import coset_action

from conftest import closure, small_groups


@given(small_groups())
def test_order_matches_closure(case):
    n, gens = case
    G = PermGroup(gens)
    elems = closure(n, gens)
    assert G.order() == len(elems)
    assert set(G.elements()) == elems


@given(small_groups(), st.data())
def test_membership_matches_closure(case, data):
    n, gens = case
    G = PermGroup(gens)
    elems = closure(n, gens)
    x = Permutation(data.draw(st.permutations(range(n))))
    assert G.contains(x) == (x in elems)


@given(small_groups())
def test_orbits_and_stabilisers(case):
    n, gens = case
    G = PermGroup(gens)
    elems = closure(n, gens)
    for v in range(n):
        assert set(G.orbit(v)) == {g[v] for g in elems}
        stab = {g for g in elems if g[v] == v}
        assert set(G.point_stabiliser(v).elements()) == stab
    # orbit-stabiliser
    assert G.order() == len(G.orbit(0)) * G.point_stabiliser(0).order()


@given(small_groups(), st.data())
def test_base_change_keeps_group(case, data):
    n, gens = case
    G = PermGroup(gens)
    prefix = data.draw(st.lists(st.integers(0, n - 1), max_size=3, unique=True))
    H = G.with_base(prefix)
    # the trivial group keeps its empty chain
    assert H.base[: len(prefix)] == (prefix if not G.is_trivial() else [])
    assert H.order() == G.order()
    assert set(H.elements()) == set(G.elements())


@given(small_groups(), st.data())
def test_setwise_stabiliser(case, data):
    n, gens = case
    G = PermGroup(gens)
    pts = set(data.draw(st.lists(st.integers(0, n - 1), min_size=1, unique=True)))
    expected = {g for g in closure(n, gens) if {g[v] for v in pts} == pts}
    assert set(G.setwise_stabiliser(pts).elements()) == expected


@given(small_groups(max_n=5), small_groups(max_n=5))
def test_intersection(a, b):
    n = min(a[0], b[0])
    ga = [Permutation(list(g)[:n]) if sorted(list(g)[:n]) == list(range(n)) else None for g in a[1]]
    gb = [Permutation(list(g)[:n]) if sorted(list(g)[:n]) == list(range(n)) else None for g in b[1]]
    ga = [g for g in ga if g is not None] or [Permutation.identity(n)]
    gb = [g for g in gb if g is not None] or [Permutation.identity(n)]
    A, B = PermGroup(ga), PermGroup(gb)
    expected = closure(n, ga) & closure(n, gb)
    assert set(A.intersection(B).elements()) == expected
    assert A.intersection_trivial(B) == (len(expected) == 1)


@given(small_groups(max_n=5))
def test_center_and_derived_subgroup(case):
    n, gens = case
    G = PermGroup(gens)
    elems = closure(n, gens)
    centre = {z for z in elems if all(z * g == g * z for g in elems)}
    assert set(G.center().elements()) == centre
    comms = closure(n, [a.commutator(b) for a in elems for b in elems])
    assert set(G.derived_subgroup().elements()) == comms
    assert G.is_abelian() == (len(comms) == 1)


@given(small_groups(max_n=5), st.data())
def test_centraliser_and_conjugacy_class(case, data):
    n, gens = case
    G = PermGroup(gens)
    elems = sorted(closure(n, gens))
    x = data.draw(st.sampled_from(elems))
    assert set(G.centraliser(x).elements()) == {g for g in elems if g * x == x * g}
    cls = {x ** g for g in elems}
    assert set(G.conjugacy_class(x)) == cls
    assert len(cls) * G.centraliser(x).order() == G.order()


@given(small_groups(max_n=6))
def test_fpr_identity_on_transitive_groups(case):
    n, gens = case
    G = PermGroup(gens)
    if not G.is_transitive():
        return
    for x in G.elements()[:40]:
        assert G.fixed_point_ratio(x) == G.conjugacy_fixed_point_ratio(x)


@given(small_groups(max_n=6))
def test_sylow2(case):
    n, gens = case
    G = PermGroup(gens)
    P = G.sylow2()
    order = G.order()
    assert P.order() == order & -order
    assert P.is_subgroup_of(G)


@given(small_groups(min_n=4, max_n=8), st.data())
def test_block_system_is_invariant(case, data):
    n, gens = case
    G = PermGroup(gens)
    if not G.is_transitive():
        with pytest.raises(HypothesisError):
            G.block_system([0, 1])
        return
    b = data.draw(st.integers(1, n - 1))
    bs = G.block_system([0, b])
    blocks = [frozenset(x) for x in bs.blocks]
    assert sorted(v for x in blocks for v in x) == list(range(n))
    assert any({0, b} <= x for x in blocks)
    for g in G.generators:
        for x in blocks:
            assert frozenset(g[v] for v in x) in blocks
    assert bs.block_action.order() * 1 <= G.order()


def test_named_group_orders():
    assert symmetric(5).order() == 120
    assert alternating(8).order() == 20160
    assert psl2(7).order() == 168
    assert pgl2(7).order() == 336
    assert dihedral(6).order() == 12
    p64 = exceptional_p64()
    assert p64.order() == 64
    assert p64.nilpotency_class() == 2
    assert p64.exponent() == 4
    assert quaternion_regular().nilpotency_class() == 2
    assert iterated_wreath(3).order() == 128
    assert iterated_wreath(3).nilpotency_class() == 4
    assert symmetric(6).sylow2().order() == 16


def test_big_orders_are_exact_integers():
    assert symmetric(30).order() == 265252859812191058636308480000000
    assert iterated_wreath(6).order() == 2**63


def test_normaliser_and_normal_closure():
    S4 = symmetric(4)
    V = PermGroup([Permutation.from_cycles(4, [(0, 1), (2, 3)]), Permutation.from_cycles(4, [(0, 2), (1, 3)])])
    assert S4.normaliser(V).order() == 24
    t = PermGroup([Permutation.from_cycles(4, [(0, 1)])])
    assert S4.normaliser(t).order() == 4
    assert S4.normal_closure([Permutation.from_cycles(4, [(0, 1), (2, 3)])]).order() == 4
    assert [H.order() for H in S4.derived_series()] == [24, 12, 4, 1]


def test_lower_central_series_of_wreath():
    W = iterated_wreath(3)
    series = W.lower_central_series()
    assert series[-1].is_trivial()
    assert len(series) - 1 == W.nilpotency_class()


def test_coset_action_is_transitive_image():
    G = symmetric(4)
    H = G.point_stabiliser(0)
    A = coset_action(G, H)
    assert A.degree == 4
    assert A.order() == 24
    assert A.is_transitive()


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        symmetric(12).elements(cap=1000)


def test_json_round_trip():
    G = psl2(7)
    H = PermGroup.from_json(json.loads(json.dumps(G.to_json())))
    assert H.order() == 168
    assert H == G


def test_random_elements_are_members():
    G = pgl2(11)
    r = random.Random(5)
    for _ in range(30):
        assert G.contains(G.random_element(r))


def test_regular_orbits_and_semiregularity():
    Q = quaternion_regular()
    assert Q.is_semiregular()
    assert Q.regular_orbit_count() == 1
    assert not symmetric(3).is_semiregular()
    assert Fraction(0) == Q.fixed_point_ratio(Q.generators[0])
