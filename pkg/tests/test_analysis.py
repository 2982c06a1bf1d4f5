import itertools
import random

import pytest
from hypothesis import given, strategies as st

from cubicbase import PermGroup
from cubicbase.analysis import (
    BASE_LE2,
    EXCEPTIONAL,
    NOT_APPLICABLE,
    SPLIT_PX,
    ExcludedGroup,
    abelian_pair,
    asymmetric_3colourings,
    asymmetric_set,
    base_size,
    classify,
    colour_transporter,
    distinguishing_cost,
    distinguishing_number,
    has_base_le2,
    is_base,
    is_split_px,
    stabiliser_structure_report,
    star_check,
)
from cubicbase.analysis.classify import split_px_parameters
from cubicbase.analysis.colourings import Colouring, is_asymmetric
from cubicbase.analysis.reports import (
    girth_from_fixed_s_arc,
    inflate_bound,
    involution_fpr_sum,
    prism_configuration,
    three_regular_orbits_hypothesis,
    twin_vertices,
)
from cubicbase.analysis.star import double_coset, revalidate
from cubicbase.constructions import circular_ladder, dihedral_cayley_cubic, split_px, table1_graph
from cubicbase.corpus import corpus, random_transitive_groups, two_group_entries
from cubicbase.errors import CapExceeded, HypothesisError
from cubicbase.graphs import Graph, automorphism_group, isomorphic
from cubicbase.graphs.symmetry import quotient
from cubicbase.named_groups import (
    abelian_regular,
    alternating,
    dihedral,
    iterated_wreath,
    klein_four_in_a5,
    quaternion_regular,
    symmetric,
)
from cubicbase.perm import Permutation

from conftest import closure, small_groups


# ---- brute-force oracles ---------------------------------------------------------


def brute_base_size(n, elems):
    nontrivial = [g for g in elems if not g.is_identity()]
    for k in range(n + 1):
        for pts in itertools.combinations(range(n), k):
            if not any(all(g[p] == p for p in pts) for g in nontrivial):
                return k


def brute_distinguishing(n, elems):
    nontrivial = [g for g in elems if not g.is_identity()]
    for d in range(1, n + 1):
        for col in itertools.product(range(d), repeat=n):
            if not any(all(col[g[v]] == col[v] for v in range(n)) for g in nontrivial):
                return d


def brute_cost(n, elems):
    nontrivial = [g for g in elems if not g.is_identity()]
    if not nontrivial:
        return 0
    best = None
    for k in range(1, n + 1):
        for pts in itertools.combinations(range(n), k):
            s = set(pts)
            if not any({g[p] for p in pts} == s for g in nontrivial):
                return min(k, n - k) if best is None else best
    return None


@given(small_groups(max_n=6))
def test_base_size_matches_brute_force(case):
    n, gens = case
    G = PermGroup(gens)
    res = base_size(G)
    assert res.size == brute_base_size(n, closure(n, gens))
    assert is_base(G, res.witness)
    assert has_base_le2(G).found == (res.size <= 2)


@given(small_groups(max_n=6))
def test_distinguishing_number_matches_brute_force(case):
    n, gens = case
    G = PermGroup(gens)
    assert distinguishing_number(G) == brute_distinguishing(n, closure(n, gens))


@given(small_groups(max_n=7))
def test_distinguishing_cost_matches_brute_force(case):
    n, gens = case
    G = PermGroup(gens)
    elems = closure(n, gens)
    cost = distinguishing_cost(G)
    nontrivial = [g for g in elems if not g.is_identity()]
    # smallest asymmetric subset with at most n/2 points, i.e. the smaller class of a 2-colouring
    expected = None if nontrivial else 0
    if nontrivial:
        for k in range(1, n // 2 + 1):
            if any(not any({g[p] for p in pts} == set(pts) for g in nontrivial)
                   for pts in itertools.combinations(range(n), k)):
                expected = k
                break
    if expected is None:
        assert cost is NOT_APPLICABLE
    else:
        assert cost == expected


def test_not_applicable_is_falsy():
    assert not NOT_APPLICABLE
    assert distinguishing_cost(table1_graph("Petersen")) is NOT_APPLICABLE


@pytest.mark.parametrize("name,d", [("K4", 4), ("K3_3", 4), ("Cube", 3), ("Petersen", 3), ("Heawood", 2)])
def test_distinguishing_numbers_of_small_graphs(name, d):
    assert distinguishing_number(table1_graph(name)) == d


def test_small_prism():
    g = circular_ladder(3)
    assert distinguishing_number(g) == 2
    assert distinguishing_cost(g) == 3


# ---- colourings -----------------------------------------------------------------


@given(small_groups(max_n=6), st.data())
def test_colour_transporter_matches_brute_force(case, data):
    n, gens = case
    G = PermGroup(gens)
    c1 = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    c2 = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    t = colour_transporter(G, c1, c2)
    exists = any(all(c2[g[v]] == c1[v] for v in range(n)) for g in closure(n, gens))
    assert (t is not None) == exists
    if t is not None:
        assert Colouring(tuple(c1)).image(t).colours == tuple(c2)


def test_asymmetric_set_exclusion():
    with pytest.raises(ExcludedGroup):
        asymmetric_set(dihedral(4))
    with pytest.raises(HypothesisError):
        asymmetric_set(symmetric(3))
    with pytest.raises(HypothesisError):
        asymmetric_set(iterated_wreath(3))


@pytest.mark.parametrize("group", [quaternion_regular(), abelian_regular((4, 4)), abelian_regular((2, 2, 2))])
def test_asymmetric_set_small(group):
    x = asymmetric_set(group)
    assert group.setwise_stabiliser(x).is_trivial()
    if group.degree > 8:
        assert 2 * len(x) < group.degree


def test_asymmetric_set_recursive_branch():
    # degree 32: above the exhaustive limit, handled through a central involution
    big = abelian_regular((4, 4, 2))
    x = asymmetric_set(big)
    assert big.setwise_stabiliser(x).is_trivial()
    assert 2 * len(x) < 32


def test_three_colourings_on_two_group_corpus():
    for e in two_group_entries(random_count=10):
        cols = asymmetric_3colourings(e.group)
        assert len(cols) == 3
        assert all(is_asymmetric(e.group, c.colours) for c in cols)
        for a, b in itertools.combinations(cols, 2):
            assert colour_transporter(e.group, a.colours, b.colours) is None


def test_three_colourings_include_dihedral_on_four():
    cols = asymmetric_3colourings(dihedral(4))
    assert len({c.colours for c in cols}) == 3


def test_colouring_palette_check():
    with pytest.raises(ValueError):
        Colouring((0, 3))


# ---- exceptional pairs ---------------------------------------------------------


def test_double_coset_brute_force():
    G = symmetric(4)
    P = G.sylow2()
    t = Permutation.from_cycles(4, [(0, 1, 2)])
    expected = {a * t * b for a in P.elements() for b in P.elements()}
    assert double_coset(P, t) == expected


def test_star_small_cases():
    s5 = symmetric(5)
    w = star_check(s5, alternating(5), s5.sylow2())
    assert not w.satisfied and w.trivial_intersections > 0 and revalidate(s5.sylow2(), w)
    a5 = alternating(5)
    w = star_check(a5, a5, klein_four_in_a5())
    assert w.satisfied and revalidate(klein_four_in_a5(), w)


def test_star_rejects_bad_inputs():
    s5 = symmetric(5)
    with pytest.raises(HypothesisError):
        star_check(alternating(5), alternating(5), s5.sylow2())
    with pytest.raises(HypothesisError):
        star_check(s5, PermGroup([Permutation.from_cycles(5, [(0, 1)])]), s5.sylow2())
    with pytest.raises(CapExceeded):
        star_check(s5, alternating(5), s5.sylow2(), cap=10)


# ---- classification ----------------------------------------------------------------


def test_split_px_parameters():
    assert split_px_parameters(24) == [(3, 2), (6, 1)]
    assert split_px_parameters(10) == []


@pytest.mark.parametrize(
    "graph,kind",
    [
        (table1_graph("Petersen"), EXCEPTIONAL),
        (split_px(6, 1), SPLIT_PX),
        (split_px(5, 3), BASE_LE2),
        (dihedral_cayley_cubic(14, 3), BASE_LE2),
        (circular_ladder(7), BASE_LE2),
    ],
)
def test_classify_verdicts(graph, kind):
    rep = classify(graph)
    assert rep.verdict.kind == kind
    assert rep.consistent()
    if kind == BASE_LE2:
        assert automorphism_group(graph).pointwise_stabiliser(list(rep.witness)).is_trivial()


def test_classify_output_schema():
    rep = classify(split_px(6, 1), name="x")
    js = rep.to_json()
    assert js["verdict"] == "SplitPX(6,1)"
    assert js["aut_order"] == "768"
    assert set(js) == {"graph", "n", "aut_order", "verdict", "base_size", "witness", "timings_ms"}


def test_classify_rejects_out_of_scope():
    with pytest.raises(HypothesisError):
        classify(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    two_k4 = Graph.from_edges(8, [(a + o, b + o) for o in (0, 4) for a, b in itertools.combinations(range(4), 2)])
    with pytest.raises(HypothesisError):
        classify(two_k4)


def test_is_split_px():
    assert is_split_px(split_px(5, 1)) == (5, 1)
    assert is_split_px(table1_graph("Pappus")) is None


# ---- structural implications on the corpus ---------------------------------------


@pytest.fixture(scope="module")
def small_corpus():
    return [(e, automorphism_group(e.graph)) for e in corpus(max_spx_vertices=200)]


def test_stabiliser_structure(small_corpus):
    for e, G in small_corpus:
        assert stabiliser_structure_report(e.graph, G).passed, e.name


def test_twin_vertices_force_k33(small_corpus):
    hits = 0
    for e, G in small_corpus:
        if twin_vertices(e.graph) is not None:
            hits += 1
            assert isomorphic(e.graph, table1_graph("K3_3")), e.name
    assert hits >= 1


def test_prism_configuration_forces_small_prism(small_corpus):
    hits = 0
    for e, G in small_corpus:
        if prism_configuration(e.graph) is not None:
            hits += 1
            assert isomorphic(e.graph, circular_ladder(3)), e.name
    assert hits >= 1


def test_quotient_valency(small_corpus):
    for e, G in small_corpus:
        for z in G.center().elements()[:4]:
            if z.is_identity():
                continue
            q = quotient(e.graph, PermGroup([z]))
            assert max(len(a) for a in q.adj) <= 3


def test_fixed_s_arc_bounds_girth(small_corpus):
    for e, G in small_corpus:
        assert girth_from_fixed_s_arc(e.graph, G) in (True, None), e.name


def test_abelian_pair_everywhere(small_corpus):
    for e, G in small_corpus:
        assert abelian_pair(G) is not None, e.name


# ---- regular-orbit counting as properties ------------------------------------------


@pytest.mark.parametrize("entry", random_transitive_groups(12, seed=3), ids=lambda e: e.name)
def test_inflate_bound(entry):
    G = entry.group
    for b in range(1, G.degree):
        bs = G.block_system([0, b])
        if bs.is_trivial():
            continue
        lhs, rhs = inflate_bound(G, bs.blocks)
        assert lhs >= rhs


def test_involution_sum_gives_three_regular_orbits():
    r = random.Random(11)
    host = iterated_wreath(4)
    seen = 0
    for _ in range(60):
        P = PermGroup([host.random_element(r) for _ in range(r.randint(1, 2))])
        if three_regular_orbits_hypothesis(P):
            seen += 1
            assert P.regular_orbit_count() >= 3
        # the union-bound sum never undercounts the non-regular points
        non_regular = P.degree - P.regular_orbit_count() * P.order()
        assert involution_fpr_sum(P) * P.degree >= non_regular
    assert seen > 0


@pytest.mark.parametrize("name", ["K4", "K3_3", "Cube", "Petersen", "Heawood", "Pappus", "Desargues", "TutteCoxeter"])
def test_small_transitive_subgroups_of_exceptional_graphs(name):
    """Proper transitive subgroups with 2-group stabilisers have base size at most 2.

    Covers every subgroup generated by two elements, up to conjugacy.
    """
    from cubicbase.analysis.colourings import is_two_group

    G = automorphism_group(table1_graph(name))
    elems = G.elements()
    seen, reps = set(), []
    for x in elems:
        if x not in seen:
            seen.update(G.conjugacy_class(x, 10**6))
            reps.append(x)
    done = set()
    for x in reps:
        for y in elems:
            H = PermGroup([x, y])
            if H.order() == G.order() or not H.is_transitive():
                continue
            if not is_two_group(H.point_stabiliser(0)):
                continue
            key = frozenset(H.elements())
            if key not in done:
                done.add(key)
                assert has_base_le2(H).found
