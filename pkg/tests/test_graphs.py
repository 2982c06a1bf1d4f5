import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from cubicbase.constructions import circular_ladder, cube_graph, moebius_ladder, table1_graph
from cubicbase.errors import CapExceeded
from cubicbase.graphs import (
    Digraph,
    Graph,
    automorphism_group,
    diameter,
    girth,
    is_connected,
    isomorphic,
    isomorphism,
    s_arcs,
)
from cubicbase.graphs.symmetry import (
    arc_orbits,
    edge_orbits,
    is_arc_transitive,
    is_edge_transitive,
    is_vertex_transitive,
    max_s_arc_transitivity,
    orientations,
    quotient,
)
from cubicbase.perm import Permutation
from cubicbase.permgroup import PermGroup


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_force_aut(g):
    return {Permutation(p) for p in itertools.permutations(range(g.n)) if g.is_automorphism(p)}


def nx_aut_count(g):
    h = to_nx(g)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


@given(graphs())
def test_automorphism_group_matches_brute_force(g):
    G = automorphism_group(g)
    assert set(G.elements()) == brute_force_aut(g)


@given(graphs(max_n=6), st.data())
def test_automorphism_group_with_colours(g, data):
    colours = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    G = automorphism_group(g, colours=colours)
    expected = {p for p in brute_force_aut(g) if all(colours[p[v]] == colours[v] for v in range(g.n))}
    assert set(G.elements()) == expected


@pytest.mark.parametrize("seed", range(6))
def test_random_cubic_graphs_against_networkx(seed):
    h = nx.random_regular_graph(3, 16, seed=seed)
    g = Graph.from_edges(16, h.edges())
    assert automorphism_group(g).order() == nx_aut_count(g)


@pytest.mark.parametrize("name", ["K4", "K3_3", "Cube", "Petersen", "Heawood", "Pappus", "Desargues"])
def test_table_graphs_against_networkx(name):
    g = table1_graph(name)
    assert automorphism_group(g).order() == nx_aut_count(g)


@pytest.mark.parametrize("name", ["Petersen", "Heawood", "TutteCoxeter"])
def test_order_invariant_under_relabelling(name):
    g = table1_graph(name)
    order = automorphism_group(g).order()
    r = random.Random(9)
    for _ in range(100):
        perm = list(range(g.n))
        r.shuffle(perm)
        assert automorphism_group(g.relabel(perm), check_relabelled=False).order() == order


@given(graphs(max_n=7), st.data())
def test_isomorphism_of_relabelled_copy(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    iso = isomorphism(g, h)
    assert iso is not None
    assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphic_matches_networkx(a, b):
    assert isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("seed", range(5))
def test_isomorphic_random_cubic_pairs(seed):
    h1 = nx.random_regular_graph(3, 14, seed=seed)
    h2 = nx.random_regular_graph(3, 14, seed=seed + 100)
    a = Graph.from_edges(14, h1.edges())
    b = Graph.from_edges(14, h2.edges())
    assert isomorphic(a, b) == nx.is_isomorphic(h1, h2)


def test_vertex_cap():
    g = circular_ladder(20)
    with pytest.raises(CapExceeded):
        automorphism_group(g, cap=10)


def test_digraph_automorphisms():
    d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert automorphism_group(d).order() == 4


@given(graphs(max_n=8))
def test_metric_invariants_against_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == (g.n > 0 and nx.is_connected(h))
    if g.n and nx.is_connected(h):
        assert diameter(g) == nx.diameter(h)
    gi = nx.girth(h)
    assert girth(g) == gi


def test_s_arc_counts():
    g = table1_graph("Petersen")
    # a cubic graph has n * 3 * 2^(s-1) s-arcs
    for s in range(1, 4):
        assert len(s_arcs(g, s)) == 10 * 3 * 2 ** (s - 1)


@pytest.mark.parametrize(
    "name,s", [("K4", 2), ("K3_3", 3), ("Cube", 2), ("Petersen", 3), ("Heawood", 4), ("Pappus", 3),
               ("Desargues", 3), ("TutteCoxeter", 5)]
)
def test_s_arc_transitivity(name, s):
    assert max_s_arc_transitivity(table1_graph(name)) == s


def test_transitivity_predicates():
    prism = circular_ladder(5)
    assert is_vertex_transitive(prism)
    assert not is_edge_transitive(prism)
    assert len(edge_orbits(prism)) == 2
    assert is_arc_transitive(cube_graph())
    assert len(arc_orbits(cube_graph())) == 1
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert not is_vertex_transitive(path)
    assert max_s_arc_transitivity(path) == -1


def test_orientations_of_px_graph():
    from cubicbase.constructions import px_digraph, px_graph, px_groups
    from cubicbase.errors import HypothesisError

    g = px_graph(5, 2)
    a, b = orientations(g, px_groups(5, 2).H_plus)
    assert sorted(a.arcs()) == sorted((v, u) for u, v in b.arcs())
    assert sorted(px_digraph(5, 2).arcs()) in (sorted(a.arcs()), sorted(b.arcs()))
    with pytest.raises(HypothesisError):
        orientations(cube_graph())


def test_quotient_of_cube_by_antipodal_map():
    g = cube_graph()
    antipodal = Permutation([v ^ 7 for v in range(8)])
    q = quotient(g, PermGroup([antipodal]))
    assert isomorphic(q, table1_graph("K4"))


def test_ladders():
    assert isomorphic(moebius_ladder(2), table1_graph("K4"))
    assert isomorphic(moebius_ladder(3), table1_graph("K3_3"))
    assert isomorphic(circular_ladder(4), cube_graph())
    assert not isomorphic(circular_ladder(3), moebius_ladder(3))


def test_graph_json_round_trip():
    g = table1_graph("Petersen")
    assert Graph.from_json(g.to_json()) == g
