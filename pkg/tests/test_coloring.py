from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from pseudocircles.arrangement import as_arrangement, curve_sides
from pseudocircles.coloring import (
    BFoldColoring, EdgeColoring, antipodal_three_coloring, bfold_from_critical,
    chromatic_number, claim3_bound, claim3_independent_set, count_edge_three_colorings,
    criticality, curve_weight, cubic_premedial, degeneracy_three_coloring,
    edge_three_coloring, find_degeneracy_removal, find_trihamiltonian_coloring,
    first_noncritical, format_bfold, format_coloring, independence_number,
    is_independent, is_proper, is_proper_edge_coloring, is_valid_bfold,
    iter_edge_three_colorings, k_color, min_weight_curve, parse_bfold,
    parse_coloring, peel_order, tait_vertex_coloring, trihamiltonian,
)
from pseudocircles.constructions import gen_unique3ec
from pseudocircles.errors import (
    Bridged, NoColoring, NoCubicPremedial, NotCubic, NotFourChromatic,
    NotProper, NotThreeColors, NotTwoDegenerate, NotVertexCritical, ParseError,
)

from conftest import planar_graphs, small_graphs
from oracles import brute_alpha, brute_chromatic, brute_edge_colorings


def odd_wheel():
    g = nx.cycle_graph(5)
    g.add_edges_from((5, i) for i in range(5))
    return g


def k4_with_pendant():
    g = nx.complete_graph(4)
    g.add_edge(3, 4)
    return g


def bridged_cubic():
    """Two K4s with one edge subdivided each, the new vertices joined."""
    g = nx.Graph()
    for off in (0, 5):
        g.add_edges_from((off + a, off + b) for a, b in [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        g.add_edges_from([(off + 1, off + 4), (off + 3, off + 4)])
    g.add_edge(4, 9)
    return g


# -- vertex colorings --------------------------------------------------------

@given(small_graphs())
def test_chromatic_number_matches_brute_force(g):
    chi, col = chromatic_number(g)
    assert chi == brute_chromatic(g)
    assert is_proper(g, col) and col.colors_used() <= chi


@given(planar_graphs(max_n=8))
def test_chromatic_number_planar(g):
    assert chromatic_number(g)[0] == brute_chromatic(g)


def test_k_color_refuses_k4():
    assert k_color(nx.complete_graph(4), 3) is None
    assert k_color(nx.complete_graph(4), 4) is not None


def test_k_color_respects_fixed():
    col = k_color(nx.cycle_graph(6), 2, fixed={0: 1})
    assert col[0] == 1 and is_proper(nx.cycle_graph(6), col)
    assert k_color(nx.cycle_graph(6), 2, fixed={0: 0, 2: 1}) is None


@given(small_graphs())
def test_independence_number_matches_brute_force(g):
    alpha, witness = independence_number(g)
    assert alpha == brute_alpha(g) == len(witness)
    assert is_independent(g, witness)


# -- edge colorings ---------------------------------------------------------

@pytest.mark.parametrize("name, g", [
    ("K4", nx.complete_graph(4)),
    ("prism", nx.circular_ladder_graph(3)),
    ("cube", nx.cubical_graph()),
    ("K33", nx.complete_bipartite_graph(3, 3)),
])
def test_edge_coloring_count_matches_brute_force(name, g):
    assert count_edge_three_colorings(g) == brute_edge_colorings(list(g.edges()))


def test_k33_is_not_uniquely_colorable():
    assert count_edge_three_colorings(nx.complete_bipartite_graph(3, 3)) > 6


@pytest.mark.parametrize("seq", [[], [0], [0, 3], [1, 4, 6], [0, 0, 0, 0]])
def test_gen_unique3ec(seq):
    h = gen_unique3ec(seq)
    assert h.num_vertices == 4 + 2 * len(seq)
    edges = [(h.vertex_of[a], h.vertex_of[b]) for a, b in h.edges]
    assert brute_edge_colorings(edges) == 6
    assert count_edge_three_colorings(h) == 6


def test_edge_coloring_errors():
    with pytest.raises(NoColoring):
        edge_three_coloring(nx.petersen_graph())
    with pytest.raises(Bridged):
        edge_three_coloring(bridged_cubic())
    with pytest.raises(NotCubic):
        edge_three_coloring(nx.cycle_graph(4))


@given(st.lists(st.integers(0, 20), max_size=5))
def test_every_listed_coloring_is_proper(seq):
    h = gen_unique3ec([v % (4 + 2 * i) for i, v in enumerate(seq)])
    cols = list(iter_edge_three_colorings(h))
    assert len(cols) == 6
    assert all(is_proper_edge_coloring(c) for c in cols)


def test_trihamiltonian():
    k4 = nx.complete_graph(4)
    assert all(trihamiltonian(k4, ec) for ec in iter_edge_three_colorings(k4))
    assert find_trihamiltonian_coloring(nx.dodecahedral_graph()) is not None
    assert find_trihamiltonian_coloring(nx.cubical_graph()) is None
    bad = EdgeColoring(tuple(sorted(k4.edges())), (0,) * 6)
    with pytest.raises(NotProper):
        trihamiltonian(k4, bad)


# -- Tait transfer ----------------------------------------------------------

@pytest.mark.parametrize("fid", ["octahedron", "fig6a", "fig4_n7", "fig10"])
def test_tait_coloring_is_proper(fx, fid):
    m = fx(fid).map
    h, through = cubic_premedial(m)
    assert all(len(v) == 3 for v in h.vertices)
    assert sorted(through) == list(range(m.num_vertices))
    col = tait_vertex_coloring(m)
    assert is_proper(m, col) and col.colors_used() == 3


def test_tait_needs_triangle_class(fx):
    with pytest.raises(NoCubicPremedial):
        tait_vertex_coloring(fx("fig1b").map)


# -- criticality ------------------------------------------------------------

def test_criticality():
    assert criticality(nx.complete_graph(4), "vertex")
    assert criticality(odd_wheel(), "edge")
    assert not criticality(k4_with_pendant(), "vertex")
    assert first_noncritical(k4_with_pendant(), "vertex") == 4
    assert first_noncritical(k4_with_pendant(), "edge") == (3, 4)
    with pytest.raises(NotFourChromatic):
        criticality(nx.cycle_graph(5))
    with pytest.raises(ValueError):
        first_noncritical(nx.complete_graph(4), "face")


# -- antipodal colorings ----------------------------------------------------

def test_antipodal_octahedron(octahedron):
    col = antipodal_three_coloring(octahedron)
    assert col is not None and is_proper(octahedron, col)
    for u, v in octahedron.pair_vertices.values():
        assert col[u] == col[v]


# -- b-fold colorings ---------------------------------------------------------

def test_bfold_k4():
    bf = bfold_from_critical(nx.complete_graph(4))
    assert (bf.b, bf.m) == (3, 12)
    assert is_valid_bfold(nx.complete_graph(4), bf)
    assert len(bf.palette()) <= 12
    assert parse_bfold(format_bfold(bf)) == bf


def test_bfold_rejections():
    with pytest.raises(NotVertexCritical):
        bfold_from_critical(k4_with_pendant())
    with pytest.raises(NotVertexCritical):
        bfold_from_critical(nx.cycle_graph(5))
    bad = BFoldColoring({0: (1, 2, 3), 1: (3, 4, 5), 2: (6, 7, 8), 3: (9, 10, 11)}, 3, 12)
    assert not is_valid_bfold(nx.complete_graph(4), bad)


# -- the independent set around a curve ---------------------------------------

@given(st.lists(st.integers(0, 9), min_size=30, max_size=30), st.sampled_from(["fig6a", "fig4_n7"]))
def test_claim3_bound_holds(weights, fid):
    from pseudocircles.fixture import load_fixture
    a = as_arrangement(load_fixture(fid).map)
    n_v = a.map.num_vertices
    w = {v: Fraction(weights[v % 30]) for v in range(n_v)}
    if not any(w.values()):
        w[0] = Fraction(1)
    total = sum(w.values())
    c = min_weight_curve(a, w)
    assert all(curve_weight(a, c, w) <= curve_weight(a, d, w) for d in a.curve_ids)
    res = claim3_independent_set(a, c, w)
    assert len(res.candidates) == 18
    assert is_independent(a, res.best)
    assert res.weight >= res.mean_weight >= claim3_bound(a.n, total)


def test_claim3_candidates_are_independent(fx):
    a = as_arrangement(fx("fig4_n9").map)
    w = {v: 1 for v in range(a.map.num_vertices)}
    res = claim3_independent_set(a, 0, w)
    assert all(is_independent(a, s) for s, _ in res.candidates)
    assert set(res.best) & set(curve_sides(a, 0).on) or res.weight > 0


# -- degeneracy ---------------------------------------------------------------

@pytest.mark.parametrize("fid", ["octahedron", "fig6a", "fig4_n7", "fig1b"])
def test_degeneracy_coloring(fx, fid):
    a = as_arrangement(fx(fid).map)
    removal = find_degeneracy_removal(a)
    assert len(removal) <= a.n
    col = degeneracy_three_coloring(a, removal)
    g = a.graph()
    g.remove_nodes_from(removal)
    assert is_proper(g, col)


def test_peel_order():
    assert peel_order(nx.complete_graph(4)) is None
    assert peel_order(nx.complete_graph(4), [0]) is not None
    with pytest.raises(NotTwoDegenerate):
        degeneracy_three_coloring(nx.complete_graph(4), [])


# -- text formats -----------------------------------------------------------

def test_coloring_round_trip():
    col = chromatic_number(odd_wheel())[1]
    assert parse_coloring(format_coloring(col)) == col


@pytest.mark.parametrize("text, exc", [
    ("", ParseError), ("coloring-v2 3\n", ParseError), ("coloring-v1 3\n0 x\n", ParseError),
    ("coloring-v1 3\n0 3\n", NotThreeColors), ("bfold-v1 1\n", ParseError),
])
def test_format_errors(text, exc):
    parse = parse_bfold if text.startswith("bfold") else parse_coloring
    with pytest.raises(exc):
        parse(text)
