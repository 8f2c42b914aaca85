import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from pseudocircles.errors import (
    Disconnected, DuplicateEdge, EulerViolation, NotCocycle, NotInvolution,
    NotPermutation, OddVertex, ParseError,
)
from pseudocircles.planemap import (
    PlaneMap, analyze, canonical_form, dual, face_two_coloring, format_map,
    from_graph, insert_curve, is_isomorphic, medial, parse_map, premedial_pair,
    straight_ahead_curves,
)

from conftest import plane_maps, planar_graphs
from oracles import naive_face_count


def relabel(m: PlaneMap, seed: int) -> PlaneMap:
    p = list(range(m.dart_count))
    random.Random(seed).shuffle(p)
    twin = [0] * m.dart_count
    nxt = [0] * m.dart_count
    for d in range(m.dart_count):
        twin[p[d]] = p[m.twin[d]]
        nxt[p[d]] = p[m.next[d]]
    curve = None
    if m.curve is not None:
        curve = [0] * m.dart_count
        for d in range(m.dart_count):
            curve[p[d]] = m.curve[d]
    return PlaneMap(tuple(twin), tuple(nxt), None if curve is None else tuple(curve))


# -- parsing ---------------------------------------------------------------

def test_two_circles_text(fx):
    m = fx("two_circles").map
    assert (m.num_vertices, m.num_edges, m.num_faces) == (2, 4, 4)
    assert parse_map(format_map(m)) == m


@pytest.mark.parametrize("text, exc", [
    ("", ParseError),
    ("planemap-v2 2\ntwin: 1 0\nnext: 0 1\n", ParseError),
    ("planemap-v1 x\ntwin: 1 0\nnext: 0 1\n", ParseError),
    ("planemap-v1 2\ntwin: 1 0\n", ParseError),
    ("planemap-v1 2\ntwin: 1 0 3\nnext: 0 1\n", ParseError),
    ("planemap-v1 2\ntwin: 1 a\nnext: 0 1\n", ParseError),
    ("planemap-v1 2\ntwin: 1 0\nnext: 0 1\nnext: 0 1\n", ParseError),
    ("planemap-v1 2\ntwin: 1 0\nnext: 0 5\n", NotPermutation),
    ("planemap-v1 2\ntwin: 0 1\nnext: 0 1\n", NotInvolution),
    ("planemap-v1 4\ntwin: 1 0 3 2\nnext: 1 1 2 3\n", NotPermutation),
    ("planemap-v1 4\ntwin: 1 0 3 2\nnext: 0 1 2 3\n", Disconnected),
    # one vertex, two loops interleaved: a torus
    ("planemap-v1 4\ntwin: 2 3 0 1\nnext: 1 2 3 0\n", EulerViolation),
    ("planemap-v1 2\ntwin: 1 0\nnext: 0 1\ncurve: 0 1\n", ParseError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_map(text)


def test_parse_accepts_bytes_and_blank_lines():
    m = parse_map(b"\nplanemap-v1 2\n\ntwin: 1 0\nnext: 0 1\n\n")
    assert (m.num_vertices, m.num_edges, m.num_faces) == (2, 1, 1)


@given(plane_maps())
def test_format_round_trip(m):
    assert parse_map(format_map(m)) == m


# -- structure ---------------------------------------------------------------

@given(plane_maps())
def test_euler_and_face_count(m):
    assert naive_face_count(m) == m.num_faces
    assert m.num_vertices - m.num_edges + m.num_faces == 2
    assert sum(len(f) for f in m.faces) == m.dart_count


@given(planar_graphs())
def test_from_graph_keeps_graph(g):
    m = from_graph(g)
    assert nx.is_isomorphic(m.graph(), nx.convert_node_labels_to_integers(g, ordering="sorted"))


def test_from_graph_rejects_k5():
    with pytest.raises(EulerViolation):
        from_graph(nx.complete_graph(5))


@given(planar_graphs(min_n=4))
def test_cut_structure_matches_networkx(g):
    m = from_graph(g)
    rep = analyze(m)
    h = m.graph()
    assert set(rep.cut_vertices) == set(nx.articulation_points(h))
    assert rep.bridgeless == (not any(True for _ in nx.bridges(h)))
    assert rep.two_connected == nx.is_biconnected(h)


def test_analyze_cube(cube):
    lines = analyze(cube).lines()
    assert "V: 8" in lines and "E: 12" in lines and "F: 6" in lines
    assert "degree_histogram: 3:8" in lines
    assert "two_connected: true" in lines


# -- duality and medials ------------------------------------------------------

@given(plane_maps())
def test_dual_counts_and_involution(m):
    d = dual(m)
    assert (d.num_vertices, d.num_edges, d.num_faces) == (m.num_faces, m.num_edges, m.num_vertices)
    assert is_isomorphic(dual(d), m)


@given(plane_maps())
def test_medial_properties(h):
    g = medial(h)
    assert g.num_vertices == h.num_edges
    assert all(len(v) == 4 for v in g.vertices)
    assert g.num_faces == h.num_vertices + h.num_faces
    two = face_two_coloring(g)
    for d, t in g.edges:
        assert two.color[g.face_of[d]] != two.color[g.face_of[t]]


@given(plane_maps())
def test_premedials_recover_map_and_dual(h):
    pair = premedial_pair(medial(h))
    ok = (is_isomorphic(pair[0], h) and is_isomorphic(pair[1], dual(h))) or \
         (is_isomorphic(pair[1], h) and is_isomorphic(pair[0], dual(h)))
    assert ok


def test_face_two_coloring_rejects_odd_degree(cube):
    with pytest.raises(OddVertex):
        face_two_coloring(cube)


def test_face_two_coloring_convention(octahedron):
    two = face_two_coloring(octahedron.map)
    assert two.color[octahedron.map.face_of[0]] == 0
    assert len(two.black()) == len(two.white()) == 4
    assert two.swapped().black() == two.white()


# -- canonical form ---------------------------------------------------------

@given(plane_maps(), st.integers(0, 10**6))
def test_canonical_form_ignores_labels(m, seed):
    r = relabel(m, seed)
    assert canonical_form(r) == canonical_form(m)
    assert is_isomorphic(r, m)
    assert is_isomorphic(m.mirror(), m)


def test_canonical_form_separates_cube_and_octahedron(cube, octahedron):
    assert not is_isomorphic(cube, octahedron.map)
    assert is_isomorphic(dual(cube), octahedron.map)


def test_mirror_is_an_involution(fx):
    m = fx("fig4_n7").map
    assert m.mirror().mirror() == m


# -- curves -------------------------------------------------------------------

def test_straight_ahead_on_octahedron(octahedron):
    assert len(set(octahedron.map.curve)) == 3


def test_insert_curve_around_vertex(octahedron):
    m = octahedron.map
    out, rec = insert_curve(m, list(m.vertices[0]))
    assert rec.vertex_delta == 4 and rec.edge_delta == 8
    assert rec.new_curve == max(m.curve) + 1
    assert out.num_vertices - out.num_edges + out.num_faces == 2
    assert all(len(x) == 4 for x in out.vertices)
    assert set(out.curve) == set(m.curve) | {rec.new_curve}


def test_insert_curve_errors(octahedron):
    m = octahedron.map
    tri = list(m.faces[0])
    with pytest.raises(NotCocycle):
        insert_curve(m, tri[:1])
    with pytest.raises(DuplicateEdge):
        insert_curve(m, [tri[0], m.twin[tri[0]]])
    far = [d for d in range(m.dart_count)
           if m.face_of[d] != m.face_of[tri[0]] and m.face_of[m.twin[d]] != m.face_of[tri[0]]
           and m.face_of[d] != m.face_of[m.twin[tri[0]]] and m.face_of[m.twin[d]] != m.face_of[m.twin[tri[0]]]]
    with pytest.raises(NotCocycle):
        insert_curve(m, [tri[0], far[0]])


def test_straight_ahead_curves_of_medials_have_degree_four(cube):
    g = straight_ahead_curves(medial(cube))
    assert g.curve is not None and len(g.curve) == g.dart_count
