import networkx as nx
import pytest
from hypothesis import assume, given

from pseudocircles.arrangement import as_arrangement, is_great, is_intersecting
from pseudocircles.coloring import chromatic_number, is_proper, k_color
from pseudocircles.constructions import (
    GridSite, VARIANTS, add_parallel_triple, check_lift_input, corona,
    corona_crossings, crown, expand_vertex, extend_coloring, gen_unique3ec,
    k4_map, lift_coloring, make_intersecting, vertex_map_of,
)
from pseudocircles.errors import (
    BadIndex, EvenFace, NeighborNotTriangle, NotCubic, NotFourRegular,
    NotPentagon, NotProper, NotThreeColors, SameSite, SiteNotOnBundle,
)
from pseudocircles.planemap import face_two_coloring, is_isomorphic

from conftest import arrangements


def faces_of_length(m, k):
    return [f for f, d in enumerate(m.faces) if len(d) == k]


@pytest.fixture(scope="module")
def fig6a(fx):
    return as_arrangement(fx("fig6a").map)


@pytest.fixture(scope="module")
def tripled(octahedron):
    return add_parallel_triple(octahedron, 0)


# -- corona --------------------------------------------------------------------

def test_corona_reproduces_fixture(fig6a, fx):
    p = faces_of_length(fig6a.map, 5)[0]
    b, rec = corona(fig6a, p)
    assert (rec.vertex_delta, rec.edge_delta) == (10, 20)
    assert rec.new_curve == 6 and b.n == 7
    assert is_isomorphic(b.map, fx("fig6b").map)
    assert len(corona_crossings(fig6a.map, p)) == 10


def test_corona_errors(fig6a, fx):
    with pytest.raises(NotPentagon):
        corona(fig6a, faces_of_length(fig6a.map, 3)[0])
    b = as_arrangement(fx("fig6b").map)
    with pytest.raises(NeighborNotTriangle):
        corona(b, 1)


# -- crown ---------------------------------------------------------------------

@pytest.mark.parametrize("k", [3, 5])
def test_crown_deltas(fig6a, k):
    m = fig6a.map
    out, rec = crown(m, faces_of_length(m, k)[0])
    assert rec.vertex_delta == 3 * k and rec.edge_delta == 6 * k
    assert all(len(v) == 4 for v in out.vertices)
    assert len(out.faces[rec.extra["central_face"]]) == k
    face_two_coloring(out)


def test_crown_and_corona_differ(fig6a):
    p = faces_of_length(fig6a.map, 5)[0]
    assert not is_isomorphic(crown(fig6a.map, p)[0], corona(fig6a, p)[0].map)


def test_crown_errors(fx, cube):
    m = fx("fig1b").map
    with pytest.raises(EvenFace):
        crown(m, faces_of_length(m, 4)[0])
    with pytest.raises(NotFourRegular):
        crown(cube, 0)


# -- parallel triples ------------------------------------------------------------

def test_bundle_counts(tripled, octahedron):
    b, rec, bundle = tripled
    assert octahedron.map.num_vertices == 6 and b.map.num_vertices == 14
    assert (rec.vertex_delta, rec.edge_delta) == (8, 16)
    assert bundle.curves == (0, 3, 4)
    assert len(bundle.sites()) == 4
    assert not is_intersecting(b)
    with pytest.raises(BadIndex):
        bundle.site(4)
    with pytest.raises(BadIndex):
        add_parallel_triple(octahedron, 9)


def test_lift_coloring_is_proper(tripled, octahedron):
    b, _, bundle = tripled
    phi = k_color(octahedron, 3)
    check_lift_input(octahedron, phi)
    lifted = lift_coloring(phi, bundle)
    assert is_proper(b, lifted)
    for v, (x, y, z) in bundle.triples.items():
        assert {lifted[x], lifted[y], lifted[z]} == {0, 1, 2}


def test_lift_input_errors(octahedron, tripled):
    with pytest.raises(NotThreeColors):
        check_lift_input(octahedron, {v: 5 for v in range(6)})
    with pytest.raises(NotProper):
        check_lift_input(octahedron, {v: 0 for v in range(6)})
    with pytest.raises(NotThreeColors):
        lift_coloring({v: 3 for v in range(6)}, tripled[2])


@given(arrangements(max_steps=3))
def test_lift_on_random_arrangements(a):
    phi = k_color(a, 3)
    assume(phi is not None)
    for c in a.curve_ids[:2]:
        b, rec, bundle = add_parallel_triple(a, c)
        assert rec.vertex_delta == 2 * len(a.curve_walks[c])
        assert is_proper(b, lift_coloring(phi, bundle))


# -- braiding ----------------------------------------------------------------------

@pytest.mark.parametrize("v1", VARIANTS)
@pytest.mark.parametrize("v2", VARIANTS)
def test_make_intersecting(tripled, v1, v2):
    b, _, bundle = tripled
    s = bundle.sites()
    out, rec = make_intersecting(b, s[0], s[2], v1, v2)
    assert b.map.num_vertices == 14 and out.map.num_vertices == 20
    assert rec.vertex_delta == 6
    assert is_intersecting(out)
    # opposite sites braided by different swap patterns give great curves
    assert is_great(out) == (v1 != v2)


def test_coloring_extends_after_braiding(tripled, octahedron):
    b, _, bundle = tripled
    lifted = lift_coloring(k_color(octahedron, 3), bundle)
    s = bundle.sites()
    out, rec = make_intersecting(b, s[0], s[2])
    vmap = vertex_map_of(b.map, out.map, rec)
    assert len(vmap) == 14
    col = extend_coloring(out, {vmap[v]: c for v, c in lifted.color.items()})
    assert col is not None and is_proper(out, col)
    assert all(col[vmap[v]] == c for v, c in lifted.color.items())
    assert chromatic_number(out)[0] == 3


def test_make_intersecting_errors(tripled):
    b, _, bundle = tripled
    s = bundle.sites()
    with pytest.raises(SameSite):
        make_intersecting(b, s[1], s[1])
    with pytest.raises(SameSite):
        make_intersecting(b, s[0], GridSite(s[0].curve, 3, s[0].darts))
    with pytest.raises(SiteNotOnBundle):
        make_intersecting(b, s[0], GridSite(s[0].curve, 7, (0, 1, 2)))
    with pytest.raises(ValueError):
        make_intersecting(b, s[0], s[2], "left")


# -- cubic expansions ------------------------------------------------------------

def test_expand_vertex():
    h = expand_vertex(k4_map(), 0)
    assert (h.num_vertices, h.num_edges, h.num_faces) == (6, 9, 5)
    assert nx.is_isomorphic(h.graph(), nx.circular_ladder_graph(3))
    with pytest.raises(BadIndex):
        expand_vertex(k4_map(), 4)
    with pytest.raises(NotCubic):
        expand_vertex(h.__class__(*_octahedral()), 0)
    with pytest.raises(BadIndex):
        gen_unique3ec([0, 99])


def _octahedral():
    from pseudocircles.planemap import from_graph
    m = from_graph(nx.octahedral_graph())
    return m.twin, m.next
