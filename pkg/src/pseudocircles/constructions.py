"""Graph surgery on maps and arrangements.

corona
    a new curve hugging a pentagonal cell;
crown
    Koester's replacement of an odd face by a ring of new vertices;
add_parallel_triple / make_intersecting
    two parallel copies of a curve, later braided so all three cross;
expand_vertex / gen_unique3ec
    triangle insertion in cubic maps.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import networkx as nx

from .arrangement import Arrangement, as_arrangement, curve_sides
from .coloring import VertexColoring, count_edge_three_colorings, is_proper, k_color
from .errors import (
    BadIndex,
    DegenerateFace,
    EvenFace,
    IsolatedCurve,
    NeighborNotTriangle,
    NotCubic,
    NotFourRegular,
    NotPentagon,
    NotProper,
    NotThreeColors,
    SameSite,
    SharedOutwardEdge,
    SiteNotOnBundle,
)
from .planemap import (
    ConstructionReceipt,
    PlaneMap,
    from_graph,
    from_rotations,
    insert_curve,
    rotations_of,
)


def _keyed(m: PlaneMap):
    """Rotations and mates of ``m`` with keys ``("o", dart)``."""
    rot, mate = rotations_of(m)
    rot = [[("o", d) for d in r] for r in rot]
    mate = {("o", d): ("o", t) for d, t in mate.items()}
    curve = None if m.curve is None else {("o", d): m.curve[d] for d in range(m.dart_count)}
    return rot, mate, curve


def _pair(mate: dict, a, b) -> None:
    mate[a] = b
    mate[b] = a


# --------------------------------------------------------------------------
# corona

def corona_crossings(m: PlaneMap, pentagon: int) -> list[int]:
    """The 10 outward darts at the corners of ``pentagon`` in the cyclic
    order a curve around it meets them."""
    darts = m.faces[pentagon]
    if len(darts) != 5:
        raise NotPentagon(f"face {pentagon} has {len(darts)} sides")
    for d in darts:
        if len(m.faces[m.face_of[m.twin[d]]]) != 3:
            raise NeighborNotTriangle(f"the face across dart {d} is not a triangle")
    seq = []
    for d in darts:
        back = m.twin[d]  # leaves the corner at head(d) towards the previous corner
        # rotation at the corner: back, the next boundary dart, then the two outward darts
        seq += [m.prev[back], m.next[m.next[back]]]
    if len({m.edge_of[d] for d in seq}) != 10:
        raise SharedOutwardEdge("two corners of the pentagon share an outward edge")
    return seq


def corona(a: Arrangement, pentagon: int) -> tuple[Arrangement, ConstructionReceipt]:
    m = a.map
    seq = corona_crossings(m, pentagon)
    out, rec = insert_curve(m, seq)
    receipt = ConstructionReceipt(
        operation="corona", vertex_delta=rec.vertex_delta, edge_delta=rec.edge_delta,
        new_curve=rec.new_curve, dart_map=rec.dart_map, extra={"pentagon": pentagon},
    )
    return as_arrangement(out), receipt


# --------------------------------------------------------------------------
# crowning

# Ring built inside an odd face x_0 .. x_{k-1}: every corner x_i gets two
# new neighbours r(i,1), r(i,2) replacing its two face edges, and a central
# k-gon a_0 .. a_{k-1} is stitched to the ring.  Counterclockwise rotations:
#   r(i,1): x_i, r(i-1,2), a_{i-1}, r(i,2)
#   r(i,2): x_i, r(i,1), a_i, r(i+1,1)
#   a_i:    r(i,2), a_{i-1}, a_{i+1}, r(i+1,1)
CROWN_VERTEX_DELTA_PER_SIDE = 3


def crown(m: PlaneMap, odd_face: int) -> tuple[PlaneMap, ConstructionReceipt]:
    for v, darts in enumerate(m.vertices):
        if len(darts) != 4:
            raise NotFourRegular(f"vertex {v} has degree {len(darts)}")
    darts = m.faces[odd_face]
    k = len(darts)
    if k % 2 == 0:
        raise EvenFace(f"face {odd_face} has even length {k}")
    corners = [m.vertex_of[d] for d in darts]
    if len(set(corners)) != k:
        raise DegenerateFace(f"face {odd_face} visits a vertex twice")
    rot, mate, _ = _keyed(m)
    for d in darts:
        mate.pop(("o", d), None)
        mate.pop(("o", m.twin[d]), None)

    def r(i, s):
        return ("r", i % k, s)

    def a_(i):
        return ("a", i % k)

    def link(u, v):
        _pair(mate, (u, v), (v, u))

    for i, d in enumerate(darts):
        # corner x_i = tail(d_i); its face darts are d_i and twin(d_{i-1})
        v = corners[i]
        back = m.twin[darts[i - 1]]
        r_ = rot[v]
        r_[r_.index(("o", back))] = ("x", i, 1)
        r_[r_.index(("o", d))] = ("x", i, 2)
        _pair(mate, ("x", i, 1), (r(i, 1), ("x", i)))
        _pair(mate, ("x", i, 2), (r(i, 2), ("x", i)))
    for i in range(k):
        rot.append([(r(i, 1), ("x", i)), (r(i, 1), r(i - 1, 2)), (r(i, 1), a_(i - 1)), (r(i, 1), r(i, 2))])
        rot.append([(r(i, 2), ("x", i)), (r(i, 2), r(i, 1)), (r(i, 2), a_(i)), (r(i, 2), r(i + 1, 1))])
        rot.append([(a_(i), r(i, 2)), (a_(i), a_(i - 1)), (a_(i), a_(i + 1)), (a_(i), r(i + 1, 1))])
        link(r(i, 1), r(i, 2))
        link(r(i, 2), r(i + 1, 1))
        link(a_(i), r(i, 2))
        link(a_(i), r(i + 1, 1))
        link(a_(i), a_(i + 1))
    out, index = from_rotations(rot, mate)
    central = index[(a_(0), a_(1))]
    receipt = ConstructionReceipt(
        operation="crown",
        vertex_delta=out.num_vertices - m.num_vertices,
        edge_delta=out.num_edges - m.num_edges,
        dart_map={d: index[("o", d)] for d in range(m.dart_count) if ("o", d) in index},
        extra={"face_length": k, "central_face": out.face_of[central]},
    )
    return out, receipt


# --------------------------------------------------------------------------
# parallel triples

@dataclass(frozen=True)
class GridSite:
    """The 2x3 grid between crossings ``index`` and ``index+1`` of a tripled
    curve.  ``darts`` are the three darts leaving the left column along
    C, C' and C'' (inner to outer)."""
    curve: int
    index: int
    darts: tuple[int, int, int]


@dataclass(frozen=True)
class Bundle:
    """Bookkeeping returned by :func:`add_parallel_triple`."""
    curves: tuple[int, int, int]
    triples: dict            # old vertex on C -> (v, v', v'') in the new map
    vertex_map: dict         # every old vertex -> new vertex
    inside: tuple[int, ...]  # old vertices inside C
    outside: tuple[int, ...]
    columns: tuple[tuple[int, int, int], ...]  # new (v, v', v'') in curve order
    lanes: tuple[tuple[int, int, int], ...]    # forward darts of C, C', C'' per column

    def site(self, index: int) -> GridSite:
        if not 0 <= index < len(self.columns):
            raise BadIndex(f"site index {index} out of range")
        return GridSite(self.curves[0], index, self.lanes[index])

    def sites(self) -> list[GridSite]:
        return [self.site(i) for i in range(len(self.columns))]


def add_parallel_triple(
    a: Arrangement, c: int, outer_face: int | None = None
) -> tuple[Arrangement, ConstructionReceipt, Bundle]:
    """Add curves C', C'' running parallel to ``c`` on its outer side."""
    m = a.map
    if c not in a.curve_walks:
        raise BadIndex(f"no curve {c}")
    sides = curve_sides(a, c, outer_face)
    walk = list(a.curve_walks[c])
    outside_faces = _outside_faces(a, c, sides.outer_face)
    if not outside_faces[m.face_of[walk[0]]]:
        # walk the other way round so that the outside is on the right
        walk = [m.twin[d] for d in reversed(walk)]
    if len(walk) < 2:
        raise IsolatedCurve(f"curve {c} crosses no other curve")
    # at the tail of walk[j] the rotation is: back, right, forward, left
    rights = [m.prev[d] for d in walk]
    right_index = {d: j for j, d in enumerate(rights)}
    c1 = max(m.curve) + 1
    c2 = c1 + 1
    rot, mate, curve = _keyed(m)
    L = len(walk)
    for j, d in enumerate(walk):
        o = rights[j]
        for lvl, cid in ((1, c1), (2, c2)):
            keys = [("p", j, lvl, "back"), ("p", j, lvl, "right"), ("p", j, lvl, "fwd"), ("p", j, lvl, "left")]
            rot.append(keys)
            curve[keys[0]] = curve[keys[2]] = cid
            curve[keys[1]] = curve[keys[3]] = m.curve[o]
            _pair(mate, ("p", j, lvl, "fwd"), ("p", (j + 1) % L, lvl, "back"))
        _pair(mate, ("o", o), ("p", j, 1, "left"))
        _pair(mate, ("p", j, 1, "right"), ("p", j, 2, "left"))
        t = m.twin[o]
        if t in right_index:
            _pair(mate, ("p", j, 2, "right"), ("p", right_index[t], 2, "right"))
        else:
            _pair(mate, ("p", j, 2, "right"), ("o", t))
    out, index = from_rotations(rot, mate, curve)
    vo = out.vertex_of
    vertex_map = {}
    for v, darts in enumerate(m.vertices):
        vertex_map[v] = vo[index[("o", darts[0])]]
    triples = {}
    columns = []
    lanes = []
    for j, d in enumerate(walk):
        v = m.vertex_of[d]
        col = (vertex_map[v], vo[index[("p", j, 1, "back")]], vo[index[("p", j, 2, "back")]])
        triples[v] = col
        columns.append(col)
        lanes.append((index[("o", d)], index[("p", j, 1, "fwd")], index[("p", j, 2, "fwd")]))
    bundle = Bundle(
        curves=(c, c1, c2), triples=triples, vertex_map=vertex_map,
        inside=sides.inside, outside=sides.outside,
        columns=tuple(columns), lanes=tuple(lanes),
    )
    receipt = ConstructionReceipt(
        operation="bundle",
        vertex_delta=out.num_vertices - m.num_vertices,
        edge_delta=out.num_edges - m.num_edges,
        new_curve=c1,
        dart_map={d: index[("o", d)] for d in range(m.dart_count)},
        extra={"curves": f"{c},{c1},{c2}", "crossings": L},
    )
    return as_arrangement(out), receipt, bundle


def _outside_faces(a: Arrangement, c: int, outer_face: int) -> list[bool]:
    m = a.map
    reach = [False] * m.num_faces
    reach[outer_face] = True
    stack = [outer_face]
    while stack:
        f = stack.pop()
        for d in m.faces[f]:
            if m.curve[d] != c:
                g = m.face_of[m.twin[d]]
                if not reach[g]:
                    reach[g] = True
                    stack.append(g)
    return reach


def lift_coloring(phi: VertexColoring | Mapping, bundle: Bundle) -> VertexColoring:
    """Carry a proper 3-coloring across :func:`add_parallel_triple`.

    Inside vertices keep their color, a crossing ``v`` of ``C`` gives
    ``v, v', v''`` the colors ``phi(v), phi(v)+1, phi(v)+2`` and outside
    vertices are shifted by 2 (all mod 3).
    """
    color = phi.color if isinstance(phi, VertexColoring) else dict(phi)
    if any(c not in (0, 1, 2) for c in color.values()):
        raise NotThreeColors("colors must lie in {0, 1, 2}")
    out = {}
    for v in bundle.inside:
        out[bundle.vertex_map[v]] = color[v]
    for v in bundle.outside:
        out[bundle.vertex_map[v]] = (color[v] + 2) % 3
    for v, (x, y, z) in bundle.triples.items():
        out[x] = color[v]
        out[y] = (color[v] + 1) % 3
        out[z] = (color[v] + 2) % 3
    return VertexColoring(out, 3)


def check_lift_input(a: Arrangement, phi: VertexColoring | Mapping) -> None:
    color = phi.color if isinstance(phi, VertexColoring) else dict(phi)
    if any(c not in (0, 1, 2) for c in color.values()):
        raise NotThreeColors("colors must lie in {0, 1, 2}")
    if not is_proper(a, color):
        raise NotProper("input coloring is not proper")


# --------------------------------------------------------------------------
# braiding a bundle

VARIANTS = ("middle", "right")
# adjacent transpositions of lanes (0 = C innermost, 2 = C'' outermost)
_SWAPS = {"middle": (0, 1, 0), "right": (1, 0, 1)}


def _check_site(m: PlaneMap, site: GridSite) -> tuple[int, int, int]:
    try:
        darts = tuple(int(d) for d in site.darts)
        if len(darts) != 3 or any(not 0 <= d < m.dart_count for d in darts):
            raise SiteNotOnBundle("grid site darts out of range")
        tails = [m.vertex_of[d] for d in darts]
        heads = [m.vertex_of[m.twin[d]] for d in darts]
    except (TypeError, ValueError) as exc:
        raise SiteNotOnBundle(str(exc)) from exc
    adjacent = set()
    for x, y in m.edges:
        adjacent.add((m.vertex_of[x], m.vertex_of[y]))
        adjacent.add((m.vertex_of[y], m.vertex_of[x]))
    curves = {m.curve[d] for d in darts}
    ok = len(curves) == 3 and len(set(tails) | set(heads)) == 6
    for col in (tails, heads):
        ok = ok and (col[0], col[1]) in adjacent and (col[1], col[2]) in adjacent
    if not ok:
        raise SiteNotOnBundle(f"darts {darts} do not span a 2x3 grid")
    return darts


def make_intersecting(
    a: Arrangement, s1: GridSite, s2: GridSite, v1: str = "middle", v2: str = "right"
) -> tuple[Arrangement, ConstructionReceipt]:
    """Replace the grids at two sites by three pairwise crossings each."""
    if (s1.curve, s1.index) == (s2.curve, s2.index) or tuple(s1.darts) == tuple(s2.darts):
        raise SameSite("the two grid sites coincide")
    if s1.curve != s2.curve:
        raise SiteNotOnBundle("sites lie on different bundles")
    for v in (v1, v2):
        if v not in _SWAPS:
            raise ValueError(f"unknown variant {v!r}; choose from {VARIANTS}")
    m = a.map
    sites = [_check_site(m, s1), _check_site(m, s2)]
    used = [m.edge_of[d] for s in sites for d in s]
    if len(set(used)) != 6:
        raise SameSite("the two grid sites share an edge")
    bundle_curves = {m.curve[d] for s in sites for d in s}
    rot, mate, _ = _keyed(m)
    new_keys = []
    for s_no, (darts, variant) in enumerate(zip(sites, (v1, v2))):
        ends = [("o", d) for d in darts]
        for d in darts:
            mate.pop(("o", d), None)
            mate.pop(("o", m.twin[d]), None)
        for t, lane in enumerate(_SWAPS[variant]):
            # lane is north of lane+1 when facing forward; ccw rotation
            # starting east: NE, NW, SW, SE
            x = ("x", s_no, t)
            keys = [(x, "NE"), (x, "NW"), (x, "SW"), (x, "SE")]
            rot.append(keys)
            new_keys.append(keys[0])
            _pair(mate, (x, "NW"), ends[lane])
            _pair(mate, (x, "SW"), ends[lane + 1])
            ends[lane], ends[lane + 1] = (x, "NE"), (x, "SE")
        for lane, d in enumerate(darts):
            _pair(mate, ends[lane], ("o", m.twin[d]))
    out, index = from_rotations(rot, mate)
    # relabel curves: untouched curves by any of their darts, bundle curves by
    # the dart they leave the first site with
    label = [-1] * out.dart_count
    seeds = []
    for d in range(m.dart_count):
        key = ("o", d)
        if key in index and m.curve[d] not in bundle_curves:
            seeds.append((index[key], m.curve[d]))
    for d in sites[0]:
        seeds.append((index[("o", d)], m.curve[d]))
    for start, cid in seeds:
        if label[start] != -1:
            continue
        d = start
        while label[d] == -1:
            label[d] = label[out.twin[d]] = cid
            d = out.next[out.next[out.twin[d]]]
    out = out.with_curves(label)
    new_vertices = sorted({out.vertex_of[index[k]] for k in new_keys})
    receipt = ConstructionReceipt(
        operation="make_intersecting",
        vertex_delta=out.num_vertices - m.num_vertices,
        edge_delta=out.num_edges - m.num_edges,
        dart_map={d: index[("o", d)] for d in range(m.dart_count)},
        extra={"new_vertices": ",".join(map(str, new_vertices)), "variants": f"{v1},{v2}"},
    )
    return as_arrangement(out), receipt


def vertex_map_of(old: PlaneMap, new: PlaneMap, receipt: ConstructionReceipt) -> dict[int, int]:
    """Old vertex -> new vertex through a receipt's dart map."""
    out = {}
    for v, darts in enumerate(old.vertices):
        for d in darts:
            if d in receipt.dart_map:
                out[v] = new.vertex_of[receipt.dart_map[d]]
                break
    return out


def extend_coloring(g, partial: Mapping, k: int = 3) -> VertexColoring | None:
    """Complete a partial proper coloring by exact search (``None`` if it
    cannot be completed)."""
    return k_color(g, k, fixed=dict(partial))


# --------------------------------------------------------------------------
# cubic maps

def k4_map() -> PlaneMap:
    return from_graph(nx.complete_graph(4))


def expand_vertex(h: PlaneMap, v: int) -> PlaneMap:
    """Replace vertex ``v`` of a cubic map by a triangle."""
    for u, darts in enumerate(h.vertices):
        if len(darts) != 3:
            raise NotCubic(f"vertex {u} has degree {len(darts)}")
    if not 0 <= v < h.num_vertices:
        raise BadIndex(f"vertex {v} out of range")
    rot, mate, _ = _keyed(h)
    old = rot[v]
    tri = []
    for i, key in enumerate(old):
        tri.append([key, ("t", i, "+"), ("t", i, "-")])
    for i in range(3):
        _pair(mate, ("t", i, "+"), ("t", (i + 1) % 3, "-"))
    rot = rot[:v] + rot[v + 1:] + tri
    return from_rotations(rot, mate)[0]


def gen_unique3ec(seq: Sequence[int]) -> PlaneMap:
    """Start from K4 and expand the listed vertices one after another.

    The result is checked to have exactly the 6 edge 3-colorings that come
    from permuting colors.
    """
    h = k4_map()
    for step, v in enumerate(seq):
        if not 0 <= v < h.num_vertices:
            raise BadIndex(f"step {step}: vertex {v} out of range 0..{h.num_vertices - 1}")
        h = expand_vertex(h, v)
    count = count_edge_three_colorings(h, limit=7)
    assert count == 6, f"expected a uniquely 3-edge-colorable map, found {count} colorings"
    return h
