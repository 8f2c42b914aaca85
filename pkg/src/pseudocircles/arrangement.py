"""Arrangements of pseudocircles as curve-labelled 4-regular plane maps.

Every dart carries the id of the curve it runs along (twin-invariant), so
the straight continuation of a dart arriving at a vertex is two steps
further in the rotation.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import networkx as nx

from .errors import (
    CurveNotClosed,
    MissingCurves,
    NonTransversalVertex,
    NotAutomorphism,
    NotDegreeFour,
    NotIntersecting,
    TangentOrTriplePoint,
)
from .planemap import PlaneMap, face_two_coloring, from_rotations


@dataclass(frozen=True)
class Arrangement:
    map: PlaneMap

    @property
    def curve_of(self) -> tuple[int, ...]:
        return self.map.curve

    @cached_property
    def curve_ids(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.map.curve)))

    @property
    def n(self) -> int:
        return len(self.curve_ids)

    def continue_straight(self, d: int) -> int:
        """The dart leaving the head of ``d`` along the same curve."""
        m = self.map
        return m.next[m.next[m.twin[d]]]

    @cached_property
    def curve_walks(self) -> dict[int, tuple[int, ...]]:
        """Per curve, its darts in order along one traversal, starting from
        the smallest dart carrying that label."""
        m = self.map
        walks = {}
        for d in range(m.dart_count):
            c = m.curve[d]
            if c in walks:
                continue
            walk = [d]
            e = self.continue_straight(d)
            while e != d:
                walk.append(e)
                e = self.continue_straight(e)
            walks[c] = tuple(walk)
        return walks

    @cached_property
    def curve_vertices(self) -> dict[int, tuple[int, ...]]:
        """Vertices of each curve in traversal order."""
        vo = self.map.vertex_of
        return {c: tuple(vo[d] for d in walk) for c, walk in self.curve_walks.items()}

    @cached_property
    def crossing_pair(self) -> tuple[tuple[int, int], ...]:
        """Per vertex, the sorted pair of curves crossing there."""
        m = self.map
        out = []
        for darts in m.vertices:
            a, b = m.curve[darts[0]], m.curve[darts[1]]
            out.append((min(a, b), max(a, b)))
        return tuple(out)

    @cached_property
    def crossing_sequences(self) -> dict[int, tuple[int, ...]]:
        """Per curve, the partners met along its traversal."""
        m = self.map
        seqs = {}
        for c, walk in self.curve_walks.items():
            seqs[c] = tuple(m.curve[m.next[d]] for d in walk)
        return seqs

    @cached_property
    def pair_vertices(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for v, p in enumerate(self.crossing_pair):
            out.setdefault(p, []).append(v)
        return {p: tuple(vs) for p, vs in out.items()}

    def graph(self) -> nx.Graph:
        return self.map.graph()


def as_arrangement(m: PlaneMap) -> Arrangement:
    """Validate ``m`` as a simple arrangement of pseudocircles."""
    if m.curve is None:
        raise MissingCurves("map has no curve labels")
    for v, darts in enumerate(m.vertices):
        if len(darts) != 4:
            raise NotDegreeFour(f"vertex {v} has degree {len(darts)}")
        a, b, a2, b2 = (m.curve[d] for d in darts)
        if a != a2 or b != b2 or a == b:
            raise NonTransversalVertex(f"vertex {v} has curve pattern {a},{b},{a2},{b2}")
    arr = Arrangement(m)
    label_count = Counter(m.curve)
    for c, walk in arr.curve_walks.items():
        if 2 * len(walk) != label_count[c]:
            raise CurveNotClosed(f"curve {c} splits into several closed walks")
    for pair, vs in arr.pair_vertices.items():
        if len(vs) != 2:
            raise TangentOrTriplePoint(f"curves {pair[0]} and {pair[1]} share {len(vs)} vertices")
    return arr


# --------------------------------------------------------------------------
# predicates

def is_intersecting(a: Arrangement) -> bool:
    return len(a.pair_vertices) == a.n * (a.n - 1) // 2


def is_great(a: Arrangement) -> bool:
    """Intersecting and every crossing sequence is (n-1)-periodic."""
    if not is_intersecting(a):
        return False
    period = a.n - 1
    for seq in a.crossing_sequences.values():
        if any(seq[i] != seq[(i + period) % len(seq)] for i in range(len(seq))):
            return False
    return True


def subarrangement(a: Arrangement, curves) -> PlaneMap:
    """The arrangement induced by a subset of curves.

    Each kept crossing keeps its four darts; a dart now leads to the next
    kept crossing along its curve.  Every kept curve must cross another
    kept curve, otherwise the induced map would be disconnected.
    """
    keep = set(curves)
    m = a.map
    kept_v = [v for v, (p, q) in enumerate(a.crossing_pair) if p in keep and q in keep]
    kept = set(kept_v)
    rotations = [list(m.vertices[v]) for v in kept_v]
    mate = {}
    curve_of = {}
    for v in kept_v:
        for d in m.vertices[v]:
            curve_of[d] = m.curve[d]
            e = d
            while True:
                t = m.twin[e]
                if m.vertex_of[t] in kept:
                    mate[d] = t
                    break
                e = m.next[m.next[t]]
    return from_rotations(rotations, mate, curve_of)[0]


def is_great_by_triples(a: Arrangement) -> bool:
    """Intersecting and every three curves induce only triangular faces."""
    if not is_intersecting(a):
        return False
    for trio in combinations(a.curve_ids, 3):
        sub = subarrangement(a, trio)
        if any(len(f) != 3 for f in sub.faces):
            return False
    return True


def triangle_classes(a: Arrangement) -> tuple[bool, bool]:
    """For each face color class (black, white): does it consist only of
    triangles?"""
    m = a.map
    coloring = face_two_coloring(m)
    all_tri = [True, True]
    for f, darts in enumerate(m.faces):
        if len(darts) != 3:
            all_tri[coloring.color[f]] = False
    return all_tri[0], all_tri[1]


def is_triangle_saturated(a: Arrangement) -> bool:
    return any(triangle_classes(a))


def is_diamond_free(a: Arrangement) -> bool:
    m = a.map
    tri = [len(f) == 3 for f in m.faces]
    return not any(tri[m.face_of[d]] and tri[m.face_of[t]] for d, t in m.edges)


@dataclass(frozen=True)
class ArrangementReport:
    n: int
    V: int
    E: int
    F: int
    intersecting: bool
    great: bool
    great_by_triples: bool
    triangle_saturated: bool
    diamond_free: bool
    crossing_sequences: dict

    def lines(self) -> list[str]:
        def b(x):
            return str(x).lower()
        out = [f"n: {self.n}", f"V: {self.V}", f"E: {self.E}", f"F: {self.F}",
               f"intersecting: {b(self.intersecting)}",
               f"great: {b(self.great)}",
               f"great_by_triples: {b(self.great_by_triples)}",
               f"triangle_saturated: {b(self.triangle_saturated)}",
               f"diamond_free: {b(self.diamond_free)}"]
        for c in sorted(self.crossing_sequences):
            seq = ",".join(map(str, self.crossing_sequences[c]))
            out.append(f"sequence_{c}: {seq}")
        return out


def properties(a: Arrangement) -> ArrangementReport:
    m = a.map
    return ArrangementReport(
        n=a.n, V=m.num_vertices, E=m.num_edges, F=m.num_faces,
        intersecting=is_intersecting(a),
        great=is_great(a),
        great_by_triples=is_great_by_triples(a),
        triangle_saturated=is_triangle_saturated(a),
        diamond_free=is_diamond_free(a),
        crossing_sequences=dict(a.crossing_sequences),
    )


# --------------------------------------------------------------------------
# intersection graph

@dataclass(frozen=True)
class IntersectionGraph:
    graph: nx.Graph
    n: int

    @property
    def min_degree(self) -> int:
        return min(d for _, d in self.graph.degree()) if self.n else 0

    @property
    def density(self) -> Fraction:
        return Fraction(self.min_degree, self.n)

    def is_complete(self) -> bool:
        return self.graph.number_of_edges() == self.n * (self.n - 1) // 2


def intersection_graph(a: Arrangement) -> IntersectionGraph:
    g = nx.Graph()
    g.add_nodes_from(a.curve_ids)
    g.add_edges_from(a.pair_vertices)
    return IntersectionGraph(g, a.n)


# --------------------------------------------------------------------------
# antipodes

@dataclass(frozen=True)
class AntipodalInvolution:
    partner: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.partner) if v < w]


def antipodal_involution(a: Arrangement) -> AntipodalInvolution:
    """Swap the two crossings of every pair of curves, provided this is an
    automorphism of the arrangement graph."""
    if not is_intersecting(a):
        raise NotIntersecting("some pair of curves does not cross")
    partner = [0] * a.map.num_vertices
    for u, v in a.pair_vertices.values():
        partner[u], partner[v] = v, u
    g = a.graph()
    for u, v in g.edges():
        if not g.has_edge(partner[u], partner[v]):
            raise NotAutomorphism(f"edge {u}-{v} maps to a non-edge")
    return AntipodalInvolution(tuple(partner))


# --------------------------------------------------------------------------
# sides of a curve

@dataclass(frozen=True)
class CurveSides:
    curve: int
    on: tuple[int, ...]
    inside: tuple[int, ...]
    outside: tuple[int, ...]
    outer_face: int


def curve_sides(a: Arrangement, c: int, outer_face: int | None = None) -> CurveSides:
    """Split the vertices off curve ``c`` by the side of ``c`` they lie on.

    The side holding ``outer_face`` (default: the face of dart 0) is the
    outside.
    """
    m = a.map
    if outer_face is None:
        outer_face = m.face_of[0]
    reach = [False] * m.num_faces
    reach[outer_face] = True
    queue = deque([outer_face])
    while queue:
        f = queue.popleft()
        for d in m.faces[f]:
            if m.curve[d] == c:
                continue
            g = m.face_of[m.twin[d]]
            if not reach[g]:
                reach[g] = True
                queue.append(g)
    on, inside, outside = [], [], []
    for v, darts in enumerate(m.vertices):
        if any(m.curve[d] == c for d in darts):
            on.append(v)
        elif reach[m.face_of[darts[0]]]:
            outside.append(v)
        else:
            inside.append(v)
    return CurveSides(c, tuple(on), tuple(inside), tuple(outside), outer_face)
