"""Combinatorial plane maps stored as rotation systems on darts.

A map on ``2E`` darts is given by two permutations:

* ``twin`` pairs the two darts of an edge (a fixed-point-free involution);
* ``next`` sends a dart to the following dart counterclockwise around its
  origin vertex.

Vertices are orbits of ``next``, edges are orbits of ``twin`` and faces are
orbits of ``d -> next(twin(d))``.  With this convention the face ``face_of[d]``
lies to the right of ``d``, so face boundaries are walked clockwise.

Maps are immutable.  Structural operations build new maps through
:func:`from_rotations`, which takes per-vertex cyclic lists of arbitrary
hashable half-edge keys.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Mapping, Sequence

import networkx as nx

from .errors import (
    Disconnected,
    DuplicateEdge,
    EulerViolation,
    NotCocycle,
    NotFourRegular,
    NotInvolution,
    NotPermutation,
    OddVertex,
    ParseError,
)

FORMAT_TAG = "planemap-v1"


@dataclass(frozen=True, eq=True)
class PlaneMap:
    twin: tuple[int, ...]
    next: tuple[int, ...]
    curve: tuple[int, ...] | None = None

    def __post_init__(self):
        _validate(self)

    # -- basic cells ------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.twin)

    @cached_property
    def prev(self) -> tuple[int, ...]:
        inv = [0] * self.dart_count
        for d, n in enumerate(self.next):
            inv[n] = d
        return tuple(inv)

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """Dart lists of every vertex, in counterclockwise order."""
        return _orbits(self.next)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _orbit_index(self.vertices, self.dart_count)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        phi = [self.next[self.twin[d]] for d in range(self.dart_count)]
        return _orbits(phi)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _orbit_index(self.faces, self.dart_count)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((d, self.twin[d]) for d in range(self.dart_count) if d < self.twin[d])

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        idx = [0] * self.dart_count
        for i, (a, b) in enumerate(self.edges):
            idx[a] = idx[b] = i
        return tuple(idx)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.dart_count // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def head(self, d: int) -> int:
        return self.vertex_of[self.twin[d]]

    def tail(self, d: int) -> int:
        return self.vertex_of[d]

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def face_vertices(self, f: int) -> list[int]:
        return [self.vertex_of[d] for d in self.faces[f]]

    def face_successor(self, d: int) -> int:
        return self.next[self.twin[d]]

    def with_curves(self, curve: Sequence[int] | None) -> "PlaneMap":
        return PlaneMap(self.twin, self.next, None if curve is None else tuple(curve))

    def mirror(self) -> "PlaneMap":
        """The same map with reversed orientation."""
        return PlaneMap(self.twin, self.prev, self.curve)

    # -- derived graphs ---------------------------------------------------

    def graph(self) -> nx.Graph:
        """Underlying simple graph on vertices ``0..V-1`` (loops dropped,
        parallel edges merged)."""
        g = nx.Graph()
        g.add_nodes_from(range(self.num_vertices))
        for a, b in self.edges:
            u, v = self.vertex_of[a], self.vertex_of[b]
            if u != v:
                g.add_edge(u, v)
        return g

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            u, v = self.vertex_of[a], self.vertex_of[b]
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True


def _orbits(perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        orbit = []
        d = s
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]
        out.append(tuple(orbit))
    return tuple(out)


def _orbit_index(orbits, n) -> tuple[int, ...]:
    idx = [0] * n
    for i, orb in enumerate(orbits):
        for d in orb:
            idx[d] = i
    return tuple(idx)


def _validate(m: PlaneMap) -> None:
    n = len(m.twin)
    if n < 2 or n % 2:
        raise NotInvolution(f"dart count must be even and >= 2, got {n}")
    if len(m.next) != n:
        raise NotPermutation("twin and next have different lengths")
    for d, t in enumerate(m.twin):
        if not 0 <= t < n:
            raise NotPermutation(f"twin[{d}]={t} out of range")
        if t == d:
            raise NotInvolution(f"twin has a fixed point at dart {d}")
        if m.twin[t] != d:
            raise NotInvolution(f"twin is not self-inverse at dart {d}")
    if sorted(m.next) != list(range(n)):
        raise NotPermutation("next is not a permutation of the darts")
    if m.curve is not None:
        if len(m.curve) != n:
            raise ParseError("curve labels must cover every dart")
        for d, t in enumerate(m.twin):
            if m.curve[d] != m.curve[t]:
                raise ParseError(f"curve label differs on the two darts of edge {d}-{t}")
    # transitivity of <twin, next>
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        d = stack.pop()
        for e in (m.twin[d], m.next[d]):
            if not seen[e]:
                seen[e] = True
                count += 1
                stack.append(e)
    if count != n:
        raise Disconnected(f"map is disconnected ({count} of {n} darts reachable)")
    chi = m.num_vertices - m.num_edges + m.num_faces
    if chi != 2:
        raise EulerViolation(f"V - E + F = {chi}, expected 2")


def from_rotations(
    rotations: Sequence[Sequence[Hashable]],
    mate: Mapping[Hashable, Hashable],
    curve_of: Mapping[Hashable, int] | None = None,
) -> tuple[PlaneMap, dict[Hashable, int]]:
    """Build a map from per-vertex counterclockwise lists of half-edge keys.

    ``mate`` must pair every key with the other end of its edge (entries in
    one direction suffice).  Returns the map and the key -> dart numbering.
    """
    index: dict[Hashable, int] = {}
    for rot in rotations:
        for k in rot:
            if k in index:
                raise NotPermutation(f"half-edge {k!r} appears twice")
            index[k] = len(index)
    full = dict(mate)
    for k, v in list(mate.items()):
        full.setdefault(v, k)
    n = len(index)
    twin = [0] * n
    nxt = [0] * n
    for rot in rotations:
        for i, k in enumerate(rot):
            if k not in full or full[k] not in index:
                raise NotInvolution(f"half-edge {k!r} has no mate")
            twin[index[k]] = index[full[k]]
            nxt[index[k]] = index[rot[(i + 1) % len(rot)]]
    curve = None
    if curve_of is not None:
        curve = tuple(curve_of[k] for rot in rotations for k in rot)
    return PlaneMap(tuple(twin), tuple(nxt), curve), index


def rotations_of(m: PlaneMap) -> tuple[list[list[int]], dict[int, int]]:
    """Inverse of :func:`from_rotations` using dart numbers as keys."""
    return [list(v) for v in m.vertices], {d: m.twin[d] for d in range(m.dart_count)}


def from_edge_rotations(adjacency: Mapping[int, Sequence[int]]) -> PlaneMap:
    """Build a simple map from ``vertex -> neighbours in ccw order``."""
    rotations = []
    mate = {}
    for v in sorted(adjacency):
        rotations.append([(v, w) for w in adjacency[v]])
        for w in adjacency[v]:
            mate[(v, w)] = (w, v)
    return from_rotations(rotations, mate)[0]


# --------------------------------------------------------------------------
# text format

def parse_map(text: str | bytes) -> PlaneMap:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != FORMAT_TAG:
        raise ParseError(f"first line must be '{FORMAT_TAG} <dart_count>'")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise ParseError("dart count is not an integer") from exc
    fields = {}
    for ln in lines[1:]:
        key, _, rest = ln.partition(":")
        if key not in ("twin", "next", "curve") or key in fields:
            raise ParseError(f"unexpected line {ln[:30]!r}")
        try:
            values = tuple(int(x) for x in rest.split())
        except ValueError as exc:
            raise ParseError(f"non-integer entry in '{key}' line") from exc
        if len(values) != n:
            raise ParseError(f"'{key}' line has {len(values)} entries, expected {n}")
        fields[key] = values
    if "twin" not in fields or "next" not in fields:
        raise ParseError("missing twin or next line")
    for key, values in fields.items():
        if key != "curve" and any(not 0 <= x < n for x in values):
            raise NotPermutation(f"'{key}' entry out of range")
    return PlaneMap(fields["twin"], fields["next"], fields.get("curve"))


def format_map(m: PlaneMap) -> str:
    out = [f"{FORMAT_TAG} {m.dart_count}",
           "twin: " + " ".join(map(str, m.twin)),
           "next: " + " ".join(map(str, m.next))]
    if m.curve is not None:
        out.append("curve: " + " ".join(map(str, m.curve)))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# structure

@dataclass(frozen=True)
class MapReport:
    V: int
    E: int
    F: int
    degree_histogram: dict[int, int]
    connected: bool
    two_connected: bool
    bridgeless: bool
    cut_vertices: tuple[int, ...] = ()
    bridges: tuple[int, ...] = ()

    def lines(self) -> list[str]:
        hist = ",".join(f"{k}:{v}" for k, v in sorted(self.degree_histogram.items()))
        return [f"V: {self.V}", f"E: {self.E}", f"F: {self.F}",
                f"degree_histogram: {hist}",
                f"connected: {str(self.connected).lower()}",
                f"two_connected: {str(self.two_connected).lower()}",
                f"bridgeless: {str(self.bridgeless).lower()}"]


def cut_structure(m: PlaneMap) -> tuple[list[int], list[int]]:
    """Cut vertices and bridge edge ids by an iterative low-point DFS."""
    nv = m.num_vertices
    disc = [-1] * nv
    low = [0] * nv
    cuts = set()
    bridges = []
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # stack entries: (vertex, edge id used to enter, iterator over darts)
    stack = [(root, -1, iter(m.vertices[root]))]
    while stack:
        v, via, it = stack[-1]
        advanced = False
        for d in it:
            e = m.edge_of[d]
            if e == via:
                continue
            w = m.head(d)
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, e, iter(m.vertices[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] > disc[p]:
                bridges.append(via)
            if p != root and low[v] >= disc[p]:
                cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    return sorted(cuts), sorted(bridges)


def analyze(m: PlaneMap) -> MapReport:
    cuts, bridges = cut_structure(m)
    hist = Counter(len(v) for v in m.vertices)
    return MapReport(
        V=m.num_vertices, E=m.num_edges, F=m.num_faces,
        degree_histogram=dict(sorted(hist.items())),
        connected=True,
        two_connected=not cuts,
        bridgeless=not bridges,
        cut_vertices=tuple(cuts),
        bridges=tuple(bridges),
    )


# --------------------------------------------------------------------------
# faces, duality, medial constructions

@dataclass(frozen=True)
class FaceTwoColoring:
    color: tuple[int, ...]  # per face: 0 = black, 1 = white

    def black(self) -> list[int]:
        return [f for f, c in enumerate(self.color) if c == 0]

    def white(self) -> list[int]:
        return [f for f, c in enumerate(self.color) if c == 1]

    def swapped(self) -> "FaceTwoColoring":
        return FaceTwoColoring(tuple(1 - c for c in self.color))


def face_two_coloring(m: PlaneMap) -> FaceTwoColoring:
    """Proper 2-coloring of the faces; the face of dart 0 is black."""
    for v, darts in enumerate(m.vertices):
        if len(darts) % 2:
            raise OddVertex(f"vertex {v} has odd degree {len(darts)}")
    color = [-1] * m.num_faces
    start = m.face_of[0]
    color[start] = 0
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for d in m.faces[f]:
            g = m.face_of[m.twin[d]]
            if color[g] == -1:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise OddVertex("dual graph is not bipartite")
    return FaceTwoColoring(tuple(color))


def dual(m: PlaneMap) -> PlaneMap:
    """Planar dual; dual vertex i is face i of ``m``."""
    rotations = []
    for f in m.faces:
        # faces are walked clockwise, so reverse for a ccw rotation
        rotations.append([("d", d) for d in reversed(f)])
    mate = {("d", d): ("d", m.twin[d]) for d in range(m.dart_count)}
    return from_rotations(rotations, mate)[0]


def medial(h: PlaneMap) -> PlaneMap:
    """Medial map.  Vertex ``i`` of the result corresponds to edge ``i`` of
    ``h`` (edges numbered as in ``h.edges``)."""
    phi_inv = [0] * h.dart_count
    for d in range(h.dart_count):
        phi_inv[h.face_successor(d)] = d
    rotations = []
    mate = {}
    for d, t in h.edges:
        rotations.append([("in", phi_inv[t]), ("out", t), ("in", phi_inv[d]), ("out", d)])
    for d in range(h.dart_count):
        mate[("out", d)] = ("in", d)
    return from_rotations(rotations, mate)[0]


def _require_four_regular(g: PlaneMap) -> None:
    for v, darts in enumerate(g.vertices):
        if len(darts) != 4:
            raise NotFourRegular(f"vertex {v} has degree {len(darts)}")


def premedial(g: PlaneMap, color_class: int) -> PlaneMap:
    """Premedial map built on the faces of one color class of ``g``."""
    return premedial_with_vertices(g, color_class)[0]


def premedial_with_vertices(g: PlaneMap, color_class: int) -> tuple[PlaneMap, tuple[int, ...]]:
    """Premedial map plus, per premedial edge, the vertex of ``g`` it
    passes through."""
    _require_four_regular(g)
    coloring = face_two_coloring(g)
    rotations = []
    mate = {}
    for f, darts in enumerate(g.faces):
        if coloring.color[f] != color_class:
            continue
        # corner at the head of d; faces are clockwise, rotations ccw
        rotations.append([("c", d) for d in reversed(darts)])
    for d in range(g.dart_count):
        if coloring.color[g.face_of[d]] == color_class:
            out = g.twin[d]
            opposite = g.twin[g.next[g.next[out]]]
            mate[("c", d)] = ("c", opposite)
    h, index = from_rotations(rotations, mate)
    through = [0] * h.num_edges
    for key, dart in index.items():
        through[h.edge_of[dart]] = g.vertex_of[g.twin[key[1]]]
    return h, tuple(through)


def premedial_pair(g: PlaneMap) -> tuple[PlaneMap, PlaneMap]:
    """The two premedial maps of a 4-regular map (black class first)."""
    return premedial(g, 0), premedial(g, 1)


# --------------------------------------------------------------------------
# curves

def straight_ahead_curves(m: PlaneMap) -> PlaneMap:
    """Label darts of a 4-regular map by its straight-ahead walks."""
    _require_four_regular(m)
    label = [-1] * m.dart_count
    cid = 0
    for s in range(m.dart_count):
        if label[s] != -1:
            continue
        d = s
        while label[d] == -1:
            label[d] = label[m.twin[d]] = cid
            arrive = m.twin[d]
            d = m.next[m.next[arrive]]
        cid += 1
    return m.with_curves(label)


@dataclass(frozen=True)
class ConstructionReceipt:
    operation: str
    vertex_delta: int
    edge_delta: int
    new_curve: int | None = None
    dart_map: dict[int, int] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"operation: {self.operation}",
               f"new_curve: {'none' if self.new_curve is None else self.new_curve}",
               f"vertex_delta: {self.vertex_delta}",
               f"edge_delta: {self.edge_delta}"]
        for k in sorted(self.extra):
            out.append(f"{k}: {self.extra[k]}")
        return out


def _orient_crossings(m: PlaneMap, edges: list[int]) -> list[int] | None:
    """Choose a dart per edge so that crossing dart i (from its left face
    into its right face) lands in the face left of dart i+1."""
    k = len(edges)
    for first in m.edges[edges[0]]:
        chosen = [first]
        ok = True
        for i in range(1, k + 1):
            here = m.face_of[chosen[-1]]
            a, b = m.edges[edges[i % k]]
            options = [d for d in (a, b) if m.face_of[m.twin[d]] == here]
            if not options:
                ok = False
                break
            if i == k:
                if chosen[0] not in options:
                    ok = False
                break
            chosen.append(options[0])
        if ok:
            return chosen
    return None


def insert_curve(
    m: PlaneMap, crossings: Sequence[int], curve_id: int | None = None
) -> tuple[PlaneMap, ConstructionReceipt]:
    """Insert a closed curve crossing the given edges in cyclic order.

    ``crossings`` lists darts; only their edges matter, orientation is
    resolved automatically.  Each crossed edge receives a new degree-4
    vertex and consecutive new vertices are joined through their common
    face.
    """
    if len(crossings) < 2:
        raise NotCocycle("a closed curve must cross at least two edges")
    edges = [m.edge_of[d] for d in crossings]
    if len(set(edges)) != len(edges):
        raise DuplicateEdge("an edge is listed twice")
    darts = _orient_crossings(m, edges)
    if darts is None:
        raise NotCocycle("consecutive crossed edges do not share a face")
    if m.curve is not None and curve_id is None:
        curve_id = max(m.curve) + 1
    rotations, mate = rotations_of(m)
    rotations = [[("o", d) for d in rot] for rot in rotations]
    mate = {("o", d): ("o", t) for d, t in mate.items()}
    curve_of = None
    if m.curve is not None:
        curve_of = {("o", d): m.curve[d] for d in range(m.dart_count)}
    k = len(darts)
    for i, d in enumerate(darts):
        t = m.twin[d]
        # x subdivides d; around x ccw: towards head, left chord, towards tail, right chord
        rotations.append([("x", i, "h"), ("x", i, "L"), ("x", i, "t"), ("x", i, "R")])
        mate[("o", d)] = ("x", i, "t")
        mate[("o", t)] = ("x", i, "h")
        mate[("x", i, "R")] = ("x", (i + 1) % k, "L")
        if curve_of is not None:
            curve_of[("x", i, "h")] = curve_of[("x", i, "t")] = m.curve[d]
            curve_of[("x", i, "L")] = curve_of[("x", i, "R")] = curve_id
    try:
        out, index = from_rotations(rotations, mate, curve_of)
    except EulerViolation as exc:
        raise NotCocycle("the curve would cross itself inside a face") from exc
    receipt = ConstructionReceipt(
        operation="insert_curve",
        new_curve=curve_id,
        vertex_delta=out.num_vertices - m.num_vertices,
        edge_delta=out.num_edges - m.num_edges,
        dart_map={d: index[("o", d)] for d in range(m.dart_count)},
        extra={"crossings": k},
    )
    return out, receipt


# --------------------------------------------------------------------------
# isomorphism

def _code_from(m: PlaneMap, start: int, nxt: Sequence[int]) -> tuple[int, ...]:
    label = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (m.twin[d], nxt[d]):
            if e not in label:
                label[e] = len(order)
                order.append(e)
    code = []
    for d in order:
        code.append(label[m.twin[d]])
        code.append(label[nxt[d]])
    return tuple(code)


def canonical_form(m: PlaneMap, mirror: bool = True) -> tuple[int, ...]:
    """Lexicographically least BFS relabeling over all starting darts (and
    both orientations when ``mirror``)."""
    best = None
    perms = [m.next, m.prev] if mirror else [m.next]
    for nxt in perms:
        for s in range(m.dart_count):
            code = _code_from(m, s, nxt)
            if best is None or code < best:
                best = code
    return best


def is_isomorphic(a: PlaneMap, b: PlaneMap, mirror: bool = True) -> bool:
    if (a.dart_count, a.num_vertices, a.num_faces) != (b.dart_count, b.num_vertices, b.num_faces):
        return False
    if sorted(len(v) for v in a.vertices) != sorted(len(v) for v in b.vertices):
        return False
    return canonical_form(a, mirror) == canonical_form(b, mirror)


def from_graph(g: nx.Graph) -> PlaneMap:
    """Embed a planar simple graph (networkx) and return its map.

    Vertices are relabeled ``0..n-1`` in sorted order of the input labels.
    """
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise EulerViolation("graph is not planar")
    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    adjacency = {pos[v]: [pos[w] for w in reversed(list(emb.neighbors_cw_order(v)))] for v in nodes}
    return from_edge_rotations(adjacency)
