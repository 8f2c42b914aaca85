"""Exact coloring procedures for arrangement graphs and friends.

Graph arguments may be a :class:`PlaneMap`, an :class:`Arrangement` or a
simple ``networkx`` graph.  Vertices of maps are their indices; other graphs
keep their own node labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Mapping

import networkx as nx

from ._search import k_coloring, k_coloring_restarts, max_weight_independent_set
from .arrangement import (
    Arrangement,
    antipodal_involution,
    curve_sides,
    is_intersecting,
)
from .errors import (
    AdjacentAntipodes,
    Bridged,
    BridgedPremedial,
    NoColoring,
    NoCubicPremedial,
    NoInvolution,
    NotAutomorphism,
    NotCubic,
    NotFourChromatic,
    NotIntersecting,
    NotProper,
    NotThreeColors,
    NotTwoDegenerate,
    NotVertexCritical,
    InteriorNotThreeColorable,
    ParseError,
)
from .planemap import PlaneMap, cut_structure, face_two_coloring, premedial_with_vertices


def as_graph(g) -> nx.Graph:
    if isinstance(g, Arrangement):
        return g.map.graph()
    if isinstance(g, PlaneMap):
        return g.graph()
    if isinstance(g, nx.Graph):
        return g
    raise TypeError(f"cannot treat {type(g).__name__} as a graph")


def _indexed(g: nx.Graph):
    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    adj = [[pos[w] for w in g[v] if w != v] for v in nodes]
    return nodes, pos, adj


# --------------------------------------------------------------------------
# vertex colorings

@dataclass(frozen=True)
class VertexColoring:
    color: dict
    k: int

    def __getitem__(self, v):
        return self.color[v]

    def classes(self) -> list[list]:
        out = [[] for _ in range(self.k)]
        for v in sorted(self.color):
            out[self.color[v]].append(v)
        return out

    def colors_used(self) -> int:
        return len(set(self.color.values()))


def is_proper(g, coloring: VertexColoring | Mapping) -> bool:
    g = as_graph(g)
    color = coloring.color if isinstance(coloring, VertexColoring) else coloring
    if any(v not in color for v in g.nodes()):
        return False
    return all(color[u] != color[v] for u, v in g.edges() if u != v)


def k_color(g, k: int, fixed: Mapping | None = None) -> VertexColoring | None:
    """A proper ``k``-coloring of ``g`` or ``None``."""
    g = as_graph(g)
    nodes, pos, adj = _indexed(g)
    if fixed:
        sol = k_coloring(adj, k, {pos[v]: c for v, c in fixed.items()})
    else:
        sol = k_coloring_restarts(adj, k)
    if sol is None:
        return None
    return VertexColoring({v: sol[i] for i, v in enumerate(nodes)}, k)


def chromatic_number(g) -> tuple[int, VertexColoring]:
    """Exact chromatic number with a witness coloring.

    Every smaller palette is refuted by exhaustive search, so the value is
    exact, not an upper bound.
    """
    g = as_graph(g)
    if g.number_of_nodes() == 0:
        return 0, VertexColoring({}, 0)
    if g.number_of_edges() == 0:
        return 1, VertexColoring({v: 0 for v in g.nodes()}, 1)
    if nx.is_bipartite(g):
        side = nx.bipartite.color(g)
        return 2, VertexColoring(dict(side), 2)
    k = 3
    while True:
        col = k_color(g, k)
        if col is not None:
            return k, col
        k += 1


# --------------------------------------------------------------------------
# edge colorings of cubic graphs

@dataclass(frozen=True)
class EdgeColoring:
    edges: tuple[tuple, ...]
    color: tuple[int, ...]

    def classes(self) -> list[list[int]]:
        out = [[], [], []]
        for e, c in enumerate(self.color):
            out[c].append(e)
        return out


def _cubic_edges(h) -> tuple[list, list[tuple]]:
    """Vertex list and edge endpoint list of a cubic graph or map (edges of
    a map keep their multiplicity)."""
    if isinstance(h, Arrangement):
        h = h.map
    if isinstance(h, PlaneMap):
        for v, darts in enumerate(h.vertices):
            if len(darts) != 3:
                raise NotCubic(f"vertex {v} has degree {len(darts)}")
        edges = [(h.vertex_of[a], h.vertex_of[b]) for a, b in h.edges]
        return list(range(h.num_vertices)), edges
    g = as_graph(h)
    for v, d in g.degree():
        if d != 3:
            raise NotCubic(f"vertex {v} has degree {d}")
    nodes = sorted(g.nodes())
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    return nodes, edges


def _bridges(h, edges) -> list[int]:
    if isinstance(h, Arrangement):
        h = h.map
    if isinstance(h, PlaneMap):
        return list(cut_structure(h)[1])
    g = as_graph(h)
    found = {tuple(sorted(e)) for e in nx.bridges(g)}
    return [i for i, e in enumerate(edges) if tuple(sorted(e)) in found]


def _line_adjacency(nodes, edges) -> list[list[int]]:
    at = {v: [] for v in nodes}
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        if v != u:
            at[v].append(i)
    adj = [set() for _ in edges]
    for es in at.values():
        for a, b in combinations(es, 2):
            adj[a].add(b)
            adj[b].add(a)
    for i, (u, v) in enumerate(edges):
        if u == v:
            adj[i].add(i)
    return [sorted(a) for a in adj]


def edge_three_coloring(h) -> EdgeColoring:
    """A proper 3-edge-coloring of a cubic graph by exact search."""
    nodes, edges = _cubic_edges(h)
    bridges = _bridges(h, edges)
    if bridges:
        raise Bridged(f"edge {edges[bridges[0]]} is a bridge", bridge=bridges[0])
    sol = k_coloring_restarts(_line_adjacency(nodes, edges), 3)
    if sol is None:
        raise NoColoring("graph is not 3-edge-colorable")
    return EdgeColoring(tuple(edges), tuple(sol))


def iter_edge_three_colorings(h) -> Iterator[EdgeColoring]:
    """All proper 3-edge-colorings (color permutations counted separately)."""
    nodes, edges = _cubic_edges(h)
    adj = _line_adjacency(nodes, edges)
    m = len(edges)
    if any(i in adj[i] for i in range(m)):
        return
    # visit edges in breadth-first order so constraints propagate early
    order = []
    seen = [False] * m
    for s in range(m):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            e = queue.pop(0)
            order.append(e)
            for f in adj[e]:
                if not seen[f]:
                    seen[f] = True
                    queue.append(f)
    color = [-1] * m

    def rec(i):
        if i == m:
            yield EdgeColoring(tuple(edges), tuple(color))
            return
        e = order[i]
        banned = {color[f] for f in adj[e]}
        for c in range(3):
            if c not in banned:
                color[e] = c
                yield from rec(i + 1)
        color[e] = -1

    yield from rec(0)


def count_edge_three_colorings(h, limit: int | None = None) -> int:
    count = 0
    for _ in iter_edge_three_colorings(h):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


def is_proper_edge_coloring(ec: EdgeColoring) -> bool:
    at: dict = {}
    for (u, v), c in zip(ec.edges, ec.color):
        if c not in (0, 1, 2) or u == v:
            return False
        for x in (u, v):
            at.setdefault(x, []).append(c)
    return all(len(cs) == len(set(cs)) for cs in at.values())


def trihamiltonian(h, ec: EdgeColoring) -> bool:
    """Does every pair of color classes form one Hamiltonian cycle?"""
    if not is_proper_edge_coloring(ec):
        raise NotProper("edge coloring is not proper")
    nodes, _ = _cubic_edges(h)
    for drop in range(3):
        sub = nx.MultiGraph()
        sub.add_nodes_from(nodes)
        sub.add_edges_from(e for e, c in zip(ec.edges, ec.color) if c != drop)
        if any(d != 2 for _, d in sub.degree()) or not nx.is_connected(sub):
            return False
    return True


def find_trihamiltonian_coloring(h) -> EdgeColoring | None:
    for ec in iter_edge_three_colorings(h):
        if trihamiltonian(h, ec):
            return ec
    return None


# --------------------------------------------------------------------------
# Tait transfer through the premedial graph

def cubic_premedial(g: PlaneMap) -> tuple[PlaneMap, tuple[int, ...]]:
    """A cubic premedial map of ``g`` and its edge -> vertex-of-g map."""
    if isinstance(g, Arrangement):
        g = g.map
    coloring = face_two_coloring(g)
    for cls in (0, 1):
        if all(len(g.faces[f]) == 3 for f in range(g.num_faces) if coloring.color[f] == cls):
            return premedial_with_vertices(g, cls)
    raise NoCubicPremedial("neither face class consists of triangles only")


def tait_vertex_coloring(g: PlaneMap) -> VertexColoring:
    """3-color a 4-regular map through a 3-edge-coloring of its cubic
    premedial map."""
    h, through = cubic_premedial(g)
    try:
        ec = edge_three_coloring(h)
    except Bridged as exc:
        raise BridgedPremedial(f"the cubic premedial map has a bridge: {exc}") from exc
    color = {}
    for e, c in enumerate(ec.color):
        color[through[e]] = c
    return VertexColoring(color, 3)


# --------------------------------------------------------------------------
# criticality

def criticality(g, mode: str = "vertex") -> bool:
    """Is the 4-chromatic graph ``g`` vertex- (or edge-) critical?"""
    g = as_graph(g)
    chi, _ = chromatic_number(g)
    if chi != 4:
        raise NotFourChromatic(f"chromatic number is {chi}, not 4")
    return first_noncritical(g, mode) is None


def first_noncritical(g, mode: str = "vertex"):
    """The first vertex or edge whose deletion keeps ``g`` 4-chromatic, or
    ``None``.  Assumes ``g`` is 4-chromatic."""
    g = as_graph(g)
    if mode == "vertex":
        for v in sorted(g.nodes()):
            h = g.copy()
            h.remove_node(v)
            if k_color(h, 3) is None:
                return v
        return None
    if mode == "edge":
        for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
            h = g.copy()
            h.remove_edge(u, v)
            if k_color(h, 3) is None:
                return (u, v)
        return None
    raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# antipodal colorings

def antipodal_three_coloring(a: Arrangement) -> VertexColoring | None:
    """A proper 3-coloring giving antipodal vertices equal colors."""
    try:
        inv = antipodal_involution(a)
    except (NotIntersecting, NotAutomorphism) as exc:
        raise NoInvolution(str(exc)) from exc
    g = a.graph()
    for u, v in inv.pairs():
        if g.has_edge(u, v):
            raise AdjacentAntipodes(f"antipodal vertices {u} and {v} are adjacent")
    rep = {v: min(v, inv.partner[v]) for v in g.nodes()}
    quotient = nx.Graph()
    quotient.add_nodes_from(set(rep.values()))
    quotient.add_edges_from((rep[u], rep[v]) for u, v in g.edges())
    col = k_color(quotient, 3)
    if col is None:
        return None
    return VertexColoring({v: col[rep[v]] for v in g.nodes()}, 3)


# --------------------------------------------------------------------------
# independent sets

def independence_number(g) -> tuple[int, list]:
    g = as_graph(g)
    nodes, _, adj = _indexed(g)
    size, chosen = max_weight_independent_set(adj, [1] * len(nodes))
    return size, [nodes[i] for i in chosen]


def is_independent(g, vertices) -> bool:
    g = as_graph(g)
    vs = set(vertices)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


# --------------------------------------------------------------------------
# b-fold colorings

@dataclass(frozen=True)
class BFoldColoring:
    sets: dict
    b: int
    m: int

    def palette(self) -> set[int]:
        out = set()
        for s in self.sets.values():
            out |= set(s)
        return out


def is_valid_bfold(g, bf: BFoldColoring) -> bool:
    g = as_graph(g)
    for v in g.nodes():
        s = bf.sets.get(v)
        if s is None or len(set(s)) != bf.b or any(not 1 <= c <= bf.m for c in s):
            return False
    return all(not set(bf.sets[u]) & set(bf.sets[v]) for u, v in g.edges())


def bfold_from_critical(g) -> BFoldColoring:
    """A (v-1)-fold coloring with 3v colors of a 4-vertex-critical graph.

    Vertex ``x`` contributes the three colors ``3i+1..3i+3`` (``i`` its
    position) through a 3-coloring of ``g - x``; every other vertex
    receives one of them.
    """
    g = as_graph(g)
    chi, _ = chromatic_number(g)
    if chi != 4:
        raise NotVertexCritical(f"chromatic number is {chi}, not 4")
    nodes = sorted(g.nodes())
    sets = {v: [] for v in nodes}
    for i, x in enumerate(nodes):
        h = g.copy()
        h.remove_node(x)
        col = k_color(h, 3)
        if col is None:
            raise NotVertexCritical(f"deleting vertex {x} leaves a 4-chromatic graph")
        for w in nodes:
            if w != x:
                sets[w].append(3 * i + 1 + col[w])
    v = len(nodes)
    bf = BFoldColoring({w: tuple(sorted(s)) for w, s in sets.items()}, v - 1, 3 * v)
    assert is_valid_bfold(g, bf)
    return bf


# --------------------------------------------------------------------------
# the random independent set built around one curve

def curve_weight(a: Arrangement, c: int, w: Mapping) -> Fraction:
    return sum((Fraction(w[v]) for v in set(a.curve_vertices[c])), Fraction(0))


def min_weight_curve(a: Arrangement, w: Mapping) -> int:
    return min(a.curve_ids, key=lambda c: (curve_weight(a, c, w), c))


@dataclass(frozen=True)
class Claim3Result:
    best: tuple[int, ...]
    weight: Fraction
    candidates: tuple[tuple[tuple[int, ...], Fraction], ...]
    curve: int

    @property
    def mean_weight(self) -> Fraction:
        return sum((wt for _, wt in self.candidates), Fraction(0)) / len(self.candidates)


def claim3_independent_set(a: Arrangement, c: int, w: Mapping) -> Claim3Result:
    """Best of the 18 independent sets ``I_i u J_j u X^k_ij`` around curve ``c``.

    ``I`` and ``J`` are color classes of 3-colorings of the inside and the
    outside of ``c``; ``X_ij`` are the vertices of ``c`` without neighbours
    in ``I_i u J_j``, split by a 2-coloring of the graph on ``c``.
    """
    if not is_intersecting(a):
        raise NotIntersecting("some pair of curves does not cross")
    g = a.graph()
    sides = curve_sides(a, c)
    classes = []
    for part in (sides.inside, sides.outside):
        sub = g.subgraph(part)
        col = k_color(sub, 3) if part else VertexColoring({}, 3)
        if col is None:
            raise InteriorNotThreeColorable(
                f"one side of curve {c} is not 3-colorable; this contradicts a proven claim")
        cls = [[], [], []]
        for v, x in col.color.items():
            cls[x].append(v)
        classes.append(cls)
    on_graph = g.subgraph(sides.on)
    side = nx.bipartite.color(on_graph)  # raises if the curve graph is not bipartite
    weight = {v: Fraction(w[v]) for v in g.nodes()}
    candidates = []
    for i in range(3):
        for j in range(3):
            base = set(classes[0][i]) | set(classes[1][j])
            free = [x for x in sides.on if not any(y in base for y in g[x])]
            for k in range(2):
                chosen = base | {x for x in free if side[x] == k}
                total = sum((weight[v] for v in chosen), Fraction(0))
                candidates.append((tuple(sorted(chosen)), total))
    best = max(candidates, key=lambda t: t[1])
    return Claim3Result(best[0], best[1], tuple(candidates), c)


def claim3_bound(n: int, total: Fraction) -> Fraction:
    return (Fraction(1, 3) - Fraction(2, 9 * n)) * total


# --------------------------------------------------------------------------
# degeneracy

def peel_order(g, removal=()) -> list | None:
    """A 2-degenerate elimination order of ``g - removal`` or ``None``."""
    g = as_graph(g).copy()
    g.remove_nodes_from(removal)
    deg = dict(g.degree())
    alive = set(g.nodes())
    order = []
    ready = sorted(v for v in alive if deg[v] <= 2)
    while ready:
        v = ready.pop(0)
        if v not in alive:
            continue
        alive.discard(v)
        order.append(v)
        for u in g[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] == 2:
                    ready.append(u)
    if alive:
        return None
    return order


def degeneracy_three_coloring(g, removal) -> VertexColoring:
    """Greedy 3-coloring of ``g - removal`` along a reversed peeling order."""
    order = peel_order(g, removal)
    if order is None:
        raise NotTwoDegenerate("the graph left after removal is not 2-degenerate")
    g = as_graph(g)
    color = {}
    for v in reversed(order):
        used = {color[u] for u in g[v] if u in color}
        color[v] = min(c for c in range(3) if c not in used)
    return VertexColoring(color, 3)


def find_degeneracy_removal(a: Arrangement, max_tries: int = 5000) -> tuple[int, ...]:
    """One vertex per curve whose removal leaves a 2-degenerate graph.

    Curves are handled in order; on each curve the candidates are tried by
    decreasing degree in the graph left so far.  The search gives up after
    ``max_tries`` complete candidate sets.
    """
    g = a.graph()
    curves = list(a.curve_ids)
    tries = 0

    def rec(i, chosen):
        nonlocal tries
        if i == len(curves):
            tries += 1
            return tuple(chosen) if peel_order(g, chosen) is not None else None
        if tries >= max_tries:
            return None
        on = set(a.curve_vertices[curves[i]])
        if on & set(chosen):
            return rec(i + 1, chosen)
        rest = g.subgraph(set(g.nodes()) - set(chosen))
        for v in sorted(on, key=lambda x: (-rest.degree(x), x)):
            found = rec(i + 1, chosen + [v])
            if found is not None or tries >= max_tries:
                return found
        return None

    found = rec(0, [])
    if found is None:
        raise NotTwoDegenerate(f"no removal set found within {max_tries} tries")
    return found


# --------------------------------------------------------------------------
# text formats

def format_coloring(col: VertexColoring) -> str:
    lines = [f"coloring-v1 {col.k}"]
    lines += [f"{v} {col.color[v]}" for v in sorted(col.color)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> VertexColoring:
    rows = [r.split() for r in text.strip().splitlines() if r.strip()]
    if not rows or len(rows[0]) != 2 or rows[0][0] != "coloring-v1":
        raise ParseError("expected 'coloring-v1 <k>' header")
    try:
        k = int(rows[0][1])
        color = {int(v): int(c) for v, c in rows[1:]}
    except ValueError as exc:
        raise ParseError("malformed coloring line") from exc
    if any(not 0 <= c < k for c in color.values()):
        raise NotThreeColors(f"color outside 0..{k - 1}")
    return VertexColoring(color, k)


def format_bfold(bf: BFoldColoring) -> str:
    lines = [f"bfold-v1 {bf.b} {bf.m}"]
    lines += [f"{v} " + ",".join(map(str, bf.sets[v])) for v in sorted(bf.sets)]
    return "\n".join(lines) + "\n"


def parse_bfold(text: str) -> BFoldColoring:
    rows = [r.split() for r in text.strip().splitlines() if r.strip()]
    if not rows or len(rows[0]) != 3 or rows[0][0] != "bfold-v1":
        raise ParseError("expected 'bfold-v1 <b> <m>' header")
    try:
        b, m = int(rows[0][1]), int(rows[0][2])
        sets = {int(r[0]): tuple(int(x) for x in r[1].split(",")) for r in rows[1:]}
    except (ValueError, IndexError) as exc:
        raise ParseError("malformed b-fold line") from exc
    return BFoldColoring(sets, b, m)
