"""Search 4-regular planar graphs on 18 vertices for one that is
4-chromatic, 4-edge-critical and has fractional chromatic number 3.

Every such graph is the medial of a plane graph with 18 edges.  Those are
reached by deleting edges from triangulations (enumerated by edge flips
from a stacked one) while keeping minimum degree 3.  Candidates are
screened cheaply (3-colorability, no K4, a floating LP bound) before the
exact checks.

    python tools/search_crowning18.py --vertices 10 -o tools/seeds/crowning18.map
"""
from __future__ import annotations

import argparse
from fractions import Fraction

import networkx as nx
import numpy as np
from scipy.optimize import linprog

from pseudocircles.coloring import criticality, k_color
from pseudocircles.fractional import fractional_chromatic
from pseudocircles.oracle import maximal_independent_sets
from pseudocircles.planemap import (
    PlaneMap, canonical_form, format_map, from_graph, from_rotations, medial,
)

EDGES = 18


def _flips(m: PlaneMap):
    """Triangulations one edge flip away from ``m``."""
    g = m.graph()
    for d, t in m.edges:
        u, v = m.vertex_of[d], m.vertex_of[t]
        a = next(x for x in m.face_vertices(m.face_of[d]) if x not in (u, v))
        b = next(x for x in m.face_vertices(m.face_of[t]) if x not in (u, v))
        if g.degree[u] <= 3 or g.degree[v] <= 3 or a == b or g.has_edge(a, b):
            continue
        h = g.copy()
        h.remove_edge(u, v)
        h.add_edge(a, b)
        yield from_graph(h)


def triangulations(n: int) -> list[PlaneMap]:
    """All triangulations of the sphere on ``n`` vertices with minimum
    degree at least 3, up to reflection."""
    g = nx.Graph([(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2)])
    for k in range(4, n):
        g.add_edges_from([(k, k - 1), (k, k - 2), (k, k - 3)])
    start = from_graph(g)
    seen = {canonical_form(start): start}
    todo = [start]
    while todo:
        for y in _flips(todo.pop()):
            key = canonical_form(y)
            if key not in seen:
                seen[key] = y
                todo.append(y)
    return list(seen.values())


def delete_edges(m: PlaneMap, edges) -> PlaneMap:
    dead = set()
    for e in edges:
        dead |= set(m.edges[e])
    rot = [[d for d in r if d not in dead] for r in m.vertices]
    return from_rotations(rot, {d: m.twin[d] for d in range(m.dart_count) if d not in dead})[0]


def deletion_sets(m: PlaneMap, count: int):
    ends = [(m.vertex_of[a], m.vertex_of[b]) for a, b in m.edges]
    deg = [len(v) for v in m.vertices]

    def rec(start, left, cur):
        if left == 0:
            yield tuple(cur)
            return
        for e in range(start, len(ends) - left + 1):
            u, v = ends[e]
            if deg[u] > 3 and deg[v] > 3:
                deg[u] -= 1
                deg[v] -= 1
                cur.append(e)
                yield from rec(e + 1, left - 1, cur)
                cur.pop()
                deg[u] += 1
                deg[v] += 1

    yield from rec(0, count, [])


def chi_f_float(g: nx.Graph) -> float:
    sets = maximal_independent_sets(g)
    nodes = sorted(g.nodes())
    a = np.zeros((len(nodes), len(sets)))
    for j, s in enumerate(sets):
        for v in s:
            a[nodes.index(v), j] = 1
    res = linprog(np.ones(len(sets)), A_ub=-a, b_ub=-np.ones(len(nodes)), bounds=(0, None), method="highs")
    return res.fun


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--vertices", type=int, default=10, help="triangulation size to start from")
    p.add_argument("--limit", type=int, default=0, help="stop after this many triangulations (0: all)")
    p.add_argument("-o", "--output")
    args = p.parse_args(argv)

    tris = triangulations(args.vertices)
    print(f"triangulations on {args.vertices} vertices: {len(tris)}", flush=True)
    drop = 3 * args.vertices - 6 - EDGES
    seen = set()
    for ti, t in enumerate(tris):
        if args.limit and ti >= args.limit:
            break
        for es in deletion_sets(t, drop):
            try:
                g_map = delete_edges(t, es)
            except Exception:
                continue
            m = medial(g_map)
            if not m.is_simple():
                continue
            g = m.graph()
            if k_color(g, 3) is not None:
                continue
            key = canonical_form(m)
            if key in seen:
                continue
            seen.add(key)
            if any(len(q) >= 4 for q in nx.find_cliques(g)):
                continue
            if chi_f_float(g) > 3 + 1e-6:
                continue
            if fractional_chromatic(g).value != Fraction(3):
                continue
            crit = criticality(g, "edge")
            print(f"triangulation {ti}: chi=4 chi_f=3 edge_critical={crit}", flush=True)
            if crit:
                if args.output:
                    with open(args.output, "w") as fh:
                        fh.write(format_map(m))
                    print(f"written: {args.output}")
                return 0
        print(f"triangulation {ti} done, distinct 4-chromatic: {len(seen)}", flush=True)
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
