"""Regenerate the bundled fixture corpus.

Most fixtures are rebuilt from a short combinatorial description: a face
spiral of a fullerene-like cubic graph (the medial of a cubic map is a
triangle-saturated arrangement graph), a set of great-circle normals, or a
small gadget.  Two fixtures came out of exhaustive searches and are copied
from ``tools/seeds`` (see ``search_fig1b.py`` and ``search_crowning18.py``).

    python tools/make_fixtures.py [outdir]
"""
from __future__ import annotations

import itertools
import math
import shutil
import sys
from pathlib import Path

import networkx as nx

from pseudocircles.constructions import corona
from pseudocircles.arrangement import as_arrangement
from pseudocircles.planemap import (
    PlaneMap, dual, format_map, from_graph, from_rotations, medial, straight_ahead_curves,
)

HERE = Path(__file__).resolve().parent
DEFAULT_OUT = HERE.parent / "src" / "pseudocircles" / "fixtures"


# ---------------------------------------------------------------- spirals

def windup(sizes: list[int]) -> list[set[int]] | None:
    """Dual adjacency of a face spiral, or None if the spiral does not close."""
    n = len(sizes)
    room = list(sizes)
    adj: list[set[int]] = [set() for _ in range(n)]

    def join(a, b):
        if b in adj[a]:
            if max(a, b) == n - 1:
                return
            raise ValueError
        adj[a].add(b)
        adj[b].add(a)
        room[a] -= 1
        room[b] -= 1
        if room[a] < 0 or room[b] < 0:
            raise ValueError

    try:
        join(0, 1)
        rim = [0, 1]
        for k in range(2, n):
            join(k, rim[-1])
            join(k, rim[0])
            while True:
                if len(rim) > 1 and room[rim[0]] == 0:
                    rim.pop(0)
                    join(k, rim[0])
                elif len(rim) > 1 and room[rim[-1]] == 0:
                    rim.pop()
                    join(k, rim[-1])
                else:
                    break
            rim.append(k)
    except ValueError:
        return None
    return None if any(room) else adj


def cubic_from_spiral(sizes: list[int]) -> PlaneMap:
    adj = windup(sizes)
    if adj is None:
        raise ValueError("spiral does not close")
    g = nx.Graph((a, b) for a in range(len(adj)) for b in adj[a])
    return dual(from_graph(g))


def spiral_arrangement(sizes: list[int]) -> PlaneMap:
    return straight_ahead_curves(medial(cubic_from_spiral(sizes)))


C28 = [5, 5, 5, 6, 5, 6, 5, 6, 5, 5, 5, 5, 5, 5, 5, 6]
C48 = [5, 5, 6, 5, 6, 6, 5, 6, 6, 6, 6, 5, 6, 6, 6, 5, 5, 5, 5, 6, 5, 5, 5, 6, 6, 6]
C60 = [6] * 32
for _i in (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32):
    C60[_i - 1] = 5


# ---------------------------------------------------------- great circles

def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _dot(p, q):
    return sum(a * b for a, b in zip(p, q))


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _unit(p):
    r = math.sqrt(_dot(p, p))
    return tuple(a / r for a in p)


def great_circles(normals) -> PlaneMap:
    """Arrangement of great circles on the sphere, given their normals."""
    ns = [_unit(v) for v in normals]
    pts = []
    for i, j in itertools.combinations(range(len(ns)), 2):
        c = _unit(_cross(ns[i], ns[j]))
        for s in (1, -1):
            p = tuple(s * a for a in c)
            if any(math.dist(p, q) < 1e-7 for q, _ in pts):
                raise ValueError("three circles through one point")
            pts.append((p, (i, j)))
    order = {}
    for i, nv in enumerate(ns):
        on = [k for k, (_, ij) in enumerate(pts) if i in ij]
        a = pts[on[0]][0]
        b = _cross(nv, a)
        order[i] = sorted(on, key=lambda k: math.atan2(_dot(pts[k][0], b), _dot(pts[k][0], a)))
    rot, mate, curve = [], {}, {}
    for k, (p, (i, j)) in enumerate(pts):
        dirs = []
        for c in (i, j):
            t = _cross(ns[c], p)
            dirs.append(((c, 1), t))
            dirs.append(((c, -1), tuple(-a for a in t)))
        e1 = _unit(dirs[0][1])
        e2 = _cross(p, e1)
        dirs.sort(key=lambda x: math.atan2(_dot(x[1], e2), _dot(x[1], e1)))
        rot.append([(k, c, s) for (c, s), _ in dirs])
        for (c, s), _ in dirs:
            seq = order[c]
            nb = seq[(seq.index(k) + s) % len(seq)]
            mate[(k, c, s)] = (nb, c, -s)
            curve[(k, c, s)] = c
    return from_rotations(rot, mate, curve)[0]


def simmons_normals():
    # one pole plus three rotated pentagons of normals; angles found by a
    # hill climb maximising the triangle count (160 means saturated)
    params = [(1.233632381515731, 0.42631539897264314),
              (0.13513343168410896, 0.6751200173203252),
              (0.375382915561744, 0.41412906087561807)]
    ns = [(0.0, 0.0, 1.0)]
    for th, ph in params:
        for k in range(5):
            a = ph + 2 * math.pi * k / 5
            ns.append((math.sin(th) * math.cos(a), math.sin(th) * math.sin(a), math.cos(th)))
    return ns


# ----------------------------------------------------------------- gadgets

def two_circles() -> PlaneMap:
    return straight_ahead_curves(medial(PlaneMap(twin=(1, 0, 3, 2), next=(2, 3, 0, 1))))


def bridged_k4_pair() -> PlaneMap:
    """Medial of two K4s, each with one edge subdivided, joined by a bridge."""
    g = nx.disjoint_union(nx.complete_graph(4), nx.complete_graph(4))
    g.remove_edge(0, 1)
    g.remove_edge(4, 5)
    g.add_edges_from([(0, 8), (8, 1), (4, 9), (9, 5), (8, 9)])
    return medial(from_graph(g))


def dodecahedral_arrangement() -> PlaneMap:
    return straight_ahead_curves(medial(from_graph(nx.dodecahedral_graph())))


def koester() -> PlaneMap:
    a = as_arrangement(dodecahedral_arrangement())
    pentagon = next(f for f, ds in enumerate(a.map.faces) if len(ds) == 5)
    return corona(a, pentagon)[0].map


# -------------------------------------------------------------- expected

T, P, D = "TRIVIAL", "PAPER", "DERIVED"

FIXTURES = {
    "two_circles": (
        "two circles crossing twice",
        two_circles,
        [("V", "2", T, "smallest simple arrangement"), ("E", "4", T, ""), ("F", "4", T, "Euler"),
         ("n", "2", T, ""), ("intersecting", "true", T, ""), ("chi", "2", T, "even cycle")],
    ),
    "octahedron": (
        "three pairwise crossing circles",
        lambda: straight_ahead_curves(medial(from_graph(nx.complete_graph(4)))),
        [("V", "6", D, "medial of K4"), ("E", "12", D, ""), ("F", "8", D, "Euler"), ("n", "3", D, ""),
         ("intersecting", "true", D, ""), ("great", "true", D, "every 3-subarrangement is all triangles"),
         ("triangle_saturated", "true", D, "both classes are triangles"), ("chi", "3", D, "exhaustive"),
         ("chi_f", "3", D, "|V|/alpha = 6/2"), ("alpha", "2", T, "antipodal pair"),
         ("antipodal", "exists", D, "quotient is a triangle")],
    ),
    "cube": (
        "cube graph, not an arrangement",
        lambda: from_graph(nx.cubical_graph()),
        [("V", "8", T, ""), ("E", "12", T, ""), ("F", "6", T, "Euler 8-12+6=2"), ("degree_four", "false", T, "cubic")],
    ),
    "fig7": (
        "medial graph of the cube; intersecting arrangement of 4 great-pseudocircles",
        lambda: straight_ahead_curves(medial(from_graph(nx.cubical_graph()))),
        [("V", "12", P, "one vertex per cube edge"), ("E", "24", D, ""), ("F", "14", D, "Euler"),
         ("n", "4", D, ""), ("intersecting", "true", D, ""), ("chi", "3", D, "exhaustive")],
    ),
    "fig1b": (
        "simple intersecting arrangement of 5 pseudocircles with chi 4 and chi_f 3",
        None,
        [("V", "20", P, "n(n-1)"), ("E", "40", P, "2n(n-1)"), ("F", "22", P, "Euler"), ("n", "5", P, ""),
         ("intersecting", "true", P, ""), ("triangle_saturated", "false", D, "face census"),
         ("diamond_free", "true", D, "no two triangles share an edge"),
         ("chi", "4", P, ""), ("chi_f", "3", P, ""),
         ("vertex_critical", "false", D, "deleting any of four vertices leaves chi 4")],
    ),
    "fig4_n7": (
        "triangle-saturated intersecting arrangement of 7 pseudocircles, not great",
        lambda: spiral_arrangement(C28),
        [("V", "42", P, "n(n-1)"), ("E", "84", P, ""), ("F", "44", P, "Euler"), ("n", "7", P, ""),
         ("intersecting", "true", P, ""), ("triangle_saturated", "true", P, ""), ("great", "false", P, "")],
    ),
    "fig4_n9": (
        "triangle-saturated intersecting arrangement of 9 pseudocircles, not great",
        lambda: spiral_arrangement(C48),
        [("V", "72", P, "n(n-1)"), ("E", "144", P, ""), ("F", "74", P, "Euler"), ("n", "9", P, ""),
         ("intersecting", "true", P, ""), ("triangle_saturated", "true", P, ""), ("great", "false", P, "")],
    ),
    "fig4_n10": (
        "triangle-saturated intersecting arrangement of 10 pseudocircles",
        lambda: spiral_arrangement(C60),
        [("V", "90", P, "n(n-1)"), ("E", "180", P, ""), ("F", "92", P, "Euler"), ("n", "10", P, ""),
         ("intersecting", "true", P, ""), ("triangle_saturated", "true", P, ""), ("great", "true", D, "")],
    ),
    "fig6a": (
        "triangle-saturated arrangement of 6 great-circles",
        dodecahedral_arrangement,
        [("V", "30", P, "n(n-1)"), ("E", "60", P, ""), ("F", "32", D, "Euler"), ("n", "6", P, ""),
         ("intersecting", "true", P, ""), ("great", "true", P, ""), ("triangle_saturated", "true", P, ""),
         ("black_triangles", "20", D, "E/3"), ("chi", "3", P, "saturated arrangements are 3-colorable"),
         ("antipodal", "none", D, "exhaustive search of the 15-vertex quotient")],
    ),
    "fig6b": (
        "corona extension of the 6 great-circle arrangement (Koester's graph)",
        koester,
        [("V", "40", P, "30 + 10"), ("E", "80", D, ""), ("F", "42", D, "Euler"), ("n", "7", P, ""),
         ("chi", "4", P, ""), ("edge_critical", "true", P, ""), ("black_triangles", "25", P, "3t+5 = 2|V|"),
         ("chi_f", "40/13", D, "column generation")],
    ),
    "fig8": (
        "connected 4-regular planar graph with a cubic premedial graph and chi 4",
        bridged_k4_pair,
        [("V", "15", D, "edges of the gadget"), ("degree_four", "true", P, ""), ("two_connected", "false", P, ""),
         ("chi", "4", P, ""), ("tait", "bridged", P, "premedial has a bridge")],
    ),
    "fig10": (
        "triangle-saturated arrangement of 10 great-pseudocircles",
        lambda: spiral_arrangement(C60),
        [("V", "90", P, "n(n-1)"), ("E", "180", P, ""), ("F", "92", D, "Euler"), ("n", "10", P, ""),
         ("intersecting", "true", P, ""), ("great", "true", P, ""), ("triangle_saturated", "true", P, ""),
         ("chi", "3", P, ""), ("antipodal", "exists", D, "solver run")],
    ),
    "fig11": (
        "triangle-saturated arrangement of 16 great-pseudocircles",
        lambda: great_circles(simmons_normals()),
        [("V", "240", P, "n(n-1)"), ("E", "480", P, ""), ("F", "242", D, "Euler"), ("n", "16", P, ""),
         ("intersecting", "true", P, ""), ("great", "true", P, ""), ("triangle_saturated", "true", P, ""),
         ("chi", "3", P, ""), ("antipodal", "exists", D, "solver run")],
    ),
    "crowning18": (
        "4-edge-critical 4-regular 18-vertex planar graph with chi 4 and chi_f 3",
        None,
        [("V", "18", P, ""), ("E", "36", D, ""), ("F", "20", D, "Euler"), ("degree_four", "true", P, ""),
         ("chi", "4", P, ""), ("chi_f", "3", P, ""), ("edge_critical", "true", P, ""),
         ("vertex_critical", "true", P, "")],
    ),
}


def expected_text(source: str, rows) -> str:
    out = [f"source: {source}"]
    for key, value, tag, note in rows:
        out.append(f"{key}: {value} [{tag}] {note}".rstrip())
    return "\n".join(out) + "\n"


def main(argv: list[str]) -> int:
    out = Path(argv[0]) if argv else DEFAULT_OUT
    out.mkdir(parents=True, exist_ok=True)
    for fid, (source, build, rows) in FIXTURES.items():
        if build is None:
            shutil.copyfile(HERE / "seeds" / f"{fid}.map", out / f"{fid}.map")
        else:
            (out / f"{fid}.map").write_text(format_map(build()))
        (out / f"{fid}.expected").write_text(expected_text(source, rows))
        print(fid)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
