"""Straight-line drawings via Tutte's barycentric embedding.

The outer face is pinned to a convex polygon with rational corners on the
unit circle; every other vertex sits at the average of its neighbours.  The
linear system is solved exactly, so the output depends only on the input.
"""
from __future__ import annotations

from fractions import Fraction
from math import pi, tan

from .planemap import PlaneMap

CANVAS = 1000
MARGIN = 50


def outer_face(m: PlaneMap) -> int:
    """The longest face, lowest index among ties."""
    return max(range(m.num_faces), key=lambda f: (len(set(m.face_vertices(f))), -f))


def _circle_point(k: int, i: int) -> tuple[Fraction, Fraction]:
    # rational point on the unit circle near angle 2*pi*i/k
    theta = 2 * pi * i / k
    if abs(theta - pi) < 1e-12:
        return Fraction(-1), Fraction(0)
    t = Fraction(tan(theta / 2)).limit_denominator(10_000)
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def _solve_sparse(rows: dict[int, dict[int, Fraction]], rhs: dict[int, list[Fraction]]) -> dict[int, list[Fraction]]:
    """Gaussian elimination on a sparse system, eliminating the variable
    with the fewest entries first."""
    rows = {i: dict(r) for i, r in rows.items()}
    rhs = {i: list(b) for i, b in rhs.items()}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    order = []
    remaining = set(rows)
    while remaining:
        piv = min(remaining, key=lambda i: (len(rows[i]), i))
        remaining.discard(piv)
        row = rows[piv]
        j = min(row, key=lambda c: (len(cols[c]), c))
        p = row[j]
        for i in list(cols[j]):
            if i == piv or i not in remaining:
                continue
            f = rows[i][j] / p
            for c, v in row.items():
                nv = rows[i].get(c, 0) - f * v
                if nv:
                    rows[i][c] = nv
                    cols.setdefault(c, set()).add(i)
                else:
                    rows[i].pop(c, None)
                    cols[c].discard(i)
            rhs[i] = [a - f * b for a, b in zip(rhs[i], rhs[piv])]
        order.append((piv, j))
    sol: dict[int, list[Fraction]] = {}
    for piv, j in reversed(order):
        row = rows[piv]
        acc = list(rhs[piv])
        for c, v in row.items():
            if c != j:
                acc = [a - v * s for a, s in zip(acc, sol[c])]
        sol[j] = [a / row[j] for a in acc]
    return sol


def tutte_coordinates(m: PlaneMap, face: int | None = None) -> dict[int, tuple[Fraction, Fraction]]:
    if face is None:
        face = outer_face(m)
    g = m.graph()
    boundary = []
    for v in m.face_vertices(face):
        if v not in boundary:
            boundary.append(v)
    pos = {}
    for i, v in enumerate(boundary):
        pos[v] = _circle_point(len(boundary), i)
    inner = [v for v in sorted(g.nodes()) if v not in pos]
    rows = {}
    rhs = {}
    for v in inner:
        row = {v: Fraction(g.degree(v))}
        b = [Fraction(0), Fraction(0)]
        for u in g[v]:
            if u in pos:
                b[0] += pos[u][0]
                b[1] += pos[u][1]
            else:
                row[u] = row.get(u, Fraction(0)) - 1
        rows[v] = row
        rhs[v] = b
    if inner:
        sol = _solve_sparse(rows, rhs)
        for v in inner:
            pos[v] = (sol[v][0], sol[v][1])
    return pos


def render_svg(m: PlaneMap) -> str:
    pos = tutte_coordinates(m)
    half = (CANVAS - 2 * MARGIN) / 2

    def px(p):
        return (round(CANVAS / 2 + float(p[0]) * half, 3), round(CANVAS / 2 - float(p[1]) * half, 3))

    pts = {v: px(p) for v, p in pos.items()}
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
             f'viewBox="0 0 {CANVAS} {CANVAS}">']
    seen = {}
    for v, p in sorted(pos.items()):
        seen.setdefault(p, []).append(v)
    clashes = [vs for vs in seen.values() if len(vs) > 1]
    if clashes:
        lines.append(f"<!-- warning: degenerate drawing, {len(clashes)} groups of coincident vertices -->")
    for a, b in m.edges:
        u, v = m.vertex_of[a], m.vertex_of[b]
        (x1, y1), (x2, y2) = pts[u], pts[v]
        lines.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1.5"/>')
    for v in sorted(pts):
        x, y = pts[v]
        lines.append(f'<circle cx="{x}" cy="{y}" r="5" fill="white" stroke="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
