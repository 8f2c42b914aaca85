"""Search intersecting arrangements of five pseudocircles for 4-chromatic
graphs with fractional chromatic number 3.

Arrangements of n curves are grown from those of n-1 curves by inserting a
closed curve that crosses every old curve exactly twice.  Levels up to
``--exhaustive`` are enumerated completely; the last level is sampled with
random insertion paths until ``--seconds`` run out.  Every hit is printed
with its criticality data and the winner is written as a planemap file.

    python tools/search_fig1b.py --seed 7 --seconds 2400 -o tools/seeds/fig1b.map
"""
from __future__ import annotations

import argparse
import random
import time

from pseudocircles.arrangement import as_arrangement, is_diamond_free, is_intersecting
from pseudocircles.coloring import first_noncritical, k_color
from pseudocircles.fractional import fractional_chromatic
from pseudocircles.planemap import (
    PlaneMap, canonical_form, format_map, from_rotations, insert_curve, medial,
    rotations_of, straight_ahead_curves,
)


def two_circles() -> PlaneMap:
    digon = PlaneMap(twin=(1, 0, 3, 2), next=(2, 3, 0, 1))
    return straight_ahead_curves(medial(digon))


def subdivide(m: PlaneMap) -> PlaneMap:
    """Put a degree-2 vertex on every edge so that a new curve may cross
    each old edge at most once even when it meets that edge's curve twice
    in a row."""
    rot, _ = rotations_of(m)
    rot = [[("o", d) for d in r] for r in rot]
    mate, curve = {}, {}
    for i, (a, b) in enumerate(m.edges):
        rot.append([("s", i, "a"), ("s", i, "b")])
        mate[("o", a)] = ("s", i, "a")
        mate[("o", b)] = ("s", i, "b")
        for k in (("o", a), ("o", b), ("s", i, "a"), ("s", i, "b")):
            curve[k] = m.curve[a]
    return from_rotations(rot, mate, curve)[0]


def smooth(m: PlaneMap) -> PlaneMap:
    """Remove every degree-2 vertex again."""
    rot, mate = rotations_of(m)
    mate = dict(mate)
    keep = []
    for r in rot:
        if len(r) == 2:
            p, q = r
            x, y = mate.pop(p), mate.pop(q)
            mate[x], mate[y] = y, x
        else:
            keep.append(r)
    return from_rotations(keep, mate, {d: m.curve[d] for r in keep for d in r})[0]


def _finish(m: PlaneMap, path: list[int]):
    try:
        r, _ = insert_curve(m, path)
        r = straight_ahead_curves(smooth(r))
        a = as_arrangement(r)
    except Exception:
        return None
    return a if is_intersecting(a) else None


def extensions(base: PlaneMap, n: int) -> dict:
    """All intersecting arrangements of ``n`` curves containing ``base``."""
    m = subdivide(base)
    length = 2 * (n - 1)
    out = {}

    def rec(path, used, count, start_face):
        f = m.face_of[path[-1]]
        if len(path) == length:
            if f == start_face:
                a = _finish(m, path)
                if a is not None:
                    out.setdefault(canonical_form(a.map), a)
            return
        for e in m.faces[f]:
            d = m.twin[e]
            c = m.curve[d]
            if m.edge_of[d] in used or count.get(c, 0) >= 2:
                continue
            count[c] = count.get(c, 0) + 1
            used.add(m.edge_of[d])
            path.append(d)
            rec(path, used, count, start_face)
            path.pop()
            used.discard(m.edge_of[d])
            count[c] -= 1

    for d0 in range(m.dart_count):
        rec([d0], {m.edge_of[d0]}, {m.curve[d0]: 1}, m.face_of[m.twin[d0]])
    return out


def random_extension(m: PlaneMap, n: int, rng: random.Random):
    length = 2 * (n - 1)
    d0 = rng.randrange(m.dart_count)
    start_face = m.face_of[m.twin[d0]]
    path, used, count = [d0], {m.edge_of[d0]}, {m.curve[d0]: 1}
    while len(path) < length:
        f = m.face_of[path[-1]]
        opts = [m.twin[e] for e in m.faces[f]
                if m.edge_of[m.twin[e]] not in used and count.get(m.curve[m.twin[e]], 0) < 2]
        if len(path) == length - 1:
            opts = [d for d in opts if m.face_of[d] == start_face]
        if not opts:
            return None
        d = rng.choice(opts)
        path.append(d)
        used.add(m.edge_of[d])
        count[m.curve[d]] = count.get(m.curve[d], 0) + 1
    return _finish(m, path)


def screen(a):
    """Data for a 4-chromatic candidate, or None."""
    g = a.graph()
    if k_color(g, 3) is not None:
        return None
    return {
        "chi_f": fractional_chromatic(g).value,
        "noncritical_vertex": first_noncritical(g, "vertex"),
        "digon": any(len(f) == 2 for f in a.map.faces),
        "diamond_free": is_diamond_free(a),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--exhaustive", type=int, default=4, help="enumerate levels up to this n")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--seconds", type=float, default=600)
    p.add_argument("-o", "--output")
    args = p.parse_args(argv)

    level = {canonical_form(two_circles()): as_arrangement(two_circles())}
    for n in range(3, min(args.exhaustive, args.n) + 1):
        nxt = {}
        for a in level.values():
            nxt.update(extensions(a.map, n))
        level = nxt
        print(f"n={n} intersecting arrangements: {len(level)}", flush=True)
    if args.exhaustive >= args.n:
        found = dict(level)
    else:
        rng = random.Random(args.seed)
        bases = [subdivide(a.map) for a in level.values()]
        found = {}
        t0 = time.time()
        tries = 0
        while time.time() - t0 < args.seconds:
            tries += 1
            a = random_extension(rng.choice(bases), args.n, rng)
            if a is not None:
                found.setdefault(canonical_form(a.map), a)
        print(f"n={args.n} distinct after {tries} tries: {len(found)}", flush=True)

    best = None
    for key in sorted(found):
        a = found[key]
        info = screen(a)
        if info is None:
            continue
        print(f"chi=4 V={a.map.num_vertices} " + " ".join(f"{k}={v}" for k, v in info.items()), flush=True)
        if info["chi_f"] == 3 and not info["digon"] and best is None:
            best = a
    if best is not None and args.output:
        with open(args.output, "w") as fh:
            fh.write(format_map(best.map))
        print(f"written: {args.output}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
