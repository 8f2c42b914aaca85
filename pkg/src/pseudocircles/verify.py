"""Reproduction checks over the fixture corpus.

Each check returns a :class:`CheckResult`; :func:`verify_suite` runs them in
id order and renders a ``report-v1`` text.  Timings are kept on the result
objects but left out of the report so that it is byte-for-byte stable.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import networkx as nx

from .arrangement import (
    as_arrangement, is_diamond_free, is_great, is_intersecting, is_triangle_saturated,
)
from .coloring import (
    antipodal_three_coloring, bfold_from_critical, chromatic_number, criticality,
    independence_number, is_proper, is_valid_bfold, tait_vertex_coloring,
)
from .constructions import (
    add_parallel_triple, corona, crown, extend_coloring, lift_coloring, make_intersecting,
    vertex_map_of,
)
from .errors import BridgedPremedial, NoCubicPremedial
from .fixture import Fixture, load_fixture
from .fractional import fractional_chromatic
from .oracle import brute_force_chi_f
from .planemap import PlaneMap, analyze, face_two_coloring, is_isomorphic

FAST_SCOPE = "fast"
ALL_SCOPE = "all"


# --------------------------------------------------------------------------
# fixture self-validation

def saturated_triangle_count(m: PlaneMap) -> int:
    """Number of faces in a face class made of triangles only (0 if none)."""
    col = face_two_coloring(m)
    best = 0
    for cls in (0, 1):
        faces = [f for f in range(m.num_faces) if col.color[f] == cls]
        tri = sum(1 for f in faces if len(m.faces[f]) == 3)
        # the corona keeps one pentagon in the triangle class
        if all(len(m.faces[f]) in (3, 5) for f in faces) and tri >= len(faces) - 1:
            best = max(best, tri)
    return best


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def fixture_value(m: PlaneMap, key: str) -> str:
    """Compute one property named in a fixture's expectations."""
    rep = analyze(m)
    if key in ("V", "E", "F"):
        return str({"V": rep.V, "E": rep.E, "F": rep.F}[key])
    if key == "degree_four":
        return _fmt(all(m.degree(v) == 4 for v in range(m.num_vertices)))
    if key == "two_connected":
        return _fmt(rep.two_connected)
    if key in ("n", "intersecting", "great", "triangle_saturated", "diamond_free"):
        a = as_arrangement(m)
        fn = {"n": lambda: a.n, "intersecting": lambda: is_intersecting(a), "great": lambda: is_great(a),
              "triangle_saturated": lambda: is_triangle_saturated(a), "diamond_free": lambda: is_diamond_free(a)}[key]
        return _fmt(fn())
    if key == "black_triangles":
        return str(saturated_triangle_count(m))
    g = m.graph()
    if key == "chi":
        return str(chromatic_number(g)[0])
    if key == "chi_f":
        return _fmt(fractional_chromatic(g).value)
    if key == "alpha":
        return str(independence_number(g)[0])
    if key in ("edge_critical", "vertex_critical"):
        return _fmt(criticality(g, key.split("_")[0]))
    if key == "antipodal":
        return "exists" if antipodal_three_coloring(as_arrangement(m)) is not None else "none"
    if key == "tait":
        try:
            col = tait_vertex_coloring(m)
        except BridgedPremedial:
            return "bridged"
        except NoCubicPremedial:
            return "no_cubic_premedial"
        return "ok" if is_proper(g, col) else "improper"
    raise KeyError(f"unknown fixture property {key!r}")


CHEAP_KEYS = ("V", "E", "F", "n", "degree_four", "two_connected", "intersecting", "great",
              "triangle_saturated", "diamond_free", "black_triangles")


def validate_fixture(fx: Fixture, keys=CHEAP_KEYS) -> list[tuple[str, str, str]]:
    """Mismatches ``(key, computed, expected)`` among the selected keys."""
    bad = []
    for key, exp in fx.expected.items():
        if key not in keys:
            continue
        got = fixture_value(fx.map, key)
        if not same_value(got, exp.value):
            bad.append((key, got, exp.value))
    return bad


def same_value(got: str, expected: str) -> bool:
    try:
        return Fraction(got) == Fraction(expected)
    except ValueError:
        return got == expected


def validated(fid: str) -> Fixture:
    fx = load_fixture(fid)
    bad = validate_fixture(fx)
    if bad:
        raise AssertionError(f"fixture {fid} fails self-validation: {bad}")
    return fx


# --------------------------------------------------------------------------
# checks

@dataclass(frozen=True)
class CheckResult:
    id: str
    citation: str
    computed: str
    expected: str
    passed: bool
    runtime: float

    def line(self) -> str:
        return f"check {self.id} {'pass' if self.passed else 'fail'} {self.citation}"


@dataclass(frozen=True)
class Check:
    id: str
    citation: str
    expected: str
    limit: float  # seconds
    run: Callable[[str], tuple[str, bool]]


def _first_face(m: PlaneMap, size: int) -> int:
    return next(f for f, ds in enumerate(m.faces) if len(ds) == size)


def _koester():
    a = as_arrangement(validated("fig6a").map)
    return corona(a, _first_face(a.map, 5))[0]


def check_fig1b(scope):
    g = validated("fig1b").map.graph()
    chi = chromatic_number(g)[0]
    cert = fractional_chromatic(g)
    return f"chi={chi} chi_f={_fmt(cert.value)}", chi == 4 and cert.value == 3


def check_corona(scope):
    k = _koester()
    g = k.graph()
    chi = chromatic_number(g)[0]
    crit = criticality(g, "edge")
    same = is_isomorphic(k.map, validated("fig6b").map)
    ok = k.map.num_vertices == 40 and chi == 4 and crit and same
    return f"V={k.map.num_vertices} chi={chi} edge_critical={_fmt(crit)} matches_fixture={_fmt(same)}", ok


def check_alpha_chain(scope):
    k = _koester()
    t = saturated_triangle_count(k.map)
    v = k.map.num_vertices
    alpha = independence_number(k.graph())[0]
    ok = t == 25 and 3 * t + 5 == 2 * v == 80 and 2 * alpha <= t + 1 and alpha <= 13 and 3 * alpha < v
    return f"t={t} 3t+5={3 * t + 5} 2V={2 * v} alpha={alpha}", ok


def _saturated_ids(scope):
    ids = ["fig4_n7", "fig4_n9", "fig4_n10", "fig6a", "fig10"]
    return ids + ["fig11"] if scope == ALL_SCOPE else ids


def check_tait(scope):
    parts = []
    ok = True
    for fid in _saturated_ids(scope):
        m = validated(fid).map
        col = tait_vertex_coloring(m)
        good = is_proper(m.graph(), col) and col.colors_used() <= 3 and len(col.color) == m.num_vertices
        ok &= good
        parts.append(f"{fid}={'ok' if good else 'bad'}")
    return " ".join(parts), ok


def _intersecting_ids(scope):
    ids = ["octahedron", "fig7", "fig1b", "fig4_n7", "fig4_n9", "fig4_n10", "fig6a", "fig10"]
    return ids + ["fig11"] if scope == ALL_SCOPE else ids


def check_thm_bound(scope):
    parts = []
    ok = True
    for fid in _intersecting_ids(scope):
        a = as_arrangement(validated(fid).map)
        if not 3 <= a.n <= 6:
            continue
        value = fractional_chromatic(a.graph()).value
        bound = 3 + Fraction(6, 3 * a.n - 2)
        ok &= value <= bound
        parts.append(f"{fid}:{_fmt(value)}<={bound}")
    return " ".join(parts), ok


def grow_intersecting(a, phi):
    """One bundle + braid step on curve 0 with antipodal sites; returns the
    new arrangement and the carried 3-coloring (or ``None``)."""
    c = min(a.curve_ids)
    b_arr, _, bundle = add_parallel_triple(a, c)
    lifted = lift_coloring(phi, bundle)
    sites = bundle.sites()
    out, receipt = make_intersecting(b_arr, sites[0], sites[len(sites) // 2], "middle", "right")
    vmap = vertex_map_of(b_arr.map, out.map, receipt)
    partial = {vmap[v]: col for v, col in lifted.color.items()}
    return out, extend_coloring(out.graph(), partial)


def check_bundle(scope):
    a = as_arrangement(validated("octahedron").map)
    phi = chromatic_number(a.graph())[1]
    ns = [a.n]
    ok = True
    for _ in range(2):
        a, phi = grow_intersecting(a, phi)
        ns.append(a.n)
        ok &= is_intersecting(a) and phi is not None and is_proper(a.graph(), phi)
        if not ok:
            break
    return "n=" + "->".join(map(str, ns)), ok and ns == [3, 5, 7]


def check_crowning18(scope):
    g = validated("crowning18").map.graph()
    chi = chromatic_number(g)[0]
    val = fractional_chromatic(g).value
    crit = criticality(g, "edge")
    return f"chi={chi} chi_f={_fmt(val)} edge_critical={_fmt(crit)}", chi == 4 and val == 3 and crit


def check_crown(scope):
    m = validated("crowning18").map
    out, receipt = crown(m, _first_face(m, 3))
    g = out.graph()
    regular = all(out.degree(v) == 4 for v in range(out.num_vertices))
    tri = any(len(f) == 3 for f in out.faces)
    crit = criticality(g, "edge")
    val = fractional_chromatic(g).value
    ok = regular and tri and crit and val == 3
    return f"V={out.num_vertices} edge_critical={_fmt(crit)} chi_f={_fmt(val)}", ok


def check_bfold(scope):
    g = validated("fig1b").map.graph()
    bf = bfold_from_critical(g)
    used = len(bf.palette())
    ok = bf.b == 19 and used <= 60 and is_valid_bfold(g, bf)
    return f"b={bf.b} colors={used} ratio={Fraction(used, bf.b)}", ok and Fraction(used, bf.b) <= 3 + Fraction(3, 19)


def check_curve_bipartite(scope):
    ok = True
    count = 0
    for fid in _intersecting_ids(scope):
        a = as_arrangement(validated(fid).map)
        g = a.graph()
        for c in a.curve_ids:
            ok &= nx.is_bipartite(g.subgraph(a.curve_vertices[c]))
            count += 1
    return f"curves={count}", ok


def random_graphs(count: int = 50, seed: int = 20240611) -> list[nx.Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, 14)
        p = rng.choice((0.2, 0.3, 0.4, 0.5, 0.6))
        out.append(nx.gnp_random_graph(n, p, seed=rng.randrange(2**31)))
    return out


def check_oracle(scope):
    graphs = random_graphs() + [nx.cycle_graph(5)]
    mismatches = 0
    for g in graphs:
        if g.number_of_edges() == 0:
            continue
        if fractional_chromatic(g).value != brute_force_chi_f(g):
            mismatches += 1
    c5 = fractional_chromatic(nx.cycle_graph(5)).value
    return f"graphs={len(graphs)} mismatches={mismatches} C5={c5}", mismatches == 0 and c5 == Fraction(5, 2)


def check_antipodal(scope):
    parts = []
    ids = ["fig6a", "fig10"] + (["fig11"] if scope == ALL_SCOPE else [])
    for fid in ids:
        col = antipodal_three_coloring(as_arrangement(validated(fid).map))
        parts.append(f"{fid}={'exists' if col is not None else 'none'}")
    return " ".join(parts), True


CHECKS = (
    Check("A01", "5-curve intersecting example has chi 4 and chi_f 3", "chi=4 chi_f=3", 10, check_fig1b),
    Check("A02", "corona of the 6 great-circle arrangement is 4-chromatic and 4-edge-critical",
          "V=40 chi=4 edge_critical=true", 300, check_corona),
    Check("A03", "independence chain on the corona output: t=25, 3t+5=2|V|, 2alpha<=t+1",
          "t=25 3t+5=80 2V=80 alpha<=13", 60, check_alpha_chain),
    Check("A04", "triangle-saturated arrangements are 3-colored through a Tait coloring",
          "all ok", 60, check_tait),
    Check("A05", "intersecting arrangements satisfy chi_f <= 3+6/(3n-2)", "all within bound", 300, check_thm_bound),
    Check("A06", "bundle and braid keep intersecting arrangements 3-colorable (two rounds)",
          "n=3->5->7", 10, check_bundle),
    Check("A07", "18-vertex graph has chi 4, chi_f 3 and is 4-edge-critical",
          "chi=4 chi_f=3 edge_critical=true", 60, check_crowning18),
    Check("A08", "crowning at a triangle keeps 4-edge-criticality and chi_f 3",
          "edge_critical=true chi_f=3", 600, check_crown),
    Check("A09", "19-fold coloring from per-vertex 3-colorings uses at most 60 colors",
          "b=19 colors<=60", 60, check_bfold),
    Check("A10", "each curve induces a bipartite graph in intersecting arrangements", "all bipartite", 10,
          check_curve_bipartite),
    Check("A11", "column generation matches the brute-force LP on random graphs", "mismatches=0 C5=5/2", 120,
          check_oracle),
    Check("A12", "antipodal 3-colorings of great-pseudocircle arrangements (evidence)", "solver terminates", 600,
          check_antipodal),
)


def run_check(check: Check, scope: str = FAST_SCOPE) -> CheckResult:
    t0 = time.perf_counter()
    try:
        computed, ok = check.run(scope)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        computed, ok = f"error: {type(exc).__name__}: {exc}", False
    dt = time.perf_counter() - t0
    return CheckResult(check.id, check.citation, computed, check.expected, ok and dt < check.limit, dt)


@dataclass(frozen=True)
class VerificationReport:
    scope: str
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self, details: bool = False) -> list[str]:
        out = [f"report-v1 {self.scope}"]
        for r in self.results:
            out.append(r.line())
            if details:
                out.append(f"  computed: {r.computed}")
                out.append(f"  expected: {r.expected}")
                out.append(f"  runtime: {r.runtime:.2f}s")
        return out


def verify_suite(scope: str = FAST_SCOPE, ids=None, progress=None) -> VerificationReport:
    if scope not in (FAST_SCOPE, ALL_SCOPE):
        raise ValueError(f"unknown scope {scope!r}")
    results = []
    for check in CHECKS:
        if ids is not None and check.id not in ids:
            continue
        r = run_check(check, scope)
        if progress is not None:
            progress(r)
        results.append(r)
    return VerificationReport(scope, tuple(results))
