"""Command line interface.

Reports go to stdout as ``key: value`` lines.  Exit status is 0 on success,
1 when the inspected property fails, and 2 for unusable input.  A map can be
given as a file path or as ``fixture:<id>`` for a bundled example.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .arrangement import as_arrangement, properties
from .coloring import (
    antipodal_three_coloring, chromatic_number, first_noncritical, format_coloring,
    independence_number,
)
from .constructions import add_parallel_triple, corona, crown, expand_vertex
from .errors import AdjacentAntipodes, NoInvolution, PseudocircleError
from .fixture import fixture_ids, load_fixture
from .fractional import format_certificate, fractional_chromatic, verify_certificate
from .planemap import PlaneMap, analyze, format_map, parse_map
from .render import render_svg
from .verify import ALL_SCOPE, FAST_SCOPE, verify_suite


class InputError(Exception):
    pass


def read_map(spec: str) -> PlaneMap:
    if spec.startswith("fixture:"):
        return load_fixture(spec.split(":", 1)[1]).map
    path = Path(spec)
    try:
        text = path.read_text() if spec != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}") from exc
    return parse_map(text)


def emit(lines) -> None:
    for line in lines:
        print(line)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# subcommands

def cmd_check(args) -> int:
    m = read_map(args.map)
    emit(analyze(m).lines())
    four = all(m.degree(v) == 4 for v in range(m.num_vertices))
    print(f"degree_four: {_bool(four)}")
    if not four or m.curve is None:
        reason = "not 4-regular" if not four else "no curve labels"
        print(f"arrangement: skipped ({reason})")
        return 0
    try:
        a = as_arrangement(m)
    except PseudocircleError as exc:
        print(f"arrangement: invalid ({type(exc).__name__}: {exc})")
        return 1
    print("arrangement: valid")
    emit(properties(a).lines()[4:])
    return 0


def cmd_chromatic(args) -> int:
    chi, col = chromatic_number(read_map(args.map).graph())
    print(f"chi: {chi}")
    if args.coloring:
        Path(args.coloring).write_text(format_coloring(col))
    return 0


def cmd_fractional(args) -> int:
    g = read_map(args.map).graph()
    cert = fractional_chromatic(g)
    ok, why = verify_certificate(g, cert)
    print(f"chi_f: {_frac(cert.value)}")
    print(f"columns: {len(cert.primal)}")
    print(f"certificate: {'verified' if ok else 'rejected (' + why + ')'}")
    if args.certificate:
        Path(args.certificate).write_text(format_certificate(cert))
    return 0 if ok else 1


def cmd_alpha(args) -> int:
    alpha, witness = independence_number(read_map(args.map).graph())
    print(f"alpha: {alpha}")
    print("witness: " + ",".join(map(str, sorted(witness))))
    return 0


def cmd_critical(args) -> int:
    g = read_map(args.map).graph()
    chi, _ = chromatic_number(g)
    print(f"chi: {chi}")
    if chi != 4:
        print(f"{args.mode}_critical: not_applicable (chromatic number {chi})")
        return 1
    bad = first_noncritical(g, args.mode)
    print(f"{args.mode}_critical: {_bool(bad is None)}")
    if bad is not None:
        print(f"noncritical_{args.mode}: {bad if args.mode == 'vertex' else '%d-%d' % bad}")
        return 1
    return 0


def cmd_antipodal(args) -> int:
    a = as_arrangement(read_map(args.map))
    try:
        col = antipodal_three_coloring(a)
    except (NoInvolution, AdjacentAntipodes) as exc:
        print(f"antipodal_coloring: not_applicable ({type(exc).__name__}: {exc})")
        return 1
    print(f"antipodal_coloring: {'exists' if col is not None else 'none'}")
    if col is not None and args.coloring:
        Path(args.coloring).write_text(format_coloring(col))
    return 0 if col is not None else 1


def cmd_construct(args) -> int:
    m = read_map(args.map)
    if args.op == "corona":
        out, receipt = corona(as_arrangement(m), _need(args.face, "--face"))
        out = out.map
    elif args.op == "crown":
        out, receipt = crown(m, _need(args.face, "--face"))
    elif args.op == "bundle":
        a, receipt, _ = add_parallel_triple(as_arrangement(m), _need(args.curve, "--curve"), args.outer_face)
        out = a.map
    else:
        out = expand_vertex(m, _need(args.vertex, "--vertex"))
        receipt = None
    text = format_map(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if receipt is not None:
        emit(receipt.lines())
    else:
        print("operation: expand")
        print(f"vertex_delta: {out.num_vertices - m.num_vertices}")
        print(f"edge_delta: {out.num_edges - m.num_edges}")
    return 0


def _need(value, flag):
    if value is None:
        raise InputError(f"this operation needs {flag}")
    return value


def cmd_render(args) -> int:
    svg = render_svg(read_map(args.map))
    if args.output:
        Path(args.output).write_text(svg)
        print(f"written: {args.output}")
    else:
        sys.stdout.write(svg)
    return 0


def cmd_verify(args) -> int:
    def progress(r):
        if args.progress:
            print(f"{r.id} {'pass' if r.passed else 'fail'} {r.runtime:.1f}s", file=sys.stderr)
    ids = set(args.only.split(",")) if args.only else None
    report = verify_suite(args.suite, ids=ids, progress=progress)
    emit(report.lines(details=args.details))
    return 0 if report.ok else 1


def cmd_fixtures(args) -> int:
    for fid in fixture_ids():
        fx = load_fixture(fid)
        if args.export:
            out = Path(args.export)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{fid}.map").write_text(format_map(fx.map))
        print(f"{fid}: {fx.source}")
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pseudocircles", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def with_map(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("map", help="planemap-v1 file, '-' for stdin, or fixture:<id>")
        sp.set_defaults(fn=fn)
        return sp

    with_map("check", cmd_check, "validate a map and report arrangement properties")
    sp = with_map("chromatic", cmd_chromatic, "exact chromatic number")
    sp.add_argument("--coloring", help="write the witness coloring (coloring-v1)")
    sp = with_map("fractional", cmd_fractional, "exact fractional chromatic number")
    sp.add_argument("--certificate", help="write the certificate (fraccert-v1)")
    with_map("alpha", cmd_alpha, "independence number")
    sp = with_map("critical", cmd_critical, "4-vertex or 4-edge criticality")
    sp.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    sp = with_map("antipodal", cmd_antipodal, "3-coloring constant on antipodal pairs")
    sp.add_argument("--coloring", help="write the coloring (coloring-v1)")

    sp = sub.add_parser("construct", help="apply a construction and print the new map and a receipt")
    sp.add_argument("op", choices=("corona", "crown", "bundle", "expand"))
    sp.add_argument("map")
    sp.add_argument("--face", type=int, help="face index (corona, crown)")
    sp.add_argument("--curve", type=int, help="curve id (bundle)")
    sp.add_argument("--outer-face", type=int, dest="outer_face", help="outer face for the bundle sides")
    sp.add_argument("--vertex", type=int, help="vertex index (expand)")
    sp.add_argument("-o", "--output", help="write the map here instead of stdout")
    sp.set_defaults(fn=cmd_construct)

    sp = with_map("render", cmd_render, "SVG drawing by Tutte's embedding")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("verify", help="run the reproduction checks")
    sp.add_argument("--suite", choices=(FAST_SCOPE, ALL_SCOPE), default=FAST_SCOPE)
    sp.add_argument("--only", help="comma separated check ids")
    sp.add_argument("--details", action="store_true", help="also print computed values and timings")
    sp.add_argument("--progress", action="store_true", help="print timings to stderr as checks finish")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("fixtures", help="list bundled fixtures")
    sp.add_argument("--export", help="copy the fixture maps into this directory")
    sp.set_defaults(fn=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (InputError, PseudocircleError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
