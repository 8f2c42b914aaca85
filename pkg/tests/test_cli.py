import subprocess
import sys

import networkx as nx
import pytest

from pseudocircles.cli import main
from pseudocircles.coloring import is_proper, parse_coloring
from pseudocircles.fixture import load_fixture
from pseudocircles.fractional import parse_certificate, verify_certificate
from pseudocircles.planemap import format_map, from_graph, is_isomorphic, parse_map


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(out):
    return dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)


@pytest.fixture
def cube_file(tmp_path):
    p = tmp_path / "cube.map"
    p.write_text(format_map(from_graph(nx.cubical_graph())))
    return str(p)


def test_chromatic_fig1b(capsys, tmp_path):
    col_file = tmp_path / "c.txt"
    code, out, _ = run(capsys, "chromatic", "fixture:fig1b", "--coloring", str(col_file))
    assert code == 0 and out.splitlines()[0] == "chi: 4"
    col = parse_coloring(col_file.read_text())
    assert is_proper(load_fixture("fig1b").map, col)


def test_fractional_fig1b(capsys, tmp_path):
    cert_file = tmp_path / "cert.txt"
    code, out, _ = run(capsys, "fractional", "fixture:fig1b", "--certificate", str(cert_file))
    assert code == 0
    assert kv(out)["chi_f"] == "3/1" and kv(out)["certificate"] == "verified"
    cert = parse_certificate(cert_file.read_text())
    assert verify_certificate(load_fixture("fig1b").map.graph(), cert)[0]


def test_check_cube_skips_arrangement(capsys, cube_file):
    code, out, _ = run(capsys, "check", cube_file)
    assert code == 0
    assert "degree_four: false" in out.splitlines()
    assert kv(out)["arrangement"].startswith("skipped")


def test_check_arrangement(capsys):
    code, out, _ = run(capsys, "check", "fixture:fig6a")
    d = kv(out)
    assert code == 0 and d["arrangement"] == "valid"
    assert d["great"] == "true" and d["triangle_saturated"] == "true"


def test_check_invalid_arrangement(capsys, tmp_path):
    m = load_fixture("octahedron").map
    bad = m.with_curves([min(d, m.twin[d]) for d in range(m.dart_count)])
    p = tmp_path / "bad.map"
    p.write_text(format_map(bad))
    code, out, _ = run(capsys, "check", str(p))
    assert code == 1 and kv(out)["arrangement"].startswith("invalid (NonTransversalVertex")


def test_alpha(capsys):
    code, out, _ = run(capsys, "alpha", "fixture:octahedron")
    assert code == 0 and kv(out)["alpha"] == "2"


@pytest.mark.parametrize("argv, code, line", [
    (("critical", "fixture:crowning18", "--mode", "edge"), 0, "edge_critical: true"),
    (("critical", "fixture:fig1b", "--mode", "vertex"), 1, "vertex_critical: false"),
    (("critical", "fixture:fig6a"), 1, "vertex_critical: not_applicable (chromatic number 3)"),
    (("antipodal", "fixture:fig10"), 0, "antipodal_coloring: exists"),
    (("antipodal", "fixture:fig6a"), 1, "antipodal_coloring: none"),
])
def test_property_exit_codes(capsys, argv, code, line):
    got, out, _ = run(capsys, *argv)
    assert got == code and line in out.splitlines()


def test_antipodal_not_applicable(capsys):
    code, out, _ = run(capsys, "antipodal", "fixture:fig1b")
    assert code == 1 and kv(out)["antipodal_coloring"].startswith("not_applicable")


@pytest.mark.parametrize("argv", [
    ("chromatic", "/no/such/file.map"),
    ("construct", "crown", "fixture:fig6a"),
    ("chromatic", "fixture:nope"),
    ("frobnicate",),
    (),
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_parse_error_is_input_error(capsys, tmp_path):
    p = tmp_path / "junk.map"
    p.write_text("planemap-v1 2\ntwin: 0 1\nnext: 0 1\n")
    code, _, err = run(capsys, "check", str(p))
    assert code == 2 and "NotInvolution" in err


def test_construct_corona(capsys, tmp_path):
    out_file = tmp_path / "k.map"
    m = load_fixture("fig6a").map
    pent = next(f for f, d in enumerate(m.faces) if len(d) == 5)
    code, out, _ = run(capsys, "construct", "corona", "fixture:fig6a", "--face", str(pent), "-o", str(out_file))
    assert code == 0 and kv(out)["vertex_delta"] == "10"
    assert is_isomorphic(parse_map(out_file.read_text()), load_fixture("fig6b").map)


def test_construct_to_stdout(capsys):
    code, out, _ = run(capsys, "construct", "bundle", "fixture:octahedron", "--curve", "0")
    assert code == 0
    body = out[: out.index("operation:")]
    assert parse_map(body).num_vertices == 14
    code, out, _ = run(capsys, "construct", "expand", "fixture:cube", "--vertex", "0")
    assert code == 0 and kv(out)["vertex_delta"] == "2"


def test_render(capsys, tmp_path):
    p = tmp_path / "o.svg"
    code, out, _ = run(capsys, "render", "fixture:octahedron", "-o", str(p))
    assert code == 0 and p.read_text().startswith("<svg")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--only", "A01,A06")
    assert code == 0
    assert out.splitlines()[0] == "report-v1 fast"
    assert [ln.split()[:3] for ln in out.splitlines()[1:]] == [["check", "A01", "pass"], ["check", "A06", "pass"]]
    code, out, _ = run(capsys, "verify", "--only", "A09", "--details")
    assert code == 1 and "computed: error: NotVertexCritical" in out


def test_fixtures_export(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures", "--export", str(tmp_path))
    assert code == 0 and "fig1b:" in out
    assert parse_map((tmp_path / "fig1b.map").read_text()) == load_fixture("fig1b").map


def test_module_entry_point(tmp_path):
    p = tmp_path / "two.map"
    p.write_text(format_map(load_fixture("two_circles").map))
    res = subprocess.run([sys.executable, "-m", "pseudocircles", "chromatic", str(p)],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "chi: 2"
