from dataclasses import replace
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from pseudocircles.arrangement import as_arrangement
from pseudocircles.errors import NegativeWeight, ParseError
from pseudocircles.fractional import (
    bound_suite, format_certificate, fractional_chromatic, mwis,
    parse_certificate, verify_certificate,
)
from pseudocircles.oracle import brute_force_chi_f, maximal_independent_sets

from conftest import small_graphs
from oracles import brute_mwis_weight


def wheel(k):
    g = nx.cycle_graph(k)
    g.add_edges_from((k, i) for i in range(k))
    return g


@pytest.mark.parametrize("g, value", [
    (nx.cycle_graph(5), Fraction(5, 2)),
    (nx.cycle_graph(7), Fraction(7, 3)),
    (nx.petersen_graph(), Fraction(5, 2)),
    (nx.complete_graph(4), Fraction(4)),
    (nx.cycle_graph(6), Fraction(2)),
    (wheel(5), Fraction(7, 2)),
    (nx.empty_graph(3), Fraction(1)),
    (nx.Graph(), Fraction(0)),
])
def test_known_values(g, value):
    cert = fractional_chromatic(g)
    assert cert.value == value
    assert verify_certificate(g, cert) == (True, "ok")


@given(small_graphs())
def test_matches_lp_oracle(g):
    cert = fractional_chromatic(g)
    assert cert.value == brute_force_chi_f(g)


def test_oracle_lists_maximal_sets():
    sets = maximal_independent_sets(nx.cycle_graph(5))
    assert len(sets) == 5 and all(len(s) == 2 for s in sets)


@given(small_graphs(), st.lists(st.integers(0, 12), min_size=8, max_size=8))
def test_mwis_matches_brute_force(g, ws):
    w = {v: Fraction(ws[v], 1 + v % 3) for v in g.nodes()}
    chosen, weight = mwis(g, w)
    assert weight == brute_mwis_weight(g, w)
    assert sum((w[v] for v in chosen), Fraction(0)) == weight
    assert not any(g.has_edge(u, v) for u in chosen for v in chosen)


def test_mwis_rejects_negative_weights():
    with pytest.raises(NegativeWeight):
        mwis(nx.path_graph(2), {0: -1, 1: 1})


# -- certificates --------------------------------------------------------------

@pytest.fixture(scope="module")
def c5():
    g = nx.cycle_graph(5)
    return g, fractional_chromatic(g)


def test_certificate_round_trip(c5):
    g, cert = c5
    back = parse_certificate(format_certificate(cert))
    assert back == cert
    assert verify_certificate(g, back)[0]


def test_tampered_certificates(c5):
    g, cert = c5
    cases = {
        "value": replace(cert, value=Fraction(2)),
        "negative primal": replace(cert, primal=((cert.primal[0][0], Fraction(-1)),) + cert.primal[1:]),
        "edge": replace(cert, primal=(((0, 1), Fraction(1)),) + cert.primal[1:]),
        "cover": replace(cert, primal=cert.primal[1:]),
        "dual sum": replace(cert, dual={**cert.dual, 0: Fraction(1)}),
        "negative dual": replace(cert, dual={**cert.dual, 0: Fraction(-1, 2), 1: Fraction(1)}),
        "dual infeasible": replace(cert, dual={0: Fraction(5, 4), 1: 0, 2: Fraction(5, 4), 3: 0, 4: 0}),
        "unknown vertex": replace(cert, primal=(((9,), Fraction(0)),) + cert.primal),
    }
    for name, bad in cases.items():
        ok, why = verify_certificate(g, bad)
        assert not ok, name
        assert why != "ok"


@pytest.mark.parametrize("text", [
    "", "fraccert-v2\n", "fraccert-v1\nset: 0 weight: 1/1\n",
    "fraccert-v1\nvalue: x\n", "fraccert-v1\nvalue: 1/0\n", "fraccert-v1\nvalue: 1\nbogus\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_certificate(text)


# -- bounds ----------------------------------------------------------------------

@pytest.mark.parametrize("fid", ["octahedron", "fig6a", "fig4_n7"])
def test_bound_suite(fx, fid):
    rep = bound_suite(as_arrangement(fx(fid).map), with_critical=False)
    assert rep.ok
    lines = rep.lines()
    assert lines[0] == f"n: {rep.n}"
    assert any(line.startswith("intersecting_bound:") and line.endswith("pass") for line in lines)
