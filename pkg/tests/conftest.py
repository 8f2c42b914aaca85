import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pseudocircles.arrangement import as_arrangement
from pseudocircles.fixture import load_fixture
from pseudocircles.planemap import from_graph, medial, straight_ahead_curves

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def stacked_planar_graph(seed: int, n: int, keep: float) -> nx.Graph:
    """Random connected planar graph: a stacked triangulation with some
    edges removed (a spanning tree is always kept)."""
    rng = random.Random(seed)
    g = nx.Graph([(0, 1), (1, 2), (0, 2)])
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        g.add_edges_from([(v, a), (v, b), (v, c)])
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    tree = set(map(frozenset, nx.minimum_spanning_edges(g, data=False)))
    for e in list(g.edges()):
        if frozenset(e) not in tree and rng.random() > keep:
            g.remove_edge(*e)
    return g


@st.composite
def planar_graphs(draw, min_n=3, max_n=10):
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(min_n, max_n))
    keep = draw(st.sampled_from([0.3, 0.6, 1.0]))
    return stacked_planar_graph(seed, n, keep)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 8))
    p = draw(st.sampled_from([0.2, 0.4, 0.6, 0.8]))
    return nx.gnp_random_graph(n, p, seed=draw(st.integers(0, 10**6)))


@st.composite
def plane_maps(draw, min_n=3, max_n=10):
    return from_graph(draw(planar_graphs(min_n, max_n)))


@pytest.fixture(scope="session")
def octahedron():
    return as_arrangement(straight_ahead_curves(medial(from_graph(nx.complete_graph(4)))))


@pytest.fixture(scope="session")
def cube():
    return from_graph(nx.cubical_graph())


@pytest.fixture(scope="session")
def fx():
    return lambda fid: load_fixture(fid)


def grown_arrangement(seed: int, steps: int):
    """Two circles plus ``steps`` random operations that keep a valid
    arrangement: a small curve around a vertex, or a parallel triple."""
    from pseudocircles.constructions import add_parallel_triple
    from pseudocircles.planemap import insert_curve

    rng = random.Random(seed)
    a = as_arrangement(load_fixture("two_circles").map)
    for _ in range(steps):
        m = a.map
        if rng.random() < 0.75 or a.map.num_vertices > 40:
            v = rng.randrange(m.num_vertices)
            a = as_arrangement(insert_curve(m, list(m.vertices[v]))[0])
        else:
            c = rng.choice(a.curve_ids)
            a = add_parallel_triple(a, c, rng.randrange(m.num_faces))[0]
    return a


@st.composite
def arrangements(draw, max_steps=4):
    return grown_arrangement(draw(st.integers(0, 10**6)), draw(st.integers(0, max_steps)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
