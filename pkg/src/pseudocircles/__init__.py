"""Arrangements of pseudocircles as plane maps, with exact coloring tools."""

__version__ = "0.1.0"

from .planemap import (
    PlaneMap, ConstructionReceipt, analyze, canonical_form, dual, face_two_coloring, format_map,
    insert_curve, is_isomorphic, medial, parse_map, premedial_pair,
)
from .arrangement import (
    Arrangement, antipodal_involution, as_arrangement, intersection_graph, is_great,
    is_intersecting, is_triangle_saturated, properties,
)
from .coloring import (
    VertexColoring, EdgeColoring, BFoldColoring, antipodal_three_coloring, bfold_from_critical,
    chromatic_number, claim3_independent_set, criticality, degeneracy_three_coloring,
    edge_three_coloring, independence_number, tait_vertex_coloring, trihamiltonian,
)
from .constructions import (
    add_parallel_triple, corona, crown, expand_vertex, gen_unique3ec, lift_coloring,
    make_intersecting,
)
from .fractional import FractionalCertificate, bound_suite, fractional_chromatic, mwis, verify_certificate
from .render import render_svg
from .fixture import load_fixture

__all__ = [
    "add_parallel_triple",
    "analyze",
    "antipodal_involution",
    "antipodal_three_coloring",
    "Arrangement",
    "as_arrangement",
    "bfold_from_critical",
    "BFoldColoring",
    "bound_suite",
    "canonical_form",
    "chromatic_number",
    "claim3_independent_set",
    "ConstructionReceipt",
    "corona",
    "criticality",
    "crown",
    "degeneracy_three_coloring",
    "dual",
    "edge_three_coloring",
    "EdgeColoring",
    "expand_vertex",
    "face_two_coloring",
    "format_map",
    "fractional_chromatic",
    "FractionalCertificate",
    "gen_unique3ec",
    "independence_number",
    "insert_curve",
    "intersection_graph",
    "is_great",
    "is_intersecting",
    "is_isomorphic",
    "is_triangle_saturated",
    "lift_coloring",
    "load_fixture",
    "make_intersecting",
    "medial",
    "mwis",
    "parse_map",
    "PlaneMap",
    "premedial_pair",
    "properties",
    "render_svg",
    "tait_vertex_coloring",
    "trihamiltonian",
    "verify_certificate",
    "VertexColoring",
]
