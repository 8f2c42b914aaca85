"""Brute-force reference for the fractional chromatic number.

Independent of the column-generation code: every maximal independent set is
listed up front, the covering LP and its dual are solved in floating point by
HiGHS, and the solutions are rounded to nearby fractions and then checked
exactly.  Only meant for small graphs.
"""
from __future__ import annotations

from fractions import Fraction

import networkx as nx
import numpy as np
from scipy.optimize import linprog


def maximal_independent_sets(g: nx.Graph) -> list[frozenset]:
    comp = nx.complement(g)
    return sorted((frozenset(c) for c in nx.find_cliques(comp)), key=lambda s: sorted(s))


def _round(xs, denominator: int) -> list[Fraction]:
    return [Fraction(float(x)).limit_denominator(denominator) for x in xs]


def brute_force_chi_f(g: nx.Graph, max_denominator: int = 10_000) -> Fraction:
    nodes = sorted(g.nodes())
    if not nodes:
        return Fraction(0)
    sets = maximal_independent_sets(g)
    pos = {v: i for i, v in enumerate(nodes)}
    a = np.zeros((len(nodes), len(sets)))
    for j, s in enumerate(sets):
        for v in s:
            a[pos[v], j] = 1.0
    primal = linprog(np.ones(len(sets)), A_ub=-a, b_ub=-np.ones(len(nodes)), bounds=(0, None), method="highs")
    dual = linprog(-np.ones(len(nodes)), A_ub=a.T, b_ub=np.ones(len(sets)), bounds=(0, None), method="highs")
    if primal.status != 0 or dual.status != 0:
        raise RuntimeError("reference LP did not solve")
    x = _round(primal.x, max_denominator)
    w = _round(dual.x, max_denominator)
    # exact feasibility of the rounded pair, then weak duality closes the gap
    for i in range(len(nodes)):
        if sum(x[j] for j in range(len(sets)) if a[i, j]) < 1 or w[i] < 0:
            raise ArithmeticError("rounded primal is infeasible")
    for j, s in enumerate(sets):
        if sum(w[pos[v]] for v in s) > 1 or x[j] < 0:
            raise ArithmeticError("rounded dual is infeasible")
    upper, lower = sum(x), sum(w)
    if upper != lower:
        raise ArithmeticError(f"rounded bounds differ: {lower} < {upper}")
    return upper
