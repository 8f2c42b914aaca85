"""Exact fractional chromatic number.

The covering LP ``min 1.x  s.t.  Mx >= 1, x >= 0`` over independent sets is
solved by column generation: a revised simplex in exact rationals (Bland's
rule) on the restricted master, and an exact maximum-weight independent set
as pricing oracle.  Termination is certified by the dual weighting.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from ._search import max_weight_independent_set
from .arrangement import Arrangement, intersection_graph, is_intersecting
from .coloring import (
    as_graph,
    chromatic_number,
    criticality,
    independence_number,
)
from .errors import NegativeWeight, NotFourChromatic, ParseError

ZERO = Fraction(0)
ONE = Fraction(1)


def mwis(g, w: Mapping) -> tuple[tuple, Fraction]:
    """Maximum-weight independent set for nonnegative rational weights.

    Vertices of weight zero are never chosen.
    """
    g = as_graph(g)
    nodes = sorted(g.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    weights = [Fraction(w.get(v, 0)) for v in nodes]
    if any(x < 0 for x in weights):
        raise NegativeWeight("weights must be nonnegative")
    scale = lcm(*(x.denominator for x in weights)) if weights else 1
    ints = [int(x * scale) for x in weights]
    adj = [[pos[u] for u in g[v] if u != v] for v in nodes]
    total, chosen = max_weight_independent_set(adj, ints)
    return tuple(nodes[i] for i in chosen), Fraction(total, scale)


# --------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class FractionalCertificate:
    value: Fraction
    primal: tuple[tuple[tuple, Fraction], ...]
    dual: dict
    stats: dict = field(default_factory=dict, compare=False)


def verify_certificate(g, cert: FractionalCertificate) -> tuple[bool, str]:
    """Check both certificates exactly; returns ``(ok, diagnostic)``."""
    g = as_graph(g)
    cover = {v: ZERO for v in g.nodes()}
    total = ZERO
    for members, x in cert.primal:
        if x < 0:
            return False, f"negative primal weight {x}"
        for u in members:
            if u not in cover:
                return False, f"primal set mentions unknown vertex {u}"
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if g.has_edge(u, v):
                    return False, f"primal set contains edge {u}-{v}"
        for u in members:
            cover[u] += x
        total += x
    for v, c in cover.items():
        if c < 1:
            return False, f"vertex {v} covered {c} < 1"
    if total != cert.value:
        return False, f"primal objective {total} != value {cert.value}"
    w = {v: Fraction(cert.dual.get(v, 0)) for v in g.nodes()}
    if any(x < 0 for x in w.values()):
        return False, "negative dual weight"
    if sum(w.values(), ZERO) != cert.value:
        return False, f"dual objective {sum(w.values(), ZERO)} != value {cert.value}"
    heavy, weight = mwis(g, w)
    if weight > 1:
        return False, f"independent set {heavy} has dual weight {weight} > 1"
    return True, "ok"


# --------------------------------------------------------------------------
# exact revised simplex on the restricted master

class _Master:
    """Rows are vertices; variables are surplus columns (indices ``0..n-1``,
    cost 0, column ``-e_v``) followed by independent sets (cost 1)."""

    def __init__(self, n: int, columns: Sequence[frozenset[int]]):
        self.n = n
        self.columns: list[frozenset[int]] = []
        self.known: set[frozenset[int]] = set()
        for c in columns:
            self.add(c)
        # start from the singleton columns: basis matrix is the identity
        self.basis = [n + self.columns.index(frozenset([v])) for v in range(n)]
        self.binv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        self.xb = [ONE] * n
        self.pivots = 0

    def add(self, col: frozenset[int]) -> bool:
        if col in self.known:
            return False
        self.known.add(col)
        self.columns.append(col)
        return True

    def cost(self, j: int) -> Fraction:
        return ZERO if j < self.n else ONE

    def column_times_binv(self, j: int) -> list[Fraction]:
        """``B^-1 a_j``."""
        if j < self.n:
            return [-row[j] for row in self.binv]
        members = self.columns[j - self.n]
        return [sum((row[v] for v in members), ZERO) for row in self.binv]

    def duals(self) -> list[Fraction]:
        y = [ZERO] * self.n
        for i, j in enumerate(self.basis):
            if j >= self.n:
                row = self.binv[i]
                for v in range(self.n):
                    if row[v]:
                        y[v] += row[v]
        return y

    def reduced_cost(self, j: int, y: list[Fraction]) -> Fraction:
        if j < self.n:
            return y[j]  # 0 - y.(-e_j)
        return ONE - sum((y[v] for v in self.columns[j - self.n]), ZERO)

    def solve(self) -> None:
        """Bland's rule: lowest-index entering variable with negative reduced
        cost, lowest-index leaving variable among ratio ties."""
        while True:
            y = self.duals()
            in_basis = set(self.basis)
            entering = None
            for j in range(self.n + len(self.columns)):
                if j not in in_basis and self.reduced_cost(j, y) < 0:
                    entering = j
                    break
            if entering is None:
                return
            u = self.column_times_binv(entering)
            leave = None
            best = None
            for i in range(self.n):
                if u[i] > 0:
                    ratio = self.xb[i] / u[i]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                raise ArithmeticError("restricted master is unbounded")
            self._pivot(leave, entering, u)

    def _pivot(self, r: int, j: int, u: list[Fraction]) -> None:
        pr = u[r]
        row_r = [x / pr for x in self.binv[r]]
        xr = self.xb[r] / pr
        for i in range(self.n):
            if i == r or not u[i]:
                continue
            f = u[i]
            row = self.binv[i]
            self.binv[i] = [a - f * b for a, b in zip(row, row_r)]
            self.xb[i] -= f * xr
        self.binv[r] = row_r
        self.xb[r] = xr
        self.basis[r] = j
        self.pivots += 1

    def primal(self) -> list[tuple[frozenset[int], Fraction]]:
        out = []
        for i, j in enumerate(self.basis):
            if j >= self.n and self.xb[i] > 0:
                out.append((self.columns[j - self.n], self.xb[i]))
        return out


def _maximal_through(adj: list[set[int]], v: int, n: int) -> frozenset[int]:
    chosen = {v}
    blocked = set(adj[v]) | {v}
    for u in range(n):
        if u not in blocked:
            chosen.add(u)
            blocked |= adj[u]
            blocked.add(u)
    return frozenset(chosen)


def fractional_chromatic(g) -> FractionalCertificate:
    """Exact fractional chromatic number with primal and dual certificates."""
    g = as_graph(g)
    nodes = sorted(g.nodes())
    n = len(nodes)
    if n == 0:
        return FractionalCertificate(ZERO, (), {})
    pos = {v: i for i, v in enumerate(nodes)}
    adj = [set(pos[u] for u in g[v] if u != v) for v in nodes]
    adj_list = [sorted(a) for a in adj]
    columns = [frozenset([v]) for v in range(n)]
    _, coloring = chromatic_number(g)
    for cls in coloring.classes():
        if cls:
            columns.append(frozenset(pos[v] for v in cls))
    for v in range(n):
        columns.append(_maximal_through(adj, v, n))
    master = _Master(n, columns)
    rounds = 0
    while True:
        master.solve()
        y = master.duals()
        scale = lcm(*(x.denominator for x in y))
        ints = [int(x * scale) for x in y]
        best, chosen = max_weight_independent_set(adj_list, ints)
        rounds += 1
        if best <= scale:
            break
        # grow the priced set to a maximal one; extra members cost nothing
        col = set(chosen)
        blocked = set(col)
        for u in col:
            blocked |= adj[u]
        for u in range(n):
            if u not in blocked:
                col.add(u)
                blocked |= adj[u]
                blocked.add(u)
        if not master.add(frozenset(col)):
            raise ArithmeticError("pricing returned a column already present")
    value = sum(y, ZERO)
    primal = tuple(
        (tuple(nodes[i] for i in sorted(col)), x) for col, x in sorted(master.primal(), key=lambda t: sorted(t[0]))
    )
    dual = {nodes[i]: y[i] for i in range(n)}
    cert = FractionalCertificate(value, primal, dual,
                                 stats={"rounds": rounds, "columns": len(master.columns), "pivots": master.pivots})
    ok, why = verify_certificate(g, cert)
    if not ok:
        raise ArithmeticError(f"internal certificate check failed: {why}")
    return cert


# --------------------------------------------------------------------------
# serialization

def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def format_certificate(cert: FractionalCertificate) -> str:
    lines = ["fraccert-v1", f"value: {_frac(cert.value)}"]
    for members, x in cert.primal:
        lines.append(f"set: {','.join(map(str, members))} weight: {_frac(x)}")
    lines.append("dual:")
    for v in sorted(cert.dual):
        lines.append(f"{v} {_frac(cert.dual[v])}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> FractionalCertificate:
    rows = [r.strip() for r in text.strip().splitlines() if r.strip()]
    if not rows or rows[0] != "fraccert-v1":
        raise ParseError("expected 'fraccert-v1' header")
    value = None
    primal = []
    dual = {}
    in_dual = False
    for r in rows[1:]:
        if r.startswith("value:"):
            value = _parse_frac(r.split(":", 1)[1].strip())
        elif r.startswith("set:"):
            body, _, weight = r[4:].partition("weight:")
            members = tuple(int(x) for x in body.strip().split(",") if x)
            primal.append((members, _parse_frac(weight.strip())))
        elif r == "dual:":
            in_dual = True
        elif in_dual:
            v, x = r.split()
            dual[int(v)] = _parse_frac(x)
        else:
            raise ParseError(f"unexpected line {r[:30]!r}")
    if value is None:
        raise ParseError("missing value line")
    return FractionalCertificate(value, tuple(primal), dual)


# --------------------------------------------------------------------------
# the bound suite

@dataclass(frozen=True)
class BoundCheck:
    name: str
    applicable: bool
    lhs: Fraction | None
    bound: Fraction | None
    ok: bool | None


@dataclass(frozen=True)
class BoundReport:
    n: int
    V: int
    chi_f: Fraction
    alpha: int
    min_degree: int
    checks: tuple[BoundCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok is not False for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"n: {self.n}", f"V: {self.V}", f"chi_f: {_frac(self.chi_f)}",
               f"alpha: {self.alpha}", f"min_degree: {self.min_degree}"]
        for c in self.checks:
            if not c.applicable:
                out.append(f"{c.name}: not_applicable")
            else:
                out.append(f"{c.name}: {_frac(c.lhs)} <= {_frac(c.bound)} "
                           f"{'pass' if c.ok else 'fail'}")
        return out


def bound_suite(a: Arrangement, with_critical: bool = True) -> BoundReport:
    """Evaluate every applicable upper bound on χ_f (and on |V|/α)."""
    g = a.graph()
    cert = fractional_chromatic(g)
    alpha, _ = independence_number(g)
    ig = intersection_graph(a)
    n, nv = a.n, g.number_of_nodes()
    delta = ig.min_degree
    d = ig.density
    chi_f = cert.value
    checks = []
    if is_intersecting(a):
        bound = 3 + Fraction(6, 3 * n - 2)
        checks.append(BoundCheck("intersecting_bound", True, chi_f, bound, chi_f <= bound))
    else:
        checks.append(BoundCheck("intersecting_bound", False, None, None, None))
    if d > Fraction(1, 2):
        bound = Fraction(3) / (2 * d - 1)
        checks.append(BoundCheck("min_degree_bound", True, chi_f, bound, chi_f <= bound))
    else:
        checks.append(BoundCheck("min_degree_bound", False, None, None, None))
    critical = False
    if with_critical:
        try:
            critical = criticality(g, "vertex")
        except NotFourChromatic:
            critical = False
    if critical:
        bound = 3 + Fraction(3, nv - 1)
        checks.append(BoundCheck("critical_bound", True, chi_f, bound, chi_f <= bound))
    else:
        checks.append(BoundCheck("critical_bound", False, None, None, None))
    if delta >= 2:
        ratio = Fraction(nv, alpha)
        bound = 3 + Fraction(3, delta - 1)
        checks.append(BoundCheck("independence_ratio_bound", True, ratio, bound, ratio <= bound))
    else:
        checks.append(BoundCheck("independence_ratio_bound", False, None, None, None))
    lower = Fraction(nv, alpha)
    checks.append(BoundCheck("lower_independence_ratio", True, lower, chi_f, lower <= chi_f))
    return BoundReport(n, nv, chi_f, alpha, delta, tuple(checks))
