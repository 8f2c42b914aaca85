"""Low-level exact search kernels on integer-indexed adjacency lists.

These are the hot loops behind :mod:`pseudocircles.coloring` and
:mod:`pseudocircles.fractional`; they take ``adj[v] -> list of neighbours``
and know nothing about maps or networkx.
"""
from __future__ import annotations

import random
import sys
from typing import Sequence

Adjacency = Sequence[Sequence[int]]


class BudgetExceeded(Exception):
    pass


def k_coloring(
    adj: Adjacency, k: int, fixed: dict[int, int] | None = None, budget: int | None = None
) -> list[int] | None:
    """Proper coloring with colors ``0..k-1`` or ``None`` if none exists.

    DSATUR-style backtracking: always branch on an uncolored vertex with the
    fewest available colors (ties: most uncolored neighbours, then lowest
    index), trying colors in increasing order.  Unless ``fixed`` is given,
    colors are introduced in order, which removes color-permutation symmetry.
    With a ``budget`` the search gives up (``BudgetExceeded``) after that
    many assignments.
    """
    n = len(adj)
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    # blocked[v][c] = number of colored neighbours of v with color c
    blocked = [[0] * k for _ in range(n)]
    free_deg = [len(set(a) - {v}) for v, a in enumerate(adj)]
    nbrs = [sorted(set(a) - {v}) for v, a in enumerate(adj)]
    if any(v in a for v, a in enumerate(adj)):
        return None  # a loop can never be properly colored
    symmetric = not fixed

    spent = [0]

    def assign(v, c):
        spent[0] += 1
        if budget is not None and spent[0] > budget:
            raise BudgetExceeded
        color[v] = c
        for w in nbrs[v]:
            blocked[w][c] += 1
            free_deg[w] -= 1

    def unassign(v, c):
        color[v] = -1
        for w in nbrs[v]:
            blocked[w][c] -= 1
            free_deg[w] += 1

    if fixed:
        for v, c in fixed.items():
            if not 0 <= c < k or blocked[v][c]:
                return None
            assign(v, c)
        spent[0] = 0

    uncolored = [v for v in range(n) if color[v] == -1]
    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 100)

    def pick():
        best = -1
        best_key = None
        for v in uncolored:
            if color[v] != -1:
                continue
            row = blocked[v]
            avail = k - sum(1 for c in range(k) if row[c])
            key = (avail, -free_deg[v], v)
            if best_key is None or key < best_key:
                best_key = key
                best = v
                if avail == 0:
                    break
        return best, best_key

    def solve(depth, used):
        if depth == len(uncolored):
            return True
        v, key = pick()
        if key[0] == 0:
            return False
        row = blocked[v]
        top = min(k, used + 1) if symmetric else k
        for c in range(top):
            if row[c]:
                continue
            assign(v, c)
            ok = True
            for w in nbrs[v]:
                if color[w] == -1 and all(blocked[w][x] for x in range(k)):
                    ok = False
                    break
            if ok and solve(depth + 1, max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    used0 = (max(color) + 1) if fixed else 0
    if solve(0, used0):
        return color
    return None


def k_coloring_restarts(adj: Adjacency, k: int, seed: int = 0, first_budget: int | None = None) -> list[int] | None:
    """Same answer as :func:`k_coloring`, but tries shuffled vertex orders
    under doubling search budgets first.  Backtracking on colorable inputs
    has heavy-tailed running times, and restarts cut the tail; the budget
    grows without bound, so the search stays exact."""
    n = len(adj)
    rng = random.Random(seed)
    budget = first_budget or 4 * n + 16
    perm = list(range(n))
    while True:
        inv = [0] * n
        for new, old in enumerate(perm):
            inv[old] = new
        radj = [[inv[w] for w in adj[old]] for old in perm]
        try:
            sol = k_coloring(radj, k, budget=budget)
        except BudgetExceeded:
            budget *= 2
            rng.shuffle(perm)
            continue
        if sol is None:
            return None
        return [sol[inv[v]] for v in range(n)]


def max_weight_independent_set(adj: Adjacency, weights: Sequence[int]) -> tuple[int, list[int]]:
    """Exact maximum-weight independent set for nonnegative integer weights.

    Branch and bound over bitsets.  The bound partitions the candidate set
    greedily into cliques and sums the heaviest weight of each clique.
    Ties are broken towards lexicographically smaller vertex sets because
    vertices are branched in increasing index order with "take" first.
    """
    n = len(adj)
    nbr = [0] * n
    for v in range(n):
        for w in adj[v]:
            if w != v:
                nbr[v] |= 1 << w
    loops = 0
    for v in range(n):
        if v in adj[v]:
            loops |= 1 << v
    cand0 = ((1 << n) - 1) & ~loops
    # drop zero-weight vertices; they never help and are re-added by callers if wanted
    for v in range(n):
        if weights[v] <= 0:
            cand0 &= ~(1 << v)
    order = sorted(range(n), key=lambda v: (-weights[v], v))

    def bound(cand):
        total = 0
        rest = cand
        while rest:
            # heaviest remaining vertex starts a clique
            v = None
            for u in order:
                if rest >> u & 1:
                    v = u
                    break
            clique = 1 << v
            common = nbr[v] & rest
            while common:
                u = None
                for x in order:
                    if common >> x & 1:
                        u = x
                        break
                clique |= 1 << u
                common &= nbr[u]
            total += weights[v]
            rest &= ~clique
        return total

    best_w = 0
    best_set = 0

    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 200))

    def branch(cand, cur_w, cur_set):
        nonlocal best_w, best_set
        if not cand:
            if cur_w > best_w:
                best_w, best_set = cur_w, cur_set
            return
        if cur_w + bound(cand) <= best_w:
            return
        # branch on the heaviest candidate
        v = None
        for u in order:
            if cand >> u & 1:
                v = u
                break
        branch(cand & ~nbr[v] & ~(1 << v), cur_w + weights[v], cur_set | (1 << v))
        branch(cand & ~(1 << v), cur_w, cur_set)

    branch(cand0, 0, 0)
    return best_w, [v for v in range(n) if best_set >> v & 1]
