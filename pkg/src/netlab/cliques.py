"""Maximal clique enumeration and the closure family of structural parameters.

Enumeration runs Bron-Kerbosch over a min-degree elimination (degeneracy)
ordering with greedy pivoting, which visits every maximal clique exactly once.

A graph is c-closed when every non-adjacent vertex pair has fewer than c
common neighbors, and weakly c-closed when repeatedly deleting vertices that
appear in no such pair (at threshold c) empties the graph.  The weak closure
is computed by always deleting the vertex whose worst surviving pair is
smallest; a pair cutoff with restart keeps the pair tables small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Callable

import numpy as np

from .budget import Budget
from .graph import Graph, peel_by_degree
from .locality import heterogeneity, locality

__all__ = [
    "CliqueStats",
    "ClosureStats",
    "enumerate_maximal_cliques",
    "closure",
    "weak_closure",
    "structural_report",
]


@dataclass(frozen=True)
class CliqueStats:
    maximal_clique_count: int
    clique_number: int
    count_relative_to_m: float
    timed_out: bool = False


@dataclass(frozen=True)
class ClosureStats:
    degeneracy: int
    closure: int
    weak_closure: int


class _BudgetExceeded(Exception):
    pass


def enumerate_maximal_cliques(g: Graph, budget: Budget | None = None,
                              visitor: Callable[[list[int]], None] | None = None) -> CliqueStats:
    """Count maximal cliques and the clique number; optional visitor per clique.

    Budget exhaustion stops the enumeration and flags the partial counts.
    """
    adj = g.adj_sets
    _, order = peel_by_degree(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i

    state = {"count": 0, "omega": 0, "calls": 0}

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        state["calls"] += 1
        if budget is not None and state["calls"] % 1024 == 0:
            budget.charge(1024)
            if budget.exceeded():
                raise _BudgetExceeded
        if not p and not x:
            state["count"] += 1
            if len(r) > state["omega"]:
                state["omega"] = len(r)
            if visitor is not None:
                visitor(list(r))
            return
        pivot, best = -1, -1
        for u in sorted(p | x):
            cnt = sum(1 for w in p if w in adj[u])
            if cnt > best:
                pivot, best = u, cnt
        for v in sorted(p - adj[pivot]):
            r.append(v)
            expand(r, p & adj[v], x & adj[v])
            r.pop()
            p.remove(v)
            x.add(v)

    timed_out = False
    try:
        for v in order:
            later = {w for w in adj[v] if pos[w] > pos[v]}
            earlier = adj[v] - later
            expand([v], later, earlier)
    except _BudgetExceeded:
        timed_out = True
    rel = state["count"] / g.m if g.m else math.inf
    return CliqueStats(state["count"], state["omega"], rel, timed_out)


def closure(g: Graph) -> int:
    """Smallest c such that all non-adjacent pairs share fewer than c neighbors."""
    best = 0
    for v in range(g.n):
        row = g.neighbors(v)
        if len(row) == 0:
            continue
        counts = g.indptr[row + 1] - g.indptr[row]
        two_hop = g.nbrs[
            np.repeat(g.indptr[row], counts)
            + (np.arange(int(counts.sum())) - np.repeat(np.cumsum(counts) - counts, counts))
        ]
        two_hop = two_hop[(two_hop != v) & ~np.isin(two_hop, row)]
        if two_hop.size:
            _, freq = np.unique(two_hop, return_counts=True)
            best = max(best, int(freq.max()))
    return best + 1


def _pair_tables(g: Graph, cutoff: int):
    """Common-neighbor counts of non-adjacent distance-2 pairs (>= cutoff only)."""
    adj = g.adj_sets
    lists = g.adj_lists
    pair_count: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        nb = lists[u]
        for i, v in enumerate(nb):
            sv = adj[v]
            for w in nb[i + 1 :]:
                if w not in sv:
                    key = (v, w)
                    pair_count[key] = pair_count.get(key, 0) + 1
    if cutoff > 1:
        pair_count = {k: c for k, c in pair_count.items() if c >= cutoff}
    return pair_count


def _weak_closure_run(g: Graph, cutoff: int) -> int:
    pair_count = _pair_tables(g, cutoff)
    partners: list[list[int]] = [[] for _ in range(g.n)]
    buckets: list[dict[int, int]] = [{} for _ in range(g.n)]
    cv = [0] * g.n
    for (v, w), c in pair_count.items():
        partners[v].append(w)
        partners[w].append(v)
        for a in (v, w):
            buckets[a][c] = buckets[a].get(c, 0) + 1
            if c > cv[a]:
                cv[a] = c

    removed = [False] * g.n
    heap = [(cv[v], v) for v in range(g.n)]
    heapify(heap)
    adj = g.adj_sets
    lists = g.adj_lists

    def replace_value(a: int, old: int, new: int | None) -> None:
        """Swap one priority value in a's bucket table; refresh cv lazily."""
        b = buckets[a]
        b[old] -= 1
        if b[old] == 0:
            del b[old]
        if new is not None and new > 0:
            b[new] = b.get(new, 0) + 1
        if old == cv[a] and old not in b:
            cv[a] = max(b) if b else 0
            heappush(heap, (cv[a], a))

    result = 0
    remaining = g.n
    while remaining:
        c, u = heappop(heap)
        if removed[u] or c != cv[u]:
            continue
        removed[u] = True
        remaining -= 1
        result = max(result, cv[u] + 1)
        # pairs that contained u disappear with it
        for w in partners[u]:
            key = (u, w) if u < w else (w, u)
            c_uw = pair_count.pop(key, None)
            if c_uw is not None and not removed[w]:
                replace_value(w, c_uw, None)
        # surviving neighbor pairs lose u as a common neighbor
        nb = [x for x in lists[u] if not removed[x]]
        for i, v in enumerate(nb):
            sv = adj[v]
            for w in nb[i + 1 :]:
                if w not in sv:
                    key = (v, w) if v < w else (w, v)
                    c_vw = pair_count.get(key)
                    if c_vw is None:
                        continue
                    if c_vw > 1:
                        pair_count[key] = c_vw - 1
                        replace_value(v, c_vw, c_vw - 1)
                        replace_value(w, c_vw, c_vw - 1)
                    else:
                        del pair_count[key]
                        replace_value(v, c_vw, None)
                        replace_value(w, c_vw, None)
    return result


def weak_closure(g: Graph, initial_guess: int = 30) -> int:
    """Smallest c admitting a full elimination order of c-good vertices.

    Pairs below the guess are left out of the tables; a result below the
    guess is not trustworthy, so the guess is decremented and the run
    repeated (a result at or above the guess cannot be affected by the
    omitted pairs).
    """
    guess = max(1, initial_guess)
    while True:
        result = _weak_closure_run(g, guess)
        if result >= guess or guess == 1:
            return result
        guess -= 1


def structural_report(g: Graph, budget: Budget | None = None,
                      locality_seed: int = 0) -> dict:
    """One flat parameter record per network, ready for CSV emission.

    Locality columns are NaN when undefined (trees, complete graphs); corpus
    admission rules keep such networks out of the pipeline, but the report
    stays total for direct calls.
    """
    stats = enumerate_maximal_cliques(g, budget)
    d, _ = peel_by_degree(g)
    params = ClosureStats(d, closure(g), weak_closure(g))
    nan = float("nan")
    loc = deg_loc = dist_loc = cc = nan
    try:
        report = locality(g, seed=locality_seed)
        loc, deg_loc, dist_loc = (report.locality, report.degree_locality,
                                  report.distance_locality)
        cc = report.clustering_coefficient
    except ValueError:
        pass
    return {
        "n": g.n,
        "m": g.m,
        "degeneracy": params.degeneracy,
        "closure": params.closure,
        "weak_closure": params.weak_closure,
        "maximal_clique_count": stats.maximal_clique_count,
        "clique_number": stats.clique_number,
        "count_relative_to_m": stats.count_relative_to_m,
        "cliques_timed_out": stats.timed_out,
        "heterogeneity": heterogeneity(g),
        "locality": loc,
        "degree_locality": deg_loc,
        "distance_locality": dist_loc,
        "clustering_coefficient": cc,
    }
