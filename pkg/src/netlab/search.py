"""Instrumented shortest-path search and the diameter toolkit.

The balanced bidirectional BFS expands, at every step, whichever side's
current layer has the smaller degree sum (ties go forward) and stops as soon
as a newly built layer touches the other side's visited set.  Its cost is the
number of adjacency entries scanned, which never exceeds 2m: the search stops
before any vertex is expanded by both sides, so each edge is scanned at most
once per endpoint.

The diameter algorithms count whole BFS runs: double sweep, 4-sweep, and the
bottom-up eccentricity search with depth pruning, rooted either at a highest
degree vertex or at the 4-sweep result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .budget import Budget
from .graph import Graph, bfs, bfs_with_parents

__all__ = [
    "BidirCost",
    "DiameterResult",
    "bidirectional_bfs",
    "bidir_cost_experiment",
    "double_sweep",
    "four_sweep",
    "ifub",
    "ifub_hd",
    "ifub_foursweep_hd",
]


@dataclass(frozen=True)
class BidirCost:
    edge_explorations: int
    distance: int  # sentinel n when unreachable


@dataclass(frozen=True)
class DiameterResult:
    diameter: int
    bfs_count: int
    root: int
    four_sweep_lower_bound: int | None = None
    timed_out: bool = False


def _masked_positions(g: Graph, edge: tuple[int, int]) -> np.ndarray:
    """Absolute nbrs-array indices of both directions of a masked edge."""
    a, b = edge
    pos = []
    for u, v in ((a, b), (b, a)):
        row = g.nbrs[g.indptr[u] : g.indptr[u + 1]]
        i = int(np.searchsorted(row, v))
        if i < len(row) and row[i] == v:
            pos.append(int(g.indptr[u]) + i)
    return np.asarray(pos, dtype=np.int64)


def bidirectional_bfs(g: Graph, s: int, t: int,
                      masked_edge: tuple[int, int] | None = None) -> BidirCost:
    """Distance between s and t (in G minus masked_edge if given) plus cost.

    Unreachable targets return the sentinel distance n with the explorations
    performed so far.
    """
    n = g.n
    if s == t:
        return BidirCost(0, 0)
    masked = _masked_positions(g, masked_edge) if masked_edge is not None else None

    dist = (np.full(n, n, dtype=np.int64), np.full(n, n, dtype=np.int64))
    dist[0][s] = 0
    dist[1][t] = 0
    frontier = [np.array([s], dtype=np.int64), np.array([t], dtype=np.int64)]
    depth = [0, 0]
    cost = 0
    limit = 2 * g.m

    while True:
        sum_f = int(g.degrees[frontier[0]].sum())
        sum_b = int(g.degrees[frontier[1]].sum())
        side = 0 if sum_f <= sum_b else 1
        front = frontier[side]

        counts = g.indptr[front + 1] - g.indptr[front]
        total = int(counts.sum())
        starts = g.indptr[front]
        idx = np.repeat(starts, counts) + (
            np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
        )
        if masked is not None and len(masked):
            keep = ~np.isin(idx, masked)
            scanned = int(keep.sum())  # masked entries are skipped and count 0
            idx = idx[keep]
        else:
            scanned = total
        cost += scanned
        assert cost <= limit, "edge explorations exceeded 2m"

        targets = g.nbrs[idx].astype(np.int64)
        new = np.unique(targets[dist[side][targets] == n])
        if new.size == 0:
            return BidirCost(cost, n)
        depth[side] += 1
        dist[side][new] = depth[side]

        other = dist[1 - side][new]
        met = other < n
        if met.any():
            return BidirCost(cost, depth[side] + int(other[met].min()))
        frontier[side] = new


def bidir_cost_experiment(g: Graph, pairs: int = 100, seed: int = 0) -> tuple[float, float]:
    """Mean edge explorations over random distinct st-pairs and its m-exponent."""
    rng = np.random.default_rng(seed)
    total = 0
    for _ in range(pairs):
        while True:
            s, t = rng.integers(0, g.n, size=2)
            if s != t:
                break
        total += bidirectional_bfs(g, int(s), int(t)).edge_explorations
    mean = total / pairs
    return mean, math.log(max(mean, 1.0)) / math.log(g.m)


def double_sweep(g: Graph, start: int) -> tuple[int, int]:
    """One double sweep: returns (middle vertex w, eccentricity lower bound).

    Picks v farthest from start, then w at depth floor(ecc(v)/2) on a parent
    walk from v's farthest vertex (smallest-id ties throughout).
    """
    d1 = bfs(g, start)
    v = int(np.argmax(d1))
    d2, parent = bfs_with_parents(g, v)
    lb = int(d2.max())
    far = int(np.argmax(d2))
    mid_depth = lb // 2
    x = far
    while d2[x] > mid_depth:
        x = int(parent[x])
    return x, lb


def four_sweep(g: Graph) -> tuple[int, int]:
    """Two chained double sweeps from a max-degree vertex; 4 BFSs total."""
    start = int(np.argmax(g.degrees))
    w1, lb1 = double_sweep(g, start)
    w2, lb2 = double_sweep(g, w1)
    return w2, max(lb1, lb2)


def ifub(g: Graph, root: int, initial_lower_bound: int = 0,
         budget: Budget | None = None) -> DiameterResult:
    """Exact diameter by bottom-up eccentricity search from root.

    Vertices are processed in decreasing root-depth order (ties by id); the
    search stops once twice the current depth is at most the best lower
    bound.  A budget exhaustion returns the bound found so far, flagged.
    """
    dist_r = bfs(g, root)
    count = 1
    if budget is not None:
        budget.charge()
    lb = max(initial_lower_bound, int(dist_r.max()))
    order = np.lexsort((np.arange(g.n), -dist_r))
    for v in order:
        if 2 * int(dist_r[v]) <= lb:
            break
        if budget is not None and budget.exceeded():
            return DiameterResult(lb, count, root, timed_out=True)
        ecc = int(bfs(g, int(v)).max())
        count += 1
        if budget is not None:
            budget.charge()
        lb = max(lb, ecc)
    return DiameterResult(lb, count, root)


def ifub_hd(g: Graph, budget: Budget | None = None) -> DiameterResult:
    """iFUB rooted at a highest degree vertex, bound seeded by the root BFS."""
    root = int(np.argmax(g.degrees))
    return ifub(g, root, 0, budget)


def ifub_foursweep_hd(g: Graph, budget: Budget | None = None) -> DiameterResult:
    """iFUB rooted at the 4-sweep vertex with the 4-sweep lower bound."""
    root, lb = four_sweep(g)
    if budget is not None:
        budget.charge(4)
    res = ifub(g, root, lb, budget)
    return DiameterResult(res.diameter, res.bfs_count + 4, root,
                          four_sweep_lower_bound=lb, timed_out=res.timed_out)
