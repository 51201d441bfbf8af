"""Reduction rules: vertex-cover dominance and the clique-core coloring kernel.

The dominance rule: for adjacent u, v with N[v] ⊆ N[u] some minimum vertex
cover contains u, so u is taken and deleted.  Applied exhaustively via an
ascending-id worklist; deleting a vertex re-queues its neighbors, and each
scanned vertex tests both containment directions against its neighbors, which
keeps the worklist exhaustive.  Isolated vertices are dropped afterwards and
the kernel size is the largest remaining connected component.

The coloring kernel peels vertices of degree below the clique number; the
removed vertices can always be colored with the clique number of colors, so
the peeled core is a safe kernel.  Its size is the whole residue.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

from .graph import Graph

__all__ = [
    "KernelResult",
    "vc_dominance_kernel",
    "vc_kernel_soundness_check",
    "min_vertex_cover_size",
    "omega_core_kernel",
]


@dataclass(frozen=True)
class KernelResult:
    kernel_size: int
    relative_size: float
    exponent: float
    forced_vertices: list[int] = field(default_factory=list)


def _exponent(c: int, base: int) -> float:
    if base <= 1:
        return 0.0
    return math.log(max(c, 1)) / math.log(base)


def vc_dominance_kernel(g: Graph) -> KernelResult:
    n = g.n
    adj: list[set[int]] = [set(s) for s in g.adj_sets]
    alive = [True] * n
    forced: list[int] = []
    heap = list(range(n))
    heapq.heapify(heap)

    def delete(u: int) -> None:
        alive[u] = False
        for w in adj[u]:
            adj[w].discard(u)
            heapq.heappush(heap, w)
        adj[u].clear()

    while heap:
        u = heapq.heappop(heap)
        if not alive[u]:
            continue
        du = len(adj[u])
        taken = None
        for v in sorted(adj[u]):
            dv = len(adj[v])
            if dv <= du and all(w == u or w in adj[u] for w in adj[v]):
                taken = u  # u dominates v
                break
            if du <= dv and all(w == v or w in adj[v] for w in adj[u]):
                taken = v  # v dominates u
                break
        if taken is not None:
            forced.append(taken)
            delete(taken)  # re-queues every neighbor, including u when v was taken

    # isolated vertices drop out; kernel = largest component of the rest
    c = _largest_component_size(adj, alive)
    return KernelResult(c, c / n, _exponent(c, n), forced)


def _largest_component_size(adj: list[set[int]], alive: list[bool]) -> int:
    seen = [False] * len(adj)
    best = 0
    for s in range(len(adj)):
        if not alive[s] or seen[s] or not adj[s]:
            continue
        size = 0
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            size += 1
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        best = max(best, size)
    return best


def min_vertex_cover_size(adj_masks: list[int], alive: int,
                          memo: dict[int, int] | None = None) -> int:
    """Exact minimum vertex cover size by branching on a max-degree vertex.

    Bitmask representation; meant for small instances (n <= 18 or so).
    """
    if memo is None:
        memo = {}
    cached = memo.get(alive)
    if cached is not None:
        return cached
    best_v, best_deg = -1, 0
    rest = alive
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        d = bin(adj_masks[v] & alive).count("1")
        if d > best_deg:
            best_v, best_deg = v, d
    if best_deg == 0:
        memo[alive] = 0
        return 0
    nv = adj_masks[best_v] & alive
    take = 1 + min_vertex_cover_size(adj_masks, alive & ~(1 << best_v), memo)
    skip = best_deg + min_vertex_cover_size(adj_masks, alive & ~nv & ~(1 << best_v), memo)
    result = min(take, skip)
    memo[alive] = result
    return result


def _adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def vc_kernel_soundness_check(g: Graph) -> bool:
    """Exhaustively verify the forced vertices are consistent with optimality:
    min-VC(g) equals the forced count plus min-VC of the residual graph."""
    if g.n > 18:
        raise ValueError("soundness check is exhaustive; needs n <= 18")
    result = vc_dominance_kernel(g)
    masks = _adj_masks(g)
    full = (1 << g.n) - 1
    total = min_vertex_cover_size(masks, full)

    residual_alive = full
    for v in result.forced_vertices:
        residual_alive &= ~(1 << v)
    # residual = graph after the dominance deletions, isolated vertices included
    res_masks = [m & residual_alive for m in masks]
    residual = min_vertex_cover_size(res_masks, residual_alive)
    return total == len(result.forced_vertices) + residual


def omega_core_vertices(g: Graph, omega: int) -> list[int]:
    """Vertices surviving the peel at degree threshold omega."""
    deg = g.degrees.copy()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] < omega]
    adj = g.adj_lists
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < omega:
                    stack.append(w)
    return [v for v in range(g.n) if alive[v]]


def omega_core_kernel(g: Graph, omega: int) -> KernelResult:
    """Peel vertices of degree below the clique number; residue is the kernel."""
    if omega < 2:
        raise ValueError("clique number must be at least 2")
    c = len(omega_core_vertices(g, omega))
    return KernelResult(c, c / g.n, _exponent(c, g.n))
