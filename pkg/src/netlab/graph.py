"""Immutable simple undirected graph plus the shared traversal primitives.

The graph is stored in CSR form (``indptr``/``nbrs``) with sorted neighbor
lists so that set intersections run as linear merges and BFS layers can be
expanded with vectorized gathers.  Vertex ids are dense integers 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "BridgeSet",
    "build_graph",
    "largest_component",
    "bfs",
    "bfs_with_parents",
    "find_bridges",
    "peel_by_degree",
]


class Graph:
    """Simple undirected graph with dense ids and sorted adjacency."""

    __slots__ = ("n", "m", "indptr", "nbrs", "degrees", "_adj_sets", "_adj_lists")

    def __init__(self, indptr: np.ndarray, nbrs: np.ndarray):
        self.indptr = indptr
        self.nbrs = nbrs
        self.n = len(indptr) - 1
        self.m = len(nbrs) // 2
        self.degrees = np.diff(indptr).astype(np.int64)
        for a in (self.indptr, self.nbrs, self.degrees):
            a.setflags(write=False)
        self._adj_sets = None
        self._adj_lists = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbrs[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < len(row) and row[i] == v

    @property
    def adj_sets(self) -> list[set[int]]:
        """Per-vertex neighbor sets, built lazily for hot membership tests."""
        if self._adj_sets is None:
            lists = self.adj_lists
            self._adj_sets = [set(l) for l in lists]
        return self._adj_sets

    @property
    def adj_lists(self) -> list[list[int]]:
        if self._adj_lists is None:
            nbrs = self.nbrs.tolist()
            ptr = self.indptr.tolist()
            self._adj_lists = [nbrs[ptr[v] : ptr[v + 1]] for v in range(self.n)]
        return self._adj_lists

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in sorted order."""
        indptr, nbrs = self.indptr, self.nbrs
        for u in range(self.n):
            for v in nbrs[indptr[u] : indptr[u + 1]]:
                if u < v:
                    yield (u, int(v))

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.nbrs
        return np.column_stack([src[keep], self.nbrs[keep].astype(np.int64)])

    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return 2.0 * self.m / (self.n * (self.n - 1))

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BridgeSet:
    """Bridges of a graph; an edge is a bridge iff removing it disconnects."""

    bridges: frozenset[tuple[int, int]]
    non_bridge_count: int

    def is_bridge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.bridges


def build_graph(edge_list: Iterable[Sequence[int]] | np.ndarray) -> Graph:
    """Build a simple graph from raw integer pairs.

    Duplicates, reversed copies and self-loops are dropped; ids are remapped
    to 0..n-1 in first-appearance order (scanning each pair u then v).
    """
    pairs = np.asarray(list(edge_list) if not isinstance(edge_list, np.ndarray) else edge_list)
    if pairs.size == 0:
        raise ValueError("empty graph")
    pairs = pairs.reshape(-1, 2).astype(np.int64)

    flat = pairs.ravel()
    ids, remapped = np.unique(flat, return_inverse=True)
    if len(ids) == ids[-1] + 1 and ids[0] == 0:
        # already dense 0..n-1: keep ids, which makes edge-list round trips
        # of built graphs id-identical
        dense = pairs
    else:
        # np.unique sorts; reorder to first appearance
        first_pos = np.full(len(ids), len(flat), dtype=np.int64)
        np.minimum.at(first_pos, remapped, np.arange(len(flat)))
        order = np.argsort(first_pos, kind="stable")
        rank = np.empty_like(order)
        rank[order] = np.arange(len(ids))
        dense = rank[remapped].reshape(-1, 2)

    n = len(ids)
    u, v = dense[:, 0], dense[:, 1]
    keep = u != v
    lo = np.minimum(u[keep], v[keep])
    hi = np.maximum(u[keep], v[keep])
    if len(lo):
        edges = np.unique(lo * n + hi)
        lo, hi = edges // n, edges % n
    return _from_unique_edges(n, lo, hi)


def _from_unique_edges(n: int, lo: np.ndarray, hi: np.ndarray) -> Graph:
    """Assemble CSR arrays from deduplicated edges (lo < hi)."""
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(indptr, dst.astype(np.int32))


def from_edges(n: int, edges: np.ndarray) -> Graph:
    """Graph from an (m, 2) array of distinct edges over known n (generator path)."""
    if len(edges) == 0:
        return Graph(np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int32))
    lo = np.minimum(edges[:, 0], edges[:, 1]).astype(np.int64)
    hi = np.maximum(edges[:, 0], edges[:, 1]).astype(np.int64)
    return _from_unique_edges(n, lo, hi)


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest connected component, ids re-densified.

    Ties between equal-size components go to the one containing the smallest
    original id; surviving ids keep their relative order.
    """
    labels = np.full(g.n, -1, dtype=np.int64)
    comp = 0
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = comp
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            targets = _gather(g, frontier)
            new = targets[labels[targets] < 0]
            if new.size == 0:
                break
            new = np.unique(new)
            labels[new] = comp
            frontier = new
        comp += 1
    sizes = np.bincount(labels, minlength=comp)
    best = int(np.argmax(sizes))  # argmax takes the first max: smallest min-id component
    keep = np.nonzero(labels == best)[0]
    if len(keep) == g.n:
        return g
    rank = np.full(g.n, -1, dtype=np.int64)
    rank[keep] = np.arange(len(keep))
    edges = g.edge_array()
    mask = (rank[edges[:, 0]] >= 0) & (rank[edges[:, 1]] >= 0)
    edges = rank[edges[mask]]
    return from_edges(len(keep), edges)


def _gather(g: Graph, frontier: np.ndarray) -> np.ndarray:
    """All adjacency entries of the frontier vertices, concatenated."""
    counts = g.indptr[frontier + 1] - g.indptr[frontier]
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=g.nbrs.dtype)
    starts = g.indptr[frontier]
    offsets = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    return g.nbrs[np.repeat(starts, counts) + offsets]


def bfs(g: Graph, source: int) -> np.ndarray:
    """Hop distances from source; unreachable vertices get the sentinel n."""
    dist = np.full(g.n, g.n, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        targets = _gather(g, frontier)
        new = targets[dist[targets] == g.n]
        if new.size == 0:
            break
        new = np.unique(new).astype(np.int64)
        d += 1
        dist[new] = d
        frontier = new
    return dist


def bfs_with_parents(g: Graph, source: int) -> tuple[np.ndarray, np.ndarray]:
    """BFS distances plus a parent per vertex (smallest-id parent, -1 at source)."""
    dist = np.full(g.n, g.n, dtype=np.int64)
    parent = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        counts = g.indptr[frontier + 1] - g.indptr[frontier]
        targets = _gather(g, frontier).astype(np.int64)
        sources = np.repeat(frontier, counts)
        fresh = dist[targets] == g.n
        targets, sources = targets[fresh], sources[fresh]
        if targets.size == 0:
            break
        order = np.lexsort((sources, targets))
        targets, sources = targets[order], sources[order]
        first = np.ones(len(targets), dtype=bool)
        first[1:] = targets[1:] != targets[:-1]
        new, par = targets[first], sources[first]
        d += 1
        dist[new] = d
        parent[new] = par
        frontier = new
    return dist, parent


def find_bridges(g: Graph) -> BridgeSet:
    """Exact bridge set via iterative low-link traversal."""
    n = g.n
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    bridges: set[tuple[int, int]] = set()
    adj = g.adj_lists
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        # stack entries: (vertex, parent, iterator index into adj[vertex])
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = adj[v][i]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
                # A parent seen again would be a multi-edge; simple graphs
                # have exactly one parent entry, which is skipped.
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.add((min(parent, v), max(parent, v)))
    return BridgeSet(frozenset(bridges), g.m - len(bridges))


def peel_by_degree(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and the min-degree elimination order (ties: smallest id).

    The degeneracy is the largest residual degree observed when repeatedly
    removing a vertex of minimum remaining degree.
    """
    import heapq

    deg = g.degrees.copy()
    removed = np.zeros(g.n, dtype=bool)
    heap = [(int(deg[v]), v) for v in range(g.n)]
    heapq.heapify(heap)
    adj = g.adj_lists
    order: list[int] = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, dv)
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (int(deg[w]), w))
    return d, order
