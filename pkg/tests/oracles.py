"""Independent brute-force oracles used to validate the fast implementations.

Everything here is deliberately the dumbest correct computation: subset
enumeration, per-edge deletion, full APSP.  Nothing imports the code paths it
is used to check.
"""

from __future__ import annotations

import numpy as np

from netlab.graph import Graph, bfs, build_graph, from_edges, largest_component


def brute_bridges(g: Graph) -> set[tuple[int, int]]:
    """Delete each edge and test connectivity of the edge's component."""
    edges = list(g.edges())
    bridges = set()
    for i, (u, v) in enumerate(edges):
        rest = edges[:i] + edges[i + 1 :]
        sub = from_edges(g.n, np.asarray(rest).reshape(-1, 2)) if rest else None
        if sub is None:
            bridges.add((u, v))
            continue
        dist = bfs(sub, u)
        if dist[v] >= g.n:
            bridges.add((u, v))
    return bridges


def apsp(g: Graph) -> list[np.ndarray]:
    return [bfs(g, v) for v in range(g.n)]


def apsp_diameter(g: Graph) -> int:
    return max(int(d.max()) for d in apsp(g))


def exact_avg_distance_brute(g: Graph) -> float:
    total = sum(int(d.sum()) for d in apsp(g))
    return total / (g.n * (g.n - 1))


def adj_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def brute_maximal_cliques(g: Graph) -> set[frozenset[int]]:
    """All maximal cliques by scanning every vertex subset (n <= 18)."""
    n = g.n
    masks = adj_masks(g)
    closed = [masks[v] | (1 << v) for v in range(n)]
    cliques = []
    for s in range(1, 1 << n):
        rest = s
        ok = True
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if s & ~closed[v]:
                ok = False
                break
        if ok:
            cliques.append(s)
    clique_set = set(cliques)
    maximal = set()
    for s in clique_set:
        if not any((s | (1 << w)) in clique_set for w in range(n) if not s & (1 << w)):
            maximal.add(frozenset(v for v in range(n) if s & (1 << v)))
    return maximal


def brute_min_vertex_cover(g: Graph) -> int:
    """Smallest vertex cover by subset enumeration (n small)."""
    edges = list(g.edges())
    if not edges:
        return 0
    n = g.n
    best = n
    for s in range(1 << n):
        size = bin(s).count("1")
        if size >= best:
            continue
        if all(s & (1 << u) or s & (1 << v) for u, v in edges):
            best = size
    return best


def brute_chromatic_number(g: Graph) -> int:
    """Smallest proper coloring via backtracking (n <= 12 or so)."""
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    adj = g.adj_sets

    def colorable(k: int) -> bool:
        colors = {}

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            used = {colors[w] for w in adj[v] if w in colors}
            for c in range(k):
                if c not in used:
                    colors[v] = c
                    if place(i + 1):
                        return True
                    del colors[v]
                if c not in colors.values():
                    break  # first untried fresh color failing means all fail
            return False

        return place(0)

    k = 2
    while not colorable(k):
        k += 1
    return k


def naive_weak_closure(g: Graph) -> int:
    """Batch elimination: raise c to the smallest value admitting a good
    vertex, remove every good vertex, repeat until the graph is gone."""
    alive = set(range(g.n))
    adj = [set(s) for s in g.adj_sets]
    c = 1
    while alive:
        worst = {}
        for v in alive:
            best = 0
            counts: dict[int, int] = {}
            for u in adj[v]:
                for w in adj[u]:
                    if w != v and w not in adj[v]:
                        counts[w] = counts.get(w, 0) + 1
            if counts:
                best = max(counts.values())
            worst[v] = best
        c_prime = min(worst[v] + 1 for v in alive)
        if c < c_prime:
            c = c_prime
        good = [v for v in alive if worst[v] < c]
        for v in good:
            alive.discard(v)
            for u in adj[v]:
                adj[u].discard(v)
            adj[v] = set()
    return c


def gnp_graph(rng: np.random.Generator, n: int, p: float) -> Graph | None:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if not edges:
        return None
    return build_graph(edges)


def random_connected_graph(rng: np.random.Generator, n: int, extra_edges: int) -> Graph:
    """Random spanning tree plus extra random edges; always connected."""
    perm = rng.permutation(n)
    edges = {(min(int(perm[i]), int(perm[int(rng.integers(0, i))])),
              max(int(perm[i]), int(perm[int(rng.integers(0, i))])))
             for i in range(1, n)}
    for _ in range(extra_edges):
        u, v = int(rng.integers(0, n)), int(rng.integers(0, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(sorted(edges))


def connected_gnp(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Largest component of a G(n, p) draw (retries until it has >= 3 vertices)."""
    while True:
        g = gnp_graph(rng, n, p)
        if g is None:
            continue
        lc = largest_component(g)
        if lc.n >= 3:
            return lc
