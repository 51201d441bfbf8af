import numpy as np
import pytest

from netlab.cliques import enumerate_maximal_cliques
from netlab.graph import build_graph, from_edges
from netlab.kernels import (min_vertex_cover_size, omega_core_kernel,
                            omega_core_vertices, vc_dominance_kernel,
                            vc_kernel_soundness_check, _adj_masks)
from oracles import brute_chromatic_number, brute_min_vertex_cover, gnp_graph


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


class TestDominance:
    def test_complete_graph_empties(self):
        res = vc_dominance_kernel(complete(6))
        assert res.kernel_size == 0
        assert len(res.forced_vertices) == 5  # min VC of K6

    def test_c5_untouched(self):
        res = vc_dominance_kernel(cycle(5))
        assert res.kernel_size == 5
        assert res.relative_size == 1.0
        assert not res.forced_vertices

    def test_triangle_with_pendant(self):
        g = build_graph([(0, 1), (1, 2), (2, 0), (0, 3)])
        res = vc_dominance_kernel(g)
        assert res.kernel_size == 0
        assert res.forced_vertices == [0, 1]

    def test_relative_size_uses_input_n(self):
        g = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (4, 5), (5, 6), (6, 4)])
        res = vc_dominance_kernel(g)
        assert res.relative_size == res.kernel_size / 7

    def test_kernel_size_is_largest_component(self):
        # pendant chains collapse, two cycles of different size survive
        edges = ([(i, (i + 1) % 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 1) % 7) for i in range(7)])
        res = vc_dominance_kernel(build_graph(edges))
        assert res.kernel_size == 7

    def test_order_insensitive_kernel_size(self):
        # replay the rule under shuffled worklists: the surviving kernel size
        # must not depend on scan order
        rng = np.random.default_rng(0)
        for _ in range(12):
            g = gnp_graph(rng, 8, 0.35)
            if g is None:
                continue
            want = vc_dominance_kernel(g).kernel_size
            for _ in range(8):
                assert _shuffled_dominance_kernel_size(g, rng) == want


def _shuffled_dominance_kernel_size(g, rng) -> int:
    adj = [set(s) for s in g.adj_sets]
    alive = [True] * g.n
    queue = list(rng.permutation(g.n))
    while queue:
        u = queue.pop()
        if not alive[u]:
            continue
        for v in sorted(adj[u], key=lambda x: rng.random()):
            taken = None
            if all(w == u or w in adj[u] for w in adj[v]):
                taken = u
            elif all(w == v or w in adj[v] for w in adj[u]):
                taken = v
            if taken is not None:
                alive[taken] = False
                for w in adj[taken]:
                    adj[w].discard(taken)
                    queue.append(w)
                adj[taken].clear()
                break
    comp_best = 0
    seen = set()
    for s in range(g.n):
        if not alive[s] or s in seen or not adj[s]:
            continue
        stack, size = [s], 0
        seen.add(s)
        while stack:
            v = stack.pop()
            size += 1
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp_best = max(comp_best, size)
    return comp_best


class TestSoundness:
    def test_exact_solver_matches_subset_enumeration(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            g = gnp_graph(rng, int(rng.integers(4, 12)), float(rng.uniform(0.1, 0.6)))
            if g is None:
                continue
            got = min_vertex_cover_size(_adj_masks(g), (1 << g.n) - 1)
            assert got == brute_min_vertex_cover(g)

    def test_k4(self):
        g = complete(4)
        assert min_vertex_cover_size(_adj_masks(g), (1 << 4) - 1) == 3
        assert vc_kernel_soundness_check(g)

    def test_edgeless(self):
        g = from_edges(5, np.empty((0, 2), dtype=np.int64))
        assert vc_kernel_soundness_check(g)

    def test_random_graphs(self):
        rng = np.random.default_rng(2)
        checked = 0
        while checked < 60:
            g = gnp_graph(rng, int(rng.integers(4, 15)), float(rng.uniform(0.1, 0.5)))
            if g is None:
                continue
            assert vc_kernel_soundness_check(g)
            checked += 1

    def test_size_guard(self):
        with pytest.raises(ValueError):
            vc_kernel_soundness_check(complete(19))


class TestOmegaCore:
    def test_complete_graph_empties(self):
        res = omega_core_kernel(complete(7), 7)
        assert res.kernel_size == 0 and res.exponent == 0.0

    def test_c5_survives(self):
        res = omega_core_kernel(cycle(5), 2)
        assert res.kernel_size == 5

    def test_low_degeneracy_means_empty_kernel(self):
        # peeling at omega empties any graph whose degeneracy is below omega
        tree = build_graph([(0, 1), (1, 2), (1, 3), (3, 4)])
        assert omega_core_kernel(tree, 2).kernel_size == 0

    def test_omega_below_two_rejected(self):
        with pytest.raises(ValueError):
            omega_core_kernel(cycle(5), 1)

    def test_chromatic_number_preserved(self):
        rng = np.random.default_rng(3)
        checked = 0
        while checked < 50:
            g = gnp_graph(rng, int(rng.integers(4, 13)), float(rng.uniform(0.15, 0.6)))
            if g is None or g.m == 0:
                continue
            omega = enumerate_maximal_cliques(g).clique_number
            if omega < 2:
                continue
            kernel_vertices = omega_core_vertices(g, omega)
            chi = brute_chromatic_number(g)
            if kernel_vertices:
                keep = set(kernel_vertices)
                rank = {v: i for i, v in enumerate(kernel_vertices)}
                sub_edges = [(rank[u], rank[v]) for u, v in g.edges()
                             if u in keep and v in keep]
                if sub_edges:
                    sub = build_graph(sub_edges)
                    chi_kernel = brute_chromatic_number(sub)
                else:
                    chi_kernel = 1 if kernel_vertices else 0
            else:
                chi_kernel = 0
            assert chi == max(omega, chi_kernel)
            checked += 1
