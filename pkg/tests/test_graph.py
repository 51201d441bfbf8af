import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netlab.graph import (bfs, bfs_with_parents, build_graph, find_bridges,
                          from_edges, largest_component, peel_by_degree)
from oracles import brute_bridges, gnp_graph


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)])


class TestBuildGraph:
    def test_dedup_and_self_loops(self):
        g = build_graph([(0, 1), (1, 0), (2, 2), (1, 2)])
        assert (g.n, g.m) == (3, 2)

    def test_triangle(self):
        g = build_graph([(0, 1), (1, 2), (2, 0)])
        assert (g.n, g.m) == (3, 3)
        assert g.degrees.tolist() == [2, 2, 2]

    def test_remap(self):
        g = build_graph([(5, 9)])
        assert (g.n, g.m) == (2, 1)

    def test_remap_first_appearance_order(self):
        g = build_graph([(7, 3), (3, 1)])
        # 7 -> 0, 3 -> 1, 1 -> 2
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_empty_errors(self):
        with pytest.raises(ValueError, match="empty graph"):
            build_graph([])

    def test_symmetry_and_sorted_adjacency(self):
        g = build_graph([(3, 1), (0, 3), (2, 0), (1, 2), (0, 1)])
        for u in range(g.n):
            row = g.neighbors(u)
            assert list(row) == sorted(row)
            for v in row:
                assert u in g.neighbors(v)
        assert int(g.degrees.sum()) == 2 * g.m

    @given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=80))
    @settings(max_examples=60, deadline=None)
    def test_idempotent_rebuild(self, pairs):
        g = build_graph(pairs)
        if g.m == 0 or np.count_nonzero(g.degrees) < g.n:
            return  # edge lists cannot carry isolated vertices
        h = build_graph(g.edge_array())
        assert np.array_equal(g.indptr, h.indptr)
        assert np.array_equal(g.nbrs, h.nbrs)


class TestLargestComponent:
    def test_picks_biggest(self):
        edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                 (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)]
        lc = largest_component(build_graph(edges))
        assert (lc.n, lc.m) == (4, 6)

    def test_connected_identity(self):
        g = cycle(7)
        lc = largest_component(g)
        assert lc is g

    def test_tie_breaks_to_smallest_min_id(self):
        lc = largest_component(build_graph([(0, 1), (1, 2), (3, 4), (4, 5)]))
        assert (lc.n, lc.m) == (3, 2)
        assert sorted(lc.edges()) == [(0, 1), (1, 2)]  # the P3 containing vertex 0


class TestBfs:
    def test_path(self):
        assert bfs(path(5), 0).tolist() == [0, 1, 2, 3, 4]

    def test_star(self):
        g = build_graph([(0, i) for i in range(1, 6)])
        assert bfs(g, 0).tolist() == [0, 1, 1, 1, 1, 1]

    def test_disconnected_sentinel(self):
        g = build_graph([(0, 1), (2, 3)])
        d = bfs(g, 0)
        assert d[2] == g.n and d[3] == g.n

    def test_parents_prefer_smallest_id(self):
        g = cycle(4)
        dist, parent = bfs_with_parents(g, 0)
        assert dist.tolist() == [0, 1, 2, 1]
        assert parent[2] == 1  # reachable through 1 or 3; 1 wins


class TestBridges:
    def test_tree_all_bridges(self):
        g = path(6)
        assert len(find_bridges(g).bridges) == g.m

    def test_cycle_no_bridges(self):
        br = find_bridges(cycle(5))
        assert not br.bridges and br.non_bridge_count == 5

    def test_two_triangles_joined(self):
        g = build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
        br = find_bridges(g)
        assert br.bridges == frozenset({(2, 3)})
        assert brute_bridges(g) == {(2, 3)}

    def test_matches_brute_force(self):
        rng = np.random.default_rng(11)
        checked = 0
        while checked < 25:
            g = gnp_graph(rng, int(rng.integers(5, 40)), float(rng.uniform(0.05, 0.25)))
            if g is None:
                continue
            br = find_bridges(g)
            assert set(br.bridges) == brute_bridges(g)
            assert br.non_bridge_count == g.m - len(br.bridges)
            checked += 1


class TestPeel:
    def test_tree(self):
        assert peel_by_degree(path(8))[0] == 1

    def test_complete(self):
        assert peel_by_degree(complete(6))[0] == 5

    def test_cycle(self):
        assert peel_by_degree(cycle(9))[0] == 2

    def test_order_is_a_permutation(self):
        g = gnp_graph(np.random.default_rng(3), 30, 0.2)
        d, order = peel_by_degree(g)
        assert sorted(order) == list(range(g.n))

    def test_every_subgraph_has_low_degree_vertex(self):
        # exhaustive check of the degeneracy characterization on small graphs
        rng = np.random.default_rng(5)
        for _ in range(3):
            g = gnp_graph(rng, 10, 0.35)
            if g is None:
                continue
            d, _ = peel_by_degree(g)
            masks = [0] * g.n
            for u, v in g.edges():
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            for s in range(1, 1 << g.n):
                min_deg = min(bin(masks[v] & s).count("1")
                              for v in range(g.n) if s & (1 << v))
                assert min_deg <= d


def test_from_edges_empty():
    g = from_edges(4, np.empty((0, 2), dtype=np.int64))
    assert (g.n, g.m) == (4, 0)
