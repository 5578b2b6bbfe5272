"""Graph kernel: construction contracts, BFS, path counts, clustering, components."""

import random

import pytest

from gridwalk import Graph
from gridwalk.errors import DuplicateEdgeError, OutOfRangeError, SelfLoopError

from oracles import (
    adjacency_sets,
    brute_bfs,
    oracle_clustering,
    oracle_sigma,
    random_graph,
)


def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


# --- add_edge ---


def test_add_edge_single():
    g = Graph(2)
    g.add_edge(0, 1)
    assert g.edge_count == 1
    assert g.neighbors(0) == {1}
    assert g.neighbors(1) == {0}


def test_add_edge_self_loop_rejected():
    g = Graph(2)
    with pytest.raises(SelfLoopError):
        g.add_edge(0, 0)


def test_add_edge_duplicate_rejected():
    g = Graph(2)
    g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(0, 1)
    with pytest.raises(DuplicateEdgeError):
        g.add_edge(1, 0)


def test_add_edge_out_of_range():
    g = Graph(2)
    with pytest.raises(OutOfRangeError):
        g.add_edge(0, 2)


# --- neighbors ---


def test_neighbors_triangle():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.neighbors(0) == {1, 2}


def test_neighbors_isolated():
    g = Graph(1)
    assert g.neighbors(0) == set()


def test_neighbors_path():
    assert path3().neighbors(1) == {0, 2}


def test_neighbors_out_of_range():
    with pytest.raises(OutOfRangeError):
        path3().neighbors(5)


# --- bfs_distances ---


def test_bfs_path():
    dv = path3().bfs_distances(0)
    assert dv.origin == 0
    assert dv.dist == [0, 1, 2]


def test_bfs_complete_graph():
    g = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert g.bfs_distances(2).dist == [1, 1, 0, 1]


def test_bfs_unreachable_sentinel():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    dv = g.bfs_distances(0)
    assert dv.dist == [0, 1, None, None]


def test_bfs_symmetry_randomized():
    rng = random.Random(90125)
    for _ in range(20):
        n = rng.randint(2, 200)
        edges = random_graph(rng, n, rng.uniform(0.01, 0.2))
        g = Graph.from_edges(n, edges)
        s, t = rng.randrange(n), rng.randrange(n)
        assert g.bfs_distances(s).dist[t] == g.bfs_distances(t).dist[s]


# --- shortest_path_counts ---


def test_sigma_path_unique():
    sigma, dist = path3().shortest_path_counts(0)
    assert sigma == [1, 1, 1]
    assert dist == [0, 1, 2]


def test_sigma_four_cycle():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    sigma, _ = g.shortest_path_counts(0)
    # Frozen from the exhaustive path enumeration oracle: two routes to the
    # opposite corner, one to each adjacent corner.
    assert sigma == [1, 1, 2, 1]


def test_sigma_triangle_direct():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    sigma, _ = g.shortest_path_counts(0)
    assert sigma[1] == 1


def test_sigma_matches_enumeration_on_all_graphs_up_to_5_nodes():
    # Every labeled graph on 2..5 nodes (edge subsets of K_n), all sources.
    for n in range(2, 6):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            g = Graph.from_edges(n, edges)
            adj = adjacency_sets(g)
            for s in range(n):
                sigma, _ = g.shortest_path_counts(s)
                assert sigma == oracle_sigma(adj, s)


def test_sigma_matches_enumeration_on_random_6_node_graphs():
    rng = random.Random(5150)
    for _ in range(60):
        g = Graph.from_edges(6, random_graph(rng, 6, rng.uniform(0.2, 0.9)))
        adj = adjacency_sets(g)
        for s in range(6):
            sigma, dist = g.shortest_path_counts(s)
            assert sigma == oracle_sigma(adj, s)
            assert sigma[s] == 1
            assert [d if d is not None else -1 for d in dist] == brute_bfs(adj, s)


# --- clustering_coefficient ---


def test_clustering_triangle():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.clustering_coefficient(0) == 1.0


def test_clustering_star_center():
    g = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert g.clustering_coefficient(0) == 0.0


def test_clustering_low_degree_is_zero():
    assert path3().clustering_coefficient(0) == 0.0


def test_clustering_in_unit_interval_randomized():
    rng = random.Random(2112)
    for _ in range(30):
        n = rng.randint(1, 40)
        g = Graph.from_edges(n, random_graph(rng, n, rng.uniform(0.0, 0.5)))
        for v in range(n):
            c = g.clustering_coefficient(v)
            assert 0.0 <= c <= 1.0
            assert c == oracle_clustering(adjacency_sets(g), v)


# --- largest_component ---


def test_largest_component_tie_prefers_smallest_id():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert g.largest_component() == {0, 1, 2}


def test_largest_component_connected():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.largest_component() == {0, 1, 2, 3}


def test_largest_component_ignores_isolated():
    g = Graph.from_edges(5, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert g.largest_component() == {0, 1, 2, 3}


# --- invariants ---


def test_degree_sum_is_twice_edges():
    rng = random.Random(777)
    for _ in range(20):
        n = rng.randint(1, 60)
        g = Graph.from_edges(n, random_graph(rng, n, rng.uniform(0.0, 0.4)))
        assert sum(g.degree(v) for v in range(n)) == 2 * g.edge_count


def test_adjacency_symmetric_no_self_loops():
    rng = random.Random(888)
    g = Graph.from_edges(30, random_graph(rng, 30, 0.2))
    for v in range(30):
        nbrs = g.neighbors(v)
        assert v not in nbrs
        for w in nbrs:
            assert v in g.neighbors(w)
