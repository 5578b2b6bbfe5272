"""Backend equivalence: the compiled kernels must match the pure ones bit-for-bit."""

import random

import numpy as np
import pytest

from gridwalk import Graph
from gridwalk._kernels import BACKEND, pure

from oracles import random_graph

try:
    from gridwalk._kernels import _core
except ImportError:
    _core = None

needs_ext = pytest.mark.skipif(_core is None, reason="compiled kernels not built")


def graphs():
    rng = random.Random(1618)
    out = []
    for _ in range(12):
        n = rng.randint(2, 120)
        g = Graph.from_edges(n, random_graph(rng, n, rng.uniform(0.02, 0.4)))
        out.append(g)
    return out


@needs_ext
def test_bfs_identical():
    for g in graphs():
        indptr, indices = g.csr()
        for s in (0, g.node_count // 2, g.node_count - 1):
            assert np.array_equal(
                pure.bfs_distances(indptr, indices, s),
                _core.bfs_distances(indptr, indices, s),
            )


@needs_ext
def test_sigma_identical():
    for g in graphs():
        indptr, indices = g.csr()
        for s in (0, g.node_count - 1):
            sig_p, dist_p = pure.shortest_path_counts(indptr, indices, s)
            sig_c, dist_c = _core.shortest_path_counts(indptr, indices, s)
            assert np.array_equal(sig_p, sig_c)
            assert np.array_equal(dist_p, dist_c)


@needs_ext
def test_closeness_bitwise_identical():
    for g in graphs():
        indptr, indices = g.csr()
        a = pure.harmonic_closeness(indptr, indices)
        b = _core.harmonic_closeness(indptr, indices)
        assert a.tobytes() == b.tobytes()


@needs_ext
def test_betweenness_bitwise_identical():
    for g in graphs():
        indptr, indices = g.csr()
        a = pure.betweenness(indptr, indices)
        b = _core.betweenness(indptr, indices)
        assert a.tobytes() == b.tobytes()


def test_backend_reports_a_name():
    assert BACKEND in ("cython", "pure")
