"""Pure-Python BFS kernels over CSR adjacency.

Fallback backend when the compiled extension is unavailable. The compiled
backend (_core.pyx) mirrors these loops operation-for-operation so both
produce bit-identical results; keep them in sync.

All functions take a CSR pair (indptr, indices) of int32 arrays with
neighbor lists sorted ascending. Unreachable distances are encoded as -1.
"""

from __future__ import annotations

import numpy as np


def bfs_distances(indptr, indices, source):
    """Hop distances from source; -1 marks unreachable nodes."""
    n = len(indptr) - 1
    ptr = indptr.tolist()
    idx = indices.tolist()
    dist = [-1] * n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        for k in range(ptr[v], ptr[v + 1]):
            w = idx[k]
            if dist[w] < 0:
                dist[w] = dnext
                queue.append(w)
    return np.asarray(dist, dtype=np.int32)


def shortest_path_counts(indptr, indices, source):
    """(sigma, dist) from source: counts of distinct shortest paths and hops."""
    n = len(indptr) - 1
    ptr = indptr.tolist()
    idx = indices.tolist()
    dist = [-1] * n
    sigma = [0.0] * n
    dist[source] = 0
    sigma[source] = 1.0
    queue = [source]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        sv = sigma[v]
        for k in range(ptr[v], ptr[v + 1]):
            w = idx[k]
            if dist[w] < 0:
                dist[w] = dnext
                queue.append(w)
            if dist[w] == dnext:
                sigma[w] += sv
    return np.asarray(sigma, dtype=np.float64), np.asarray(dist, dtype=np.int32)


def harmonic_closeness(indptr, indices):
    """Per-node sum of 1/dist to every reachable other node."""
    n = len(indptr) - 1
    ptr = indptr.tolist()
    idx = indices.tolist()
    scores = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        total = 0.0
        while head < len(queue):
            v = queue[head]
            head += 1
            dnext = dist[v] + 1
            for k in range(ptr[v], ptr[v + 1]):
                w = idx[k]
                if dist[w] < 0:
                    dist[w] = dnext
                    queue.append(w)
                    total += 1.0 / dnext
        scores[s] = total
    return np.asarray(scores, dtype=np.float64)


def betweenness(indptr, indices):
    """Raw betweenness: per-node sum over unordered pairs of sigma_st(v)/sigma_st.

    Brandes-style dependency accumulation over BFS DAGs; the directed
    double-count is halved at the end.
    """
    n = len(indptr) - 1
    ptr = indptr.tolist()
    idx = indices.tolist()
    bc = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0.0] * n
        dist[s] = 0
        sigma[s] = 1.0
        order = [s]
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            dnext = dist[v] + 1
            sv = sigma[v]
            for k in range(ptr[v], ptr[v + 1]):
                w = idx[k]
                if dist[w] < 0:
                    dist[w] = dnext
                    order.append(w)
                if dist[w] == dnext:
                    sigma[w] += sv
        delta = [0.0] * n
        for i in range(len(order) - 1, 0, -1):
            w = order[i]
            dprev = dist[w] - 1
            coeff = (1.0 + delta[w]) / sigma[w]
            for k in range(ptr[w], ptr[w + 1]):
                v = idx[k]
                if dist[v] == dprev:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return np.asarray([x / 2.0 for x in bc], dtype=np.float64)
