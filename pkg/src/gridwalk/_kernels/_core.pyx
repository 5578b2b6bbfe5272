# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS kernels over CSR adjacency.

Mirrors _kernels/pure.py operation-for-operation: identical traversal and
floating-point accumulation order, so both backends return bit-identical
arrays. Keep them in sync.
"""

import numpy as np


def bfs_distances(int[:] indptr, int[:] indices, int source):
    cdef int n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[:] dist = dist_arr
    cdef int[:] queue = queue_arr
    cdef int head = 0, tail = 0, v, w, k, dnext
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dnext
                queue[tail] = w
                tail += 1
    return dist_arr


def shortest_path_counts(int[:] indptr, int[:] indices, int source):
    cdef int n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    sigma_arr = np.zeros(n, dtype=np.float64)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[:] dist = dist_arr
    cdef double[:] sigma = sigma_arr
    cdef int[:] queue = queue_arr
    cdef int head = 0, tail = 0, v, w, k, dnext
    cdef double sv
    dist[source] = 0
    sigma[source] = 1.0
    queue[tail] = source
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        dnext = dist[v] + 1
        sv = sigma[v]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dnext
                queue[tail] = w
                tail += 1
            if dist[w] == dnext:
                sigma[w] += sv
    return sigma_arr, dist_arr


def harmonic_closeness(int[:] indptr, int[:] indices):
    cdef int n = indptr.shape[0] - 1
    scores_arr = np.zeros(n, dtype=np.float64)
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef double[:] scores = scores_arr
    cdef int[:] dist = dist_arr
    cdef int[:] queue = queue_arr
    cdef int s, head, tail, v, w, k, dnext, i
    cdef double total
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        total = 0.0
        while head < tail:
            v = queue[head]
            head += 1
            dnext = dist[v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dnext
                    queue[tail] = w
                    tail += 1
                    total += 1.0 / dnext
        scores[s] = total
    return scores_arr


def betweenness(int[:] indptr, int[:] indices):
    cdef int n = indptr.shape[0] - 1
    bc_arr = np.zeros(n, dtype=np.float64)
    dist_arr = np.empty(n, dtype=np.int32)
    sigma_arr = np.empty(n, dtype=np.float64)
    delta_arr = np.empty(n, dtype=np.float64)
    order_arr = np.empty(n, dtype=np.int32)
    cdef double[:] bc = bc_arr
    cdef int[:] dist = dist_arr
    cdef double[:] sigma = sigma_arr
    cdef double[:] delta = delta_arr
    cdef int[:] order = order_arr
    cdef int s, head, tail, v, w, k, dnext, dprev, i
    cdef double sv, coeff
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            dnext = dist[v] + 1
            sv = sigma[v]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dnext
                    order[tail] = w
                    tail += 1
                if dist[w] == dnext:
                    sigma[w] += sv
        for i in range(n):
            delta[i] = 0.0
        for i in range(tail - 1, 0, -1):
            w = order[i]
            dprev = dist[w] - 1
            coeff = (1.0 + delta[w]) / sigma[w]
            for k in range(indptr[w], indptr[w + 1]):
                v = indices[k]
                if dist[v] == dprev:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    for i in range(n):
        bc[i] = bc[i] / 2.0
    return bc_arr
