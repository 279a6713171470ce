# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: all-pairs BFS and Heisenberg full-space assembly."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def all_pairs_bfs(const long long[::1] indptr, const long long[::1] indices, Py_ssize_t n):
    """BFS from every vertex of a CSR graph; -1 marks unreachable pairs."""
    dist_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] dist = dist_arr
    queue_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef long long[::1] queue = queue_arr
    cdef Py_ssize_t src, head, tail, u, v, e
    with nogil:
        for src in range(n):
            dist[src, src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for e in range(indptr[u], indptr[u + 1]):
                    v = indices[e]
                    if dist[src, v] < 0:
                        dist[src, v] = dist[src, u] + 1
                        queue[tail] = v
                        tail += 1
    return dist_arr


def heisenberg_accumulate(double[:, ::1] out, int n_qubits,
                          const long long[::1] ks, const long long[::1] ls,
                          const double[::1] weights):
    """Add weight * (1/2) sigma_k . sigma_l for every listed pair into ``out``."""
    cdef Py_ssize_t dim = (<Py_ssize_t>1) << n_qubits
    cdef Py_ssize_t p, s, mask
    cdef long long k, l
    cdef double w
    with nogil:
        for p in range(ks.shape[0]):
            k = ks[p]
            l = ls[p]
            w = weights[p]
            if k == l:
                for s in range(dim):
                    out[s, s] += 1.5 * w
                continue
            mask = ((<Py_ssize_t>1) << k) | ((<Py_ssize_t>1) << l)
            for s in range(dim):
                if ((s >> k) & 1) == ((s >> l) & 1):
                    out[s, s] += 0.5 * w
                else:
                    out[s, s] -= 0.5 * w
                    out[s ^ mask, s] += w
