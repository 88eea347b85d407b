# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bounded-BFS kernels over a CSR adjacency.

Signatures mirror ``netvalue._pycore`` exactly.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t idx_t


cdef idx_t _bfs_count(const idx_t[::1] indptr, const idx_t[::1] indices,
                      idx_t source, idx_t hops, idx_t[::1] stamp,
                      idx_t[::1] queue) noexcept nogil:
    cdef idx_t head = 0, tail = 1, level_end, depth = 0
    cdef idx_t u, w, j
    stamp[source] = source
    queue[0] = source
    while head < tail and depth < hops:
        level_end = tail
        while head < level_end:
            u = queue[head]
            head += 1
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if stamp[w] != source:
                    stamp[w] = source
                    queue[tail] = w
                    tail += 1
        depth += 1
    return tail - 1


def reach_from(const idx_t[::1] indptr, const idx_t[::1] indices, idx_t n,
               idx_t source, idx_t hops):
    cdef idx_t[::1] stamp = np.full(n, -1, dtype=np.int64)
    cdef idx_t[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef idx_t result
    with nogil:
        result = _bfs_count(indptr, indices, source, hops, stamp, queue)
    return int(result)


def reach_counts(const idx_t[::1] indptr, const idx_t[::1] indices, idx_t n,
                 idx_t hops):
    out = np.zeros(n, dtype=np.int64)
    cdef idx_t[::1] out_v = out
    cdef idx_t[::1] stamp = np.full(n, -1, dtype=np.int64)
    cdef idx_t[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef idx_t v
    with nogil:
        for v in range(n):
            out_v[v] = _bfs_count(indptr, indices, v, hops, stamp, queue)
    return out
