"""Pure-Python bounded-BFS kernels; fallback for the compiled ``_core``."""

import numpy as np


def _bfs_count(adj, source, hops, stamp):
    stamp[source] = source
    frontier = [source]
    seen = 0
    depth = 0
    while frontier and depth < hops:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if stamp[w] != source:
                    stamp[w] = source
                    nxt.append(w)
        seen += len(nxt)
        frontier = nxt
        depth += 1
    return seen


def _adjacency(indptr, indices, n):
    idx = indices.tolist()
    ptr = indptr.tolist()
    return [idx[ptr[v]:ptr[v + 1]] for v in range(n)]


def reach_from(indptr, indices, n, source, hops):
    adj = _adjacency(indptr, indices, n)
    return _bfs_count(adj, int(source), int(hops), [-1] * n)


def reach_counts(indptr, indices, n, hops):
    adj = _adjacency(indptr, indices, n)
    stamp = [-1] * n
    out = [_bfs_count(adj, v, int(hops), stamp) for v in range(n)]
    return np.asarray(out, dtype=np.int64)
