"""Undirected simple graphs, degree queries and bounded reachability."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels
from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    ``edges`` is normalised to a frozenset of ``(u, v)`` tuples with
    ``u < v``; duplicate pairs collapse. Self-loops and out-of-range
    endpoints raise :class:`InputError`.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise InputError(f"node count must be non-negative, got {self.n}")
        norm = set()
        for pair in self.edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise InputError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has endpoint outside [0, {n})")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(p) for p in pairs))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(E, 2)`` int64 array sorted lexicographically."""
        if not self.edges:
            return np.empty((0, 2), dtype=np.int64)
        arr = np.array(sorted(self.edges), dtype=np.int64)
        return arr

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` adjacency with sorted neighbour lists."""
        e = self.edge_array
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        indices = np.ascontiguousarray(dst[order], dtype=np.int64)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        return indptr, indices

    def neighbors(self, v: int) -> np.ndarray:
        _check_node(self, v)
        indptr, indices = self.csr
        return indices[indptr[v]:indptr[v + 1]]

    def to_json(self) -> str:
        """Canonical, byte-stable JSON: ``{"n": n, "edges": [[u, v], ...]}``."""
        return json.dumps({"n": self.n, "edges": self.edge_array.tolist()},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            doc = json.loads(text)
            n = doc["n"]
            edges = doc["edges"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"malformed graph document: {exc}") from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError("graph document field 'n' must be an integer")
        if not all(isinstance(p, list) and len(p) == 2
                   and all(isinstance(x, int) for x in p) for p in edges):
            raise InputError("graph document 'edges' must be a list of integer pairs")
        return cls.from_edges(n, edges)


def _check_node(g: Graph, v) -> None:
    if not (0 <= v < g.n):
        raise InputError(f"node {v} out of range for graph with {g.n} nodes")


def degree(g: Graph, v: int) -> int:
    _check_node(g, v)
    return int(g.degrees[v])


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map each degree present in ``g`` to the number of nodes having it."""
    values, counts = np.unique(g.degrees, return_counts=True)
    return {int(d): int(c) for d, c in zip(values, counts)}


def reach_within(g: Graph, v: int, h: int) -> int:
    """Number of nodes other than ``v`` at shortest-path distance <= ``h``."""
    _check_node(g, v)
    if h < 1:
        raise InputError(f"hop budget must be >= 1, got {h}")
    indptr, indices = g.csr
    return int(kernels.reach_from(indptr, indices, g.n, v, h))


def reach_counts(g: Graph, h: int, backend: str | None = None) -> np.ndarray:
    """``reach_within(g, v, h)`` for every node, as an int64 array."""
    if h < 1:
        raise InputError(f"hop budget must be >= 1, got {h}")
    indptr, indices = g.csr
    return kernels.get_backend(backend).reach_counts(indptr, indices, g.n, h)
