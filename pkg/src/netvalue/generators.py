"""Seeded generators for Watts-Strogatz, Barabasi-Albert and block-binomial graphs.

Every generator takes an :class:`RngSeed`; the pair ``(master_seed,
stream_index)`` fully determines the output graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigError
from .graph import Graph


@dataclass(frozen=True)
class RngSeed:
    master_seed: int
    stream_index: int = 0

    def generator(self) -> np.random.Generator:
        if self.master_seed < 0 or self.stream_index < 0:
            raise ConfigError("seed values must be non-negative")
        ss = np.random.SeedSequence([self.master_seed, self.stream_index])
        return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class WsConfig:
    n: int
    k: int
    p: float = 0.0

    def validate(self) -> None:
        _check_lattice(self.n, self.k)
        if not (0.0 <= self.p <= 1.0):
            raise ConfigError(f"rewiring probability must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class BaConfig:
    n: int
    m: int = 1
    seed_size: int | None = None

    @property
    def seed_nodes(self) -> int:
        return self.seed_size if self.seed_size is not None else max(self.m, 3)

    def validate(self) -> None:
        if self.m < 1:
            raise ConfigError(f"m must be >= 1, got {self.m}")
        s = self.seed_nodes
        if s < max(self.m, 3):
            raise ConfigError(f"seed_size must be >= max(m, 3) = {max(self.m, 3)}, got {s}")
        if self.n < s:
            raise ConfigError(f"n ({self.n}) must be >= seed_size ({s})")


@dataclass(frozen=True)
class RandomBinomialConfig:
    """Stochastic block graph: ``groups`` are contiguous block sizes and
    ``prob[a][b]`` the connection probability between blocks ``a`` and ``b``."""

    n: int
    groups: tuple[int, ...]
    prob: tuple[tuple[float, ...], ...]

    @classmethod
    def uniform(cls, n: int, p: float) -> "RandomBinomialConfig":
        return cls(n, (n,), ((float(p),),))

    def validate(self) -> None:
        if self.n < 0:
            raise ConfigError(f"n must be non-negative, got {self.n}")
        if any(b < 0 for b in self.groups) or sum(self.groups) != self.n:
            raise ConfigError(f"block sizes {self.groups} do not sum to n={self.n}")
        g = len(self.groups)
        mat = np.asarray(self.prob, dtype=float)
        if mat.shape != (g, g):
            raise ConfigError(f"probability matrix must be {g}x{g}, got shape {mat.shape}")
        if not np.array_equal(mat, mat.T):
            raise ConfigError("probability matrix must be symmetric")
        if np.any(mat < 0) or np.any(mat > 1) or np.any(np.isnan(mat)):
            raise ConfigError("probabilities must lie in [0, 1]")


def _check_lattice(n: int, k: int) -> None:
    if n < 3:
        raise ConfigError(f"ring lattice needs n >= 3, got {n}")
    if k < 2 or k % 2:
        raise ConfigError(f"k must be even and >= 2, got {k}")
    if k > n - 1:
        raise ConfigError(f"k ({k}) must not exceed n-1 ({n - 1})")


def _lattice_edges(n: int, k: int) -> list[tuple[int, int]]:
    # clockwise edges in (node, offset) order
    return [(v, (v + j) % n) for v in range(n) for j in range(1, k // 2 + 1)]


def ring_lattice(n: int, k: int) -> Graph:
    _check_lattice(n, k)
    return Graph.from_edges(n, _lattice_edges(n, k))


def ws_generate(cfg: WsConfig, seed: RngSeed) -> Graph:
    """Watts-Strogatz rewiring of ``ring_lattice(n, k)``.

    Each clockwise lattice edge ``(v, v+j)`` is visited once, node-major. With
    probability ``p`` its far endpoint is redrawn uniformly; draws that would
    create a self-loop or duplicate edge are rejected and retried up to ``n``
    times, after which the edge stays put.
    """
    cfg.validate()
    n, k, p = cfg.n, cfg.k, cfg.p
    lattice = _lattice_edges(n, k)
    if p == 0.0:
        return Graph.from_edges(n, lattice)
    rng = seed.generator()
    adj = [set() for _ in range(n)]
    for u, v in lattice:
        adj[u].add(v)
        adj[v].add(u)
    for u, v in lattice:
        if rng.random() >= p:
            continue
        for _ in range(n):
            w = int(rng.integers(n))
            if w != u and w not in adj[u]:
                adj[u].discard(v)
                adj[v].discard(u)
                adj[u].add(w)
                adj[w].add(u)
                break
    return Graph.from_edges(n, ((u, w) for u in range(n) for w in adj[u] if u < w))


def ba_generate(cfg: BaConfig, seed: RngSeed) -> Graph:
    """Barabasi-Albert growth from a ring seed.

    Targets for each new node are sampled from the endpoint repertoire (every
    node listed once per unit of degree), rejecting repeats, so attachment is
    degree-proportional and the graph stays simple.
    """
    cfg.validate()
    n, m, s = cfg.n, cfg.m, cfg.seed_nodes
    edges = [(v, (v + 1) % s) for v in range(s)]
    repertoire = []
    for u, v in edges:
        repertoire += (u, v)
    rng = seed.generator()
    for new in range(s, n):
        targets: list[int] = []
        size = len(repertoire)
        while len(targets) < m:
            t = repertoire[int(rng.random() * size)]
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            repertoire += (t, new)
    return Graph.from_edges(n, edges)


def random_binomial_generate(cfg: RandomBinomialConfig, seed: RngSeed) -> Graph:
    """Include each unordered pair independently with its block probability."""
    cfg.validate()
    n = cfg.n
    if n < 2:
        return Graph(n)
    block = np.repeat(np.arange(len(cfg.groups)), cfg.groups)
    mat = np.asarray(cfg.prob, dtype=float)
    iu, ju = np.triu_indices(n, k=1)
    draws = seed.generator().random(iu.size)
    keep = draws < mat[block[iu], block[ju]]
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def generate(cfg, seed: RngSeed) -> Graph:
    """Dispatch on the config type."""
    if isinstance(cfg, WsConfig):
        return ws_generate(cfg, seed)
    if isinstance(cfg, BaConfig):
        return ba_generate(cfg, seed)
    if isinstance(cfg, RandomBinomialConfig):
        return random_binomial_generate(cfg, seed)
    raise ConfigError(f"unknown generator config {cfg!r}")


def block_config(n: int, groups: Sequence[int], prob: Sequence[Sequence[float]]) -> RandomBinomialConfig:
    return RandomBinomialConfig(n, tuple(int(g) for g in groups),
                                tuple(tuple(float(x) for x in row) for row in prob))
