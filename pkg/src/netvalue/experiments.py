"""Monte Carlo sweeps over graph ensembles.

Repetition ``r`` of every cell draws from ``RngSeed(master_seed, r)``, so any
single graph of a sweep can be regenerated on its own.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .errors import ConfigError
from .fitting import QuadraticFit, fit_quadratic
from .generators import BaConfig, RandomBinomialConfig, RngSeed, WsConfig, generate
from .valuation import Metric, evaluate, metcalfe_value, zipf_ratio, zipf_value

FAMILIES = ("ws", "ba", "random")
CSV_COLUMNS = ("key", "mean_value", "std_dev", "zipf", "metcalfe", "ratio")
DEFAULT_REPETITIONS = 30
DEFAULT_P_GRID = tuple(round(0.02 * i, 2) for i in range(26))


@dataclass(frozen=True)
class ExperimentPlan:
    family: str
    sizes: tuple[int, ...]
    metric: Metric
    p_grid: tuple[float, ...] = ()
    k: int = 4
    m: int = 1
    seed_size: int | None = None
    edge_prob: float = 0.3
    repetitions: int = DEFAULT_REPETITIONS
    master_seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ConfigError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not self.sizes or any(n < 2 for n in self.sizes):
            raise ConfigError(f"sizes must be non-empty and all >= 2, got {self.sizes}")
        if self.repetitions < 1:
            raise ConfigError(f"repetitions must be >= 1, got {self.repetitions}")
        if any(not (0.0 <= p <= 1.0) for p in self.p_grid):
            raise ConfigError(f"p_grid entries must lie in [0, 1], got {self.p_grid}")
        if not (0.0 <= self.edge_prob <= 1.0):
            raise ConfigError(f"edge_prob must lie in [0, 1], got {self.edge_prob}")
        if self.master_seed < 0 or self.master_seed >= 2**64:
            raise ConfigError("master_seed must be an unsigned 64-bit value")
        if self.family == "ws" and not self.p_grid:
            raise ConfigError("ws plans need a non-empty p_grid")

    def config(self, n: int, p: float | None = None):
        if self.family == "ws":
            cfg = WsConfig(n, self.k, self.p_grid[0] if p is None else p)
        elif self.family == "ba":
            cfg = BaConfig(n, self.m, self.seed_size)
        else:
            cfg = RandomBinomialConfig.uniform(n, self.edge_prob)
        try:
            cfg.validate()
        except ConfigError as exc:
            raise ConfigError(f"n={n}: {exc}") from None
        return cfg

    def to_dict(self) -> dict:
        d = asdict(self)
        d["metric"] = self.metric.token
        d["sizes"] = list(self.sizes)
        d["p_grid"] = list(self.p_grid)
        return d

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentPlan":
        known = {"family", "sizes", "p_grid", "k", "m", "seed_size", "edge_prob",
                 "metric", "repetitions", "master_seed"}
        extra = set(doc) - known
        if extra:
            raise ConfigError(f"unknown plan fields: {sorted(extra)}")
        try:
            kwargs = dict(doc)
            kwargs["sizes"] = tuple(int(n) for n in doc["sizes"])
            kwargs["p_grid"] = tuple(float(p) for p in doc.get("p_grid", ()))
            kwargs["metric"] = Metric.parse(doc["metric"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed plan: {exc}") from exc
        plan = cls(**kwargs)
        plan.validate()
        return plan


@dataclass(frozen=True)
class SweepRow:
    key: float
    mean_value: float
    std_dev: float
    zipf: float
    metcalfe: float
    ratio: float
    between: bool | None = None


@dataclass
class SweepResult:
    key_name: str
    rows: list[SweepRow] = field(default_factory=list)
    metric: str = ""

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = list(CSV_COLUMNS)
        flagged = any(r.between is not None for r in self.rows)
        if flagged:
            cols.append("between")
        w.writerow(cols)
        for r in self.rows:
            key = int(r.key) if self.key_name == "n" else r.key
            line = [key, *(repr(float(getattr(r, c))) for c in CSV_COLUMNS[1:])]
            if flagged:
                line.append(str(r.between).lower())
            w.writerow(line)
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"key": self.key_name, "metric": self.metric,
               "rows": [asdict(r) for r in self.rows]}
        return json.dumps(doc, indent=1, sort_keys=True)


def mean_std(values) -> tuple[float, float]:
    """Two-pass mean and sample standard deviation; std of one value is 0."""
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if arr.size < 2:
        return mean, 0.0
    return mean, float(math.sqrt(np.sum((arr - mean) ** 2) / (arr.size - 1)))


def _cell(plan: ExperimentPlan, key: float, n: int, cfg) -> SweepRow:
    values = [evaluate(generate(cfg, RngSeed(plan.master_seed, r)), plan.metric).value
              for r in range(plan.repetitions)]
    mean, std = mean_std(values)
    z = zipf_value(n)
    return SweepRow(key, mean, std, z, metcalfe_value(n), zipf_ratio(mean, n))


def run_size_sweep(plan: ExperimentPlan) -> SweepResult:
    """Mean metric value per graph size, alongside the Zipf and Metcalfe laws."""
    plan.validate()
    if plan.family == "ws" and len(plan.p_grid) != 1:
        raise ConfigError("a ws size sweep needs exactly one rewiring probability in p_grid")
    rows = [_cell(plan, n, n, plan.config(n)) for n in sorted(set(plan.sizes))]
    return SweepResult("n", rows, plan.metric.token)


def run_p_sweep(plan: ExperimentPlan) -> SweepResult:
    """Mean metric value per rewiring probability at a fixed size."""
    plan.validate()
    if plan.family != "ws":
        raise ConfigError("p sweeps need the ws family")
    if len(plan.sizes) != 1:
        raise ConfigError("p sweeps need exactly one size")
    n = plan.sizes[0]
    rows = [_cell(plan, p, n, plan.config(n, p)) for p in sorted(set(plan.p_grid))]
    return SweepResult("p", rows, plan.metric.token)


def fit_fp_from_sweep(result: SweepResult) -> QuadraticFit:
    """Quadratic fit of the value ratio against rewiring probability."""
    return fit_quadratic([(r.key, r.ratio) for r in result.rows])


def run_sandwich_check(plan: ExperimentPlan) -> SweepResult:
    """Size sweep flagging rows where ``zipf <= mean_value <= metcalfe``."""
    if plan.family != "random":
        raise ConfigError("sandwich checks need the random family")
    result = run_size_sweep(plan)
    result.rows = [SweepRow(r.key, r.mean_value, r.std_dev, r.zipf, r.metcalfe, r.ratio,
                            r.zipf <= r.mean_value <= r.metcalfe)
                   for r in result.rows]
    return result
