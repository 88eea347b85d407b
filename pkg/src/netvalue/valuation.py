"""Network value under the competing laws and structural metrics.

Formula laws depend on the node count only; structural metrics on the graph.
All logarithms are base 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, reach_counts

FORMULA_KINDS = ("metcalfe", "zipf", "reed")
STRUCTURAL_KINDS = ("degree-sum", "hop")


@dataclass(frozen=True)
class Metric:
    """One valuation metric. ``hops`` is set only for ``kind == "hop"``."""

    kind: str
    hops: int | None = None

    def __post_init__(self):
        if self.kind not in FORMULA_KINDS + STRUCTURAL_KINDS:
            raise InputError(f"unknown metric kind {self.kind!r}")
        if self.kind == "hop":
            if self.hops is None or self.hops < 1:
                raise InputError(f"hop budget must be >= 1, got {self.hops}")
        elif self.hops is not None:
            raise InputError(f"metric {self.kind!r} takes no hop budget")

    @classmethod
    def parse(cls, token: str) -> "Metric":
        """Parse ``metcalfe | zipf | reed | degree-sum | hop:<h>``."""
        token = token.strip().lower()
        if token.startswith("hop:"):
            try:
                h = int(token[4:])
            except ValueError:
                raise InputError(f"bad hop budget in metric {token!r}") from None
            return cls("hop", h)
        return cls(token)

    @property
    def token(self) -> str:
        return f"hop:{self.hops}" if self.kind == "hop" else self.kind

    @property
    def is_formula(self) -> bool:
        return self.kind in FORMULA_KINDS

    def __str__(self):
        return self.token


METCALFE = Metric("metcalfe")
ZIPF = Metric("zipf")
REED = Metric("reed")
DEGREE_SUM = Metric("degree-sum")


@dataclass(frozen=True)
class ValueReport:
    metric: Metric
    value: float
    n: int
    log2_value: float | None = None


def metcalfe_value(n: int) -> float:
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    return float(n) * float(n)


def zipf_value(n: int) -> float:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return n * math.log10(n)


def reed_value(n: int) -> float:
    """2**n; evaluated through exp/log beyond n=60, ``inf`` once it overflows."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    if n <= 60:
        return float(1 << n)
    try:
        return math.exp(n * math.log(2.0))
    except OverflowError:
        return math.inf


def degree_sum_value(g: Graph) -> float:
    return float(2 * g.num_edges)


def hop_reach_value(g: Graph, h: int) -> float:
    """Sum over nodes of the number of other nodes within ``h`` hops."""
    if h < 1:
        raise InputError(f"hop budget must be >= 1, got {h}")
    if g.n == 0:
        return 0.0
    return float(reach_counts(g, h).sum())


def evaluate(g: Graph, metric: Metric) -> ValueReport:
    kind = metric.kind
    if kind == "metcalfe":
        value = metcalfe_value(g.n)
    elif kind == "zipf":
        value = zipf_value(g.n)
    elif kind == "reed":
        return ValueReport(metric, reed_value(g.n), g.n, log2_value=float(g.n))
    elif kind == "degree-sum":
        value = degree_sum_value(g)
    else:
        value = hop_reach_value(g, metric.hops)
    return ValueReport(metric, value, g.n)


def zipf_ratio(value: float, n: int) -> float:
    """``value`` as a multiple of ``n log10 n``."""
    if n < 2:
        raise InputError(f"value ratio needs n >= 2, got {n}")
    return value / zipf_value(n)


def value_ratio(g: Graph, metric: Metric) -> float:
    """Metric value of ``g`` expressed as a multiple of ``n log10 n``."""
    if g.n < 2:
        raise InputError(f"value ratio needs n >= 2, got {g.n}")
    return zipf_ratio(evaluate(g, metric).value, g.n)
