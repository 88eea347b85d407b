"""Least-squares fits: quadratic value-ratio law and log-log degree power law.

The power-law fit is a plain regression of log10(count) on log10(degree)
over the raw histogram. It is the estimator used for quick visual checks and
is known to be biased (the sparse tail of count-1 degrees flattens the
slope); use a maximum-likelihood estimator for serious exponent estimates.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Iterable, Mapping

import numpy as np

from .errors import DegenerateInputError, InputError
from .valuation import zipf_value

# Quadratic rewiring law Y = a p^2 + b p + c reported for Watts-Strogatz value ratios.
FP_COEFFS = (12.045, 6.59, 2.5533)


@dataclass(frozen=True)
class QuadraticFit:
    a: float
    b: float
    c: float
    r_squared: float

    def __call__(self, x):
        return self.a * x * x + self.b * x + self.c

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    log_coefficient: float
    r_squared: float

    def to_dict(self) -> dict:
        return asdict(self)


def r_squared(y, y_hat) -> float:
    """Coefficient of determination ``1 - SS_res / SS_tot``.

    Constant ``y`` has no variance to explain: a zero-residual fit scores 1,
    anything else 0.
    """
    y = np.asarray(y, dtype=float)
    y_hat = np.asarray(y_hat, dtype=float)
    ss_res = float(np.sum((y - y_hat) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        return 1.0 if ss_res <= 1e-24 * max(1.0, float(np.sum(y * y))) else 0.0
    return min(1.0, max(0.0, 1.0 - ss_res / ss_tot))


def fit_quadratic(points: Iterable) -> QuadraticFit:
    """Ordinary least squares for ``y = a x^2 + b x + c`` via the 3x3 normal equations."""
    pts = np.asarray(list(points), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DegenerateInputError("expected a sequence of (x, y) pairs")
    x, y = pts[:, 0], pts[:, 1]
    if len(np.unique(x)) < 3:
        raise DegenerateInputError("quadratic fit needs at least 3 distinct x values")
    design = np.column_stack([x * x, x, np.ones_like(x)])
    coef = np.linalg.solve(design.T @ design, design.T @ y)
    a, b, c = (float(v) for v in coef)
    return QuadraticFit(a, b, c, r_squared(y, design @ coef))


def fit_power_law(hist: Mapping[int, int]) -> PowerLawFit:
    """Slope/intercept of log10(count) against log10(degree).

    Entries with degree 0 or count 0 are dropped first.
    """
    usable = sorted((d, c) for d, c in hist.items() if d >= 1 and c >= 1)
    if len(usable) < 2:
        raise DegenerateInputError("power-law fit needs at least 2 entries with degree >= 1")
    lx = np.log10([d for d, _ in usable])
    ly = np.log10([c for _, c in usable])
    dx = lx - lx.mean()
    slope = float(np.dot(dx, ly - ly.mean()) / np.dot(dx, dx))
    intercept = float(ly.mean() - slope * lx.mean())
    return PowerLawFit(slope, intercept, r_squared(ly, intercept + slope * lx))


def eval_fp(p: float) -> float:
    """Value-ratio multiplier ``f(p)`` for rewiring probability ``p``."""
    if not (0.0 <= p <= 1.0):
        raise InputError(f"rewiring probability must lie in [0, 1], got {p}")
    a, b, c = FP_COEFFS
    return a * p * p + b * p + c


def predicted_value(n: int, p: float) -> float:
    """Composite small-world value law ``f(p) * n log10 n``."""
    f = eval_fp(p)
    if n == 1:
        return 0.0
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    return f * zipf_value(n)
