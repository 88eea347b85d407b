"""SVG plots of sweep results (requires matplotlib)."""

from __future__ import annotations

import io

import numpy as np

from .experiments import SweepResult
from .fitting import QuadraticFit


def sweep_svg(result: SweepResult, title: str = "", fit: QuadraticFit | None = None) -> str:
    """Render a sweep as SVG text. Output is byte-stable for equal input."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with matplotlib.rc_context({"svg.hashsalt": "netvalue", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        x = result.column("key")
        if result.key_name == "p":
            y, err = result.column("ratio"), result.column("std_dev") / result.column("zipf")
            ax.errorbar(x, y, yerr=err, fmt="o", ms=3, label=f"{result.metric} / n log n")
            if fit is not None:
                xs = np.linspace(x.min(), x.max(), 200)
                ax.plot(xs, fit(xs), label=f"{fit.a:.3f}p² + {fit.b:.3f}p + {fit.c:.3f}")
            ax.set_xlabel("rewiring probability p")
            ax.set_ylabel("value / n log10 n")
        else:
            ax.errorbar(x, result.column("mean_value"), yerr=result.column("std_dev"),
                        fmt="o", ms=3, label=f"calculated ({result.metric})")
            ax.plot(x, result.column("zipf"), label="n log10 n")
            ax.plot(x, result.column("metcalfe"), label="n²")
            ax.set_xlabel("nodes n")
            ax.set_ylabel("value")
        ax.set_title(title)
        ax.legend()
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None, "Creator": None})
        plt.close(fig)
    return buf.getvalue()
