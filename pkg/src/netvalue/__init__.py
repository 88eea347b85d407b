"""Network valuation laboratory.

Generates Watts-Strogatz, Barabasi-Albert and block-binomial random graphs,
values them under the Metcalfe (n^2), Zipf (n log10 n) and Reed (2^n) laws
and under structural metrics (degree sum, h-hop reach), and fits the
resulting value ratios.
"""

from .errors import ConfigError, DegenerateInputError, InputError, NetValueError
from .graph import Graph, degree, degree_histogram, reach_counts, reach_within
from .generators import (
    BaConfig, RandomBinomialConfig, RngSeed, WsConfig,
    ba_generate, random_binomial_generate, ring_lattice, ws_generate,
)
from .valuation import (
    Metric, ValueReport, degree_sum_value, evaluate, hop_reach_value,
    metcalfe_value, reed_value, value_ratio, zipf_ratio, zipf_value,
)
from .fitting import (
    PowerLawFit, QuadraticFit, eval_fp, fit_power_law, fit_quadratic, predicted_value,
)
from .experiments import (
    ExperimentPlan, SweepResult, fit_fp_from_sweep,
    run_p_sweep, run_sandwich_check, run_size_sweep,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
