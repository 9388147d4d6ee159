"""Periodic decomposition, hidden-period estimation, and periodic similarity.

Decomposes real signals of any length into sums of exactly periodic
components via greedy subspace pursuit, prices candidate periods either
by direct projection (rsp) or from a single autocorrelation pass (frsp),
and compares signals through period-indexed energy histograms.
"""

__version__ = "0.1.0"

from .number_theory import (
    divisors,
    euler_totient,
    factorize,
    ramanujan_sums,
    totient_summatory,
)
from .subspace import (
    PeriodicComponent,
    RamanujanBasis,
    build_basis,
    project_exact,
    project_periodic,
)
from .metrics import (
    MetricTable,
    autocorrelation,
    estimate_metric_table,
    mle_periodic_energy,
    periodicity_metric,
)
from .pursuit import Decomposition, PursuitConfig, frsp, rsp, select_period
from .analysis import (
    PeriodicEnergyHistogram,
    PeriodicEnergySpectrum,
    energy_histogram,
    hellinger_distance,
    periodic_similarity,
    pes,
)
from .signal_gen import (
    MixtureSpec,
    add_white_noise,
    random_mixture,
    three_cosine,
    tile_block,
)
from .experiment import ExperimentConfig, ExperimentReport, run_experiment

__all__ = [
    "__version__",
    "factorize",
    "euler_totient",
    "divisors",
    "totient_summatory",
    "ramanujan_sums",
    "RamanujanBasis",
    "PeriodicComponent",
    "build_basis",
    "project_exact",
    "project_periodic",
    "MetricTable",
    "autocorrelation",
    "periodicity_metric",
    "mle_periodic_energy",
    "estimate_metric_table",
    "PursuitConfig",
    "Decomposition",
    "select_period",
    "rsp",
    "frsp",
    "PeriodicEnergySpectrum",
    "PeriodicEnergyHistogram",
    "pes",
    "energy_histogram",
    "hellinger_distance",
    "periodic_similarity",
    "MixtureSpec",
    "three_cosine",
    "tile_block",
    "random_mixture",
    "add_white_noise",
    "ExperimentConfig",
    "ExperimentReport",
    "run_experiment",
]
