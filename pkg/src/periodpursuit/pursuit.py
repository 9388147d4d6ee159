"""Greedy pursuit of exactly periodic components.

Both engines iterate: score every candidate period of the current
residual, select the period with the largest periodicity metric (ties go
to the smallest period), project the residual into that exactly periodic
subspace, subtract, repeat.

The exact engine (rsp) projects the residual into every candidate
subspace each iteration and scores the true projection energies:
O(Q*N) work per iteration with the block-mean projection.

The fast engine (frsp) estimates the whole metric table from one ACF pass
of the residual and performs a single projection per iteration:
O(N log N) plus the divisor recursion per iteration.

Stopping: a fixed iteration budget, a relative residual-energy floor, or
a degenerate (all-zero) metric table, whichever comes first.  When the
selected period does not divide the signal length the projection is not
exactly orthogonal, so the residual energy bookkeeping is recorded per
iteration rather than assumed: energy_split_defects[k] holds the
relative mismatch |e_prev - e_component - e_next| / e_input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .metrics import MetricTable, estimate_metric_table, periodicity_metric
from .number_theory import totient_summatory
from .subspace import PeriodicComponent, as_signal, project_exact

__all__ = [
    "PursuitConfig",
    "Decomposition",
    "select_period",
    "rsp",
    "frsp",
]


@dataclass
class PursuitConfig:
    """Knobs shared by both pursuit engines.

    max_period bounds the candidate set 1..Q; max_iterations bounds the
    number of extracted components; residual_tolerance is the relative
    residual energy at which to stop early; metric_mode picks the exact
    or approximate periodicity metric; tie_break is fixed to
    "smallest-period" (the fundamental beats its multiples).
    """

    max_period: int
    max_iterations: int = 10
    residual_tolerance: float = 1e-6
    metric_mode: str = "exact"
    tie_break: str = "smallest-period"

    def validate(self, signal_length: int) -> None:
        if self.max_period < 1:
            raise ValueError("max_period must be >= 1")
        if self.max_period > signal_length:
            raise ValueError(
                f"max_period {self.max_period} exceeds signal length {signal_length}"
            )
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0.0 <= self.residual_tolerance < 1.0:
            raise ValueError("residual_tolerance must lie in [0, 1)")
        if self.metric_mode not in ("exact", "approximate"):
            raise ValueError(f"unknown metric mode {self.metric_mode!r}")
        if self.tie_break != "smallest-period":
            raise ValueError("only smallest-period tie-breaking is supported")


@dataclass
class Decomposition:
    """Ordered pursuit output: components, residual, and energy bookkeeping.

    residual_energy_trace[0] is the input energy; entry k is the residual
    energy after iteration k.  representation_condition_met records
    whether Phi(max_period) >= N (the candidate subspaces can span the
    whole signal space); it is reported, not enforced.
    """

    input_energy: float
    components: list[PeriodicComponent]
    residual: np.ndarray
    residual_energy_trace: list[float]
    representation_condition_met: bool
    energy_split_defects: list[float] = field(default_factory=list)
    degenerate_stop: bool = False

    @property
    def selected_periods(self) -> list[int]:
        return [c.period for c in self.components]

    def reconstruction(self) -> np.ndarray:
        """Sum of all components plus the residual; reproduces the input."""
        out = self.residual.copy()
        for c in self.components:
            out += c.samples
        return out


def _argmax_period(metric_values: np.ndarray) -> tuple[int, bool]:
    """Smallest period attaining the maximum metric; flags all-zero tables."""
    scores = metric_values[1:]
    if not np.any(scores > 0.0):
        return 1, True
    return int(np.argmax(scores)) + 1, False


def select_period(table: MetricTable) -> tuple[int, bool]:
    """Pick the dominant period from a metric table.

    Returns (period, degenerate).  Ties break toward the smallest period;
    an all-zero table returns period 1 with the degenerate flag set.
    """
    return _argmax_period(table.metrics)


def _run(x, cfg: PursuitConfig, score_and_project) -> Decomposition:
    x = as_signal(x)
    cfg.validate(x.size)
    residual = x.copy()
    input_energy = float(x @ x)
    trace = [input_energy]
    defects: list[float] = []
    components: list[PeriodicComponent] = []
    degenerate = False

    for iteration in range(1, cfg.max_iterations + 1):
        component = score_and_project(residual)
        if component is None:
            degenerate = True
            break
        component.iteration = iteration
        residual -= component.samples
        energy_next = float(residual @ residual)
        if input_energy > 0.0:
            defects.append(
                abs(trace[-1] - component.energy - energy_next) / input_energy
            )
        else:
            defects.append(0.0)
        trace.append(energy_next)
        components.append(component)
        if input_energy == 0.0 or energy_next / input_energy <= cfg.residual_tolerance:
            break

    return Decomposition(
        input_energy=input_energy,
        components=components,
        residual=residual,
        residual_energy_trace=trace,
        representation_condition_met=totient_summatory(cfg.max_period) >= x.size,
        energy_split_defects=defects,
        degenerate_stop=degenerate,
    )


def rsp(x, cfg: PursuitConfig) -> Decomposition:
    """Exact pursuit: project into every candidate subspace each iteration.

    Metrics come from the true projection energies, so selection is exact;
    the cost is max_period projections per iteration.
    """

    def step(residual: np.ndarray):
        projections = [project_exact(residual, q) for q in range(1, cfg.max_period + 1)]
        scores = np.zeros(cfg.max_period + 1)
        for comp in projections:
            scores[comp.period] = periodicity_metric(
                comp.energy, comp.period, residual.size, mode=cfg.metric_mode
            )
        q, degenerate = _argmax_period(scores)
        if degenerate:
            return None
        return projections[q - 1]

    return _run(x, cfg, step)


def frsp(x, cfg: PursuitConfig) -> Decomposition:
    """Fast pursuit: one ACF pass prices all periods, one projection follows.

    Selection uses estimates, so the projected energy can differ from the
    estimate that won the argmax; the component records the actual
    projection energy and metric.
    """

    def step(residual: np.ndarray):
        table = estimate_metric_table(residual, cfg.max_period, mode=cfg.metric_mode)
        q, degenerate = _argmax_period(table.metrics)
        if degenerate:
            return None
        return project_exact(residual, q)

    return _run(x, cfg, step)
