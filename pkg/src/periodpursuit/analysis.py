"""Period-domain summaries and similarity between periodic structures.

The periodic energy spectrum maps period q to the energy of the exactly
q-periodic component found by a pursuit.  Its square-root form normalized
by the signal norm is the periodic energy histogram

    h[q] = ||x_q|| / ||x||,

which is comparable across signals of different length.  Histograms are
compared with the squared-difference Hellinger form

    D(a, b)     = 1/2 * ||a - b||^2
    D_cos(a, b) = 1/2 * ||a - b||^2 / (||a|| * ||b||)
    S(a, b)     = 1 - D_cos(a, b)

S is the periodic similarity; it is 1 exactly when the histograms match.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pursuit import Decomposition

__all__ = [
    "PeriodicEnergySpectrum",
    "PeriodicEnergyHistogram",
    "pes",
    "energy_histogram",
    "hellinger_distance",
    "periodic_similarity",
]


@dataclass
class PeriodicEnergySpectrum:
    """Energy versus integer period; energies[q] indexed by period, [0] unused."""

    max_period: int
    energies: np.ndarray

    def nonzero_periods(self) -> list[int]:
        return [int(q) for q in np.nonzero(self.energies)[0] if q > 0]

    def to_dict(self) -> dict:
        return {
            "max_period": self.max_period,
            "periods": list(range(1, self.max_period + 1)),
            "energies": [float(v) for v in self.energies[1:]],
        }


@dataclass
class PeriodicEnergyHistogram:
    """Normalized per-period amplitudes; values[q] indexed by period, [0] unused."""

    max_period: int
    values: np.ndarray

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def to_dict(self) -> dict:
        return {
            "max_period": self.max_period,
            "periods": list(range(1, self.max_period + 1)),
            "values": [float(v) for v in self.values[1:]],
        }


def pes(decomposition: Decomposition, max_period: int) -> PeriodicEnergySpectrum:
    """Periodic energy spectrum of a decomposition.

    Components sharing a period (re-selection during pursuit) are merged
    by summing their sample sequences before taking the energy: repeated
    extractions at the same period need not be orthogonal to each other,
    so summing energies would overcount.
    """
    q_max = int(max_period)
    if q_max < 1:
        raise ValueError("max_period must be >= 1")
    merged: dict[int, np.ndarray] = {}
    for comp in decomposition.components:
        if comp.period > q_max:
            raise ValueError(
                f"decomposition contains period {comp.period} beyond max_period {q_max}"
            )
        if comp.period in merged:
            merged[comp.period] = merged[comp.period] + comp.samples
        else:
            merged[comp.period] = comp.samples
    energies = np.zeros(q_max + 1)
    for q, samples in merged.items():
        energies[q] = float(samples @ samples)
    return PeriodicEnergySpectrum(max_period=q_max, energies=energies)


def energy_histogram(decomposition: Decomposition, max_period: int) -> PeriodicEnergyHistogram:
    """Periodic energy histogram h[q] = ||x_q|| / ||x|| of a decomposition."""
    if decomposition.input_energy <= 0.0:
        raise ValueError("energy histogram undefined for a zero-energy signal")
    spectrum = pes(decomposition, max_period)
    values = np.sqrt(spectrum.energies) / math.sqrt(decomposition.input_energy)
    return PeriodicEnergyHistogram(max_period=spectrum.max_period, values=values)


def _check_pair(a: PeriodicEnergyHistogram, b: PeriodicEnergyHistogram) -> None:
    if a.max_period != b.max_period:
        raise ValueError(
            f"histograms cover different period ranges: {a.max_period} vs {b.max_period}"
        )


def hellinger_distance(a: PeriodicEnergyHistogram, b: PeriodicEnergyHistogram) -> float:
    """Squared-difference Hellinger distance 1/2 * ||a - b||^2."""
    _check_pair(a, b)
    diff = a.values - b.values
    return 0.5 * float(diff @ diff)


def periodic_similarity(a: PeriodicEnergyHistogram, b: PeriodicEnergyHistogram) -> float:
    """Periodic similarity S = 1 - (1/2)||a - b||^2 / (||a|| ||b||)."""
    _check_pair(a, b)
    norm_a = a.norm()
    norm_b = b.norm()
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("periodic similarity undefined for a zero histogram")
    diff = a.values - b.values
    return 1.0 - 0.5 * float(diff @ diff) / (norm_a * norm_b)
