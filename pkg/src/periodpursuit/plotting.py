"""Figure rendering for the report paths (always written to files)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "save_spectrum_plot",
    "save_decomposition_plot",
    "save_sweep_plot",
]


def save_spectrum_plot(energies: np.ndarray, path, title: str = "Periodic energy spectrum") -> Path:
    """Stem plot of energy versus integer period.

    energies is period-indexed (entry 0 unused).
    """
    path = Path(path)
    periods = np.arange(1, len(energies))
    fig, ax = plt.subplots(figsize=(7, 3.2))
    ax.stem(periods, energies[1:], basefmt=" ")
    ax.set_xlabel("period")
    ax.set_ylabel("energy")
    ax.set_title(title)
    ax.margins(x=0.02)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_decomposition_plot(x: np.ndarray, residual: np.ndarray, trace, path) -> Path:
    """Input and residual waveforms plus the residual-energy trace."""
    path = Path(path)
    fig, axes = plt.subplots(3, 1, figsize=(7, 6))
    axes[0].plot(x, lw=0.8)
    axes[0].set_title("input signal")
    axes[1].plot(residual, lw=0.8, color="tab:orange")
    axes[1].set_title("residual")
    trace = np.asarray(trace, dtype=float)
    rel = trace / trace[0] if trace[0] > 0 else trace
    axes[2].semilogy(np.arange(len(rel)), np.maximum(rel, 1e-300), marker="o", ms=3)
    axes[2].set_title("relative residual energy per iteration")
    axes[2].set_xlabel("iteration")
    for ax in axes:
        ax.margins(x=0.02)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_sweep_plot(values, means, stds, xlabel: str, path) -> Path:
    """Mean periodic similarity across a sweep, with one-sigma error bars."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.errorbar(values, means, yerr=stds, marker="o", capsize=3)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("mean periodic similarity")
    ax.set_ylim(0.0, 1.05)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
