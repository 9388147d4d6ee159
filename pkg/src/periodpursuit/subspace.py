"""Exactly periodic subspaces and orthogonal projections into them.

For a period q, the q x q integer circulant matrix B_q with first column
c_q(0..q-1) spans the exactly q-periodic subspace S_q of R^q, and
P_q = B_q / q is the orthogonal projector onto it.  S_q has dimension
phi(q) = trace(P_q).

A signal of length N = q*M is projected into S_q without ever forming the
N x N projector: average the M length-q blocks, project the mean with
P_q, and tile the result M times.  When q does not divide N the signal is
zero-padded to the next multiple of q and each phase position is averaged
over the samples actually present (weight 1/M for the first q - pad
positions, 1/(M-1) for the padded tail), after which projection and
tiling proceed the same way; the tiled output is truncated back to N.

The plain q-periodic subspace (all q-periodic signals, no exactness
constraint) is handled by the same phase averaging without the projector
step; it is the orthogonal direct sum of S_d over the divisors d of q.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .number_theory import euler_totient, ramanujan_sums

__all__ = [
    "MAX_BASIS_PERIOD",
    "RamanujanBasis",
    "PeriodicComponent",
    "as_signal",
    "build_basis",
    "project_exact",
    "project_periodic",
]

# Cap on materialized q x q bases; projections themselves never build them.
MAX_BASIS_PERIOD = 4096

# Direct circulant multiply below this size, FFT circular convolution above.
_DIRECT_APPLY_MAX = 256


def as_signal(x) -> np.ndarray:
    """Validate and return a signal as a float64 1-D array.

    Requires at least one sample and all values finite.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        arr = np.atleast_1d(np.squeeze(arr))
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("signal must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError("signal contains NaN or Inf")
    return arr


@dataclass(frozen=True)
class RamanujanBasis:
    """Period-q bundle: sums c_q, circulant B_q, projector P_q = B_q / q."""

    period: int
    sums: np.ndarray
    circulant: np.ndarray
    projector: np.ndarray
    dimension: int


@dataclass
class PeriodicComponent:
    """One exactly q-periodic component extracted from a signal.

    iteration is the 1-based pursuit iteration that produced it; 0 marks a
    standalone projection.
    """

    period: int
    samples: np.ndarray
    energy: float
    metric: float
    iteration: int = 0


def build_basis(q: int, max_period: int = MAX_BASIS_PERIOD) -> RamanujanBasis:
    """Materialize B_q and P_q for diagnostics and small-q work.

    B_q[i, j] = c_q((i - j) mod q).  Rejects q = 0 and q > max_period
    (the matrices are dense q x q).
    """
    q = int(q)
    if q < 1:
        raise ValueError("period must be >= 1")
    if q > max_period:
        raise ValueError(f"period {q} exceeds basis cap {max_period}")
    c = ramanujan_sums(q)
    idx = (np.arange(q)[:, None] - np.arange(q)[None, :]) % q
    circulant = c[idx]
    projector = circulant / q
    return RamanujanBasis(
        period=q,
        sums=c,
        circulant=circulant,
        projector=projector,
        dimension=euler_totient(q),
    )


def _phase_means(x: np.ndarray, q: int) -> tuple[np.ndarray, int]:
    """Mean of the length-q blocks of x, averaging only real samples.

    Returns (s, M) with M = ceil(N / q).  Positions fed by the zero pad
    are divided by M - 1 instead of M.
    """
    n = x.size
    m = -(-n // q)
    pad = q * m - n
    if pad:
        xp = np.concatenate([x, np.zeros(pad)])
    else:
        xp = x
    sums = xp.reshape(m, q).sum(axis=0)
    if pad:
        counts = np.full(q, float(m))
        counts[q - pad:] = m - 1
        return sums / counts, m
    return sums / m, m


def _apply_projector(s: np.ndarray, q: int) -> np.ndarray:
    """P_q @ s via circular convolution with c_q (B_q is circulant)."""
    c = ramanujan_sums(q).astype(np.float64)
    if q <= _DIRECT_APPLY_MAX:
        idx = (np.arange(q)[:, None] - np.arange(q)[None, :]) % q
        return (c[idx] @ s) / q
    return np.fft.irfft(np.fft.rfft(s) * np.fft.rfft(c), q) / q


def _check_period(q: int, n: int) -> int:
    q = int(q)
    if q < 1:
        raise ValueError("period must be >= 1")
    if q > n:
        raise ValueError(f"period {q} exceeds signal length {n}: no full period available")
    return q


def project_exact(x, q: int) -> PeriodicComponent:
    """Project x into the exactly q-periodic subspace S_q.

    The component's metric field carries the periodicity score
    (N + q) / (2q) * energy used to rank candidate periods.
    """
    x = as_signal(x)
    n = x.size
    q = _check_period(q, n)
    s, m = _phase_means(x, q)
    block = _apply_projector(s, q)
    samples = np.tile(block, m)[:n]
    energy = float(samples @ samples)
    metric = (n + q) / (2.0 * q) * energy
    return PeriodicComponent(period=q, samples=samples, energy=energy, metric=metric)


def project_periodic(x, q: int) -> PeriodicComponent:
    """Project x into the q-periodic subspace P_q (phase averaging only)."""
    x = as_signal(x)
    n = x.size
    q = _check_period(q, n)
    s, m = _phase_means(x, q)
    samples = np.tile(s, m)[:n]
    energy = float(samples @ samples)
    metric = (n + q) / (2.0 * q) * energy
    return PeriodicComponent(period=q, samples=samples, energy=energy, metric=metric)
