"""Seeded generation of the test signals used across the evaluation suite.

Everything here is deterministic given its arguments: mixtures are fully
described by a serializable spec so any experiment instance can be
replayed exactly, and noise is scaled by its realized sample power so the
requested SNR holds per instance, not just in expectation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .subspace import as_signal

__all__ = [
    "MixtureComponent",
    "MixtureSpec",
    "three_cosine",
    "tile_block",
    "random_mixture",
    "add_white_noise",
]

_THREE_COSINE_PERIODS = (17, 36, 45)


def three_cosine(length: int) -> np.ndarray:
    """Sum of three unit cosines with periods 17, 36, and 45.

    Requires length >= 45 so every component fits at least one full
    period.  x[0] = 3 (all cosines at phase zero).
    """
    n = int(length)
    if n < max(_THREE_COSINE_PERIODS):
        raise ValueError(f"length must be >= {max(_THREE_COSINE_PERIODS)}")
    t = np.arange(n)
    x = np.zeros(n)
    for q in _THREE_COSINE_PERIODS:
        x += np.cos(2.0 * np.pi * t / q)
    return x


def tile_block(block, length: int) -> np.ndarray:
    """Repeat a length-q block to the requested length, truncating the tail."""
    block = np.asarray(block, dtype=np.float64)
    n = int(length)
    if n < block.size:
        raise ValueError("length must be at least one full block")
    reps = -(-n // block.size)
    return np.tile(block, reps)[:n]


@dataclass
class MixtureComponent:
    period: int
    block: np.ndarray

    def render(self, length: int) -> np.ndarray:
        return tile_block(self.block, length)


@dataclass
class MixtureSpec:
    """Replay record of a random periodic mixture."""

    components: list[MixtureComponent]
    length: int
    seed: int

    def periods(self) -> list[int]:
        return [c.period for c in self.components]

    def render(self, length: int | None = None) -> np.ndarray:
        """Re-synthesize the mixture, optionally at a different length."""
        n = self.length if length is None else int(length)
        out = np.zeros(n)
        for comp in self.components:
            out += comp.render(n)
        return out

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "seed": self.seed,
            "components": [
                {"period": c.period, "block": [float(v) for v in c.block]}
                for c in self.components
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MixtureSpec":
        components = [
            MixtureComponent(period=int(c["period"]), block=np.asarray(c["block"], dtype=np.float64))
            for c in data["components"]
        ]
        return cls(components=components, length=int(data["length"]), seed=int(data["seed"]))


def random_mixture(
    num_components: int,
    period_range: tuple[int, int],
    length: int,
    seed: int,
) -> tuple[np.ndarray, MixtureSpec]:
    """Sum of tiled random periodic blocks, fully determined by the seed.

    Periods are drawn uniformly from period_range (inclusive) and each
    block's samples are i.i.d. uniform on [-1, 1].
    """
    lo, hi = int(period_range[0]), int(period_range[1])
    n = int(length)
    if num_components < 1:
        raise ValueError("num_components must be >= 1")
    if lo < 1 or hi < lo:
        raise ValueError("period_range must satisfy 1 <= lo <= hi")
    if hi > n:
        raise ValueError(f"period_range upper bound {hi} exceeds signal length {n}")
    rng = np.random.default_rng(seed)
    components = []
    x = np.zeros(n)
    for _ in range(num_components):
        q = int(rng.integers(lo, hi + 1))
        block = rng.uniform(-1.0, 1.0, q)
        components.append(MixtureComponent(period=q, block=block))
        x += tile_block(block, n)
    return x, MixtureSpec(components=components, length=n, seed=int(seed))


def add_white_noise(x, snr_db: float | None, seed: int) -> np.ndarray:
    """Add seeded Gaussian white noise at an exact signal-to-noise ratio.

    The noise is scaled by its realized (not nominal) power so that
    10*log10(||x||^2 / ||noise||^2) equals snr_db exactly.  snr_db of
    None or +inf returns the signal unchanged.
    """
    x = as_signal(x)
    if snr_db is None or math.isinf(snr_db):
        return x.copy()
    signal_energy = float(x @ x)
    if signal_energy == 0.0:
        raise ValueError("SNR undefined for a zero signal")
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal(x.size)
    raw_energy = float(raw @ raw)
    scale = math.sqrt(signal_energy / (raw_energy * 10.0 ** (snr_db / 10.0)))
    return x + raw * scale
