"""Core data containers: sampled signals and their decompositions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSignalError


def as_float_array(samples) -> np.ndarray:
    """Coerce to a 1-D float64 array, rejecting non-finite values."""
    arr = np.asarray(samples, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidSignalError(f"expected a 1-D sequence, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidSignalError("samples contain NaN or Inf")
    return arr


@dataclass(frozen=True)
class Signal:
    """Uniformly sampled real-valued time series.

    Parameters
    ----------
    samples : array_like
        Real amplitudes, finite, 1-D.
    sample_rate_hz : float
        Sampling rate in Hz, > 0.
    """

    samples: np.ndarray
    sample_rate_hz: float

    def __post_init__(self):
        object.__setattr__(self, "samples", as_float_array(self.samples))
        if not (np.isfinite(self.sample_rate_hz) and self.sample_rate_hz > 0):
            raise InvalidSignalError(
                f"sample_rate_hz must be positive, got {self.sample_rate_hz}"
            )

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate_hz

    def times(self) -> np.ndarray:
        """Sample instants t_i = i / fs."""
        return np.arange(self.samples.size) / self.sample_rate_hz

    def with_samples(self, samples) -> "Signal":
        """Same sample rate, new amplitudes."""
        return Signal(samples, self.sample_rate_hz)


@dataclass
class Decomposition:
    """Ordered intrinsic mode functions plus the final residue.

    The elementwise sum of ``imfs`` and ``residue`` reconstructs the
    decomposed signal (telescoping identity of the extraction loop).
    """

    imfs: list[np.ndarray]
    residue: np.ndarray
    source_length: int

    @property
    def n_imfs(self) -> int:
        return len(self.imfs)

    def reconstruct(self) -> np.ndarray:
        """Elementwise sum of all IMFs and the residue."""
        total = self.residue.copy()
        for imf in self.imfs:
            total += imf
        return total
