"""Improved complete ensemble EMD.

The residue recursion: at every stage a mode-filtered copy of the noise
bank is added to the current residue, the ensemble-averaged local mean
becomes the next residue, and the stage's IMF is the difference. One mode
set for the whole ensemble, exact additive reconstruction by telescoping.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .emd import SiftConfig, _decomposable, emd, local_mean_operator
from .errors import InvalidSignalError
from .types import Decomposition, Signal, as_float_array


@dataclass(frozen=True)
class EnsembleConfig:
    """Ensemble decomposition parameters.

    epsilon0 scales the injected noise relative to the running residue's
    standard deviation. With first_stage_raw_noise the first stage adds the
    white noise itself instead of its (unit-std normalized) first mode.
    """

    ensemble_size: int = 50
    epsilon0: float = 0.2
    seed: int = 0
    max_modes: int = 12
    sift: SiftConfig = field(default_factory=SiftConfig)
    first_stage_raw_noise: bool = False

    def __post_init__(self):
        if self.ensemble_size < 1:
            raise ValueError(f"ensemble_size must be >= 1, got {self.ensemble_size}")
        if self.epsilon0 <= 0:
            raise ValueError(f"epsilon0 must be > 0, got {self.epsilon0}")
        if self.max_modes < 1:
            raise ValueError(f"max_modes must be >= 1, got {self.max_modes}")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass
class NoiseBank:
    """Seeded white-noise realizations and their cached EMD modes.

    Realization i is derived from (seed, i) alone, so the same index gives
    the same sequence for any ensemble size. Each realization is
    standardized to exact zero mean and unit population std.
    """

    realizations: list[np.ndarray]
    cached_modes: list[list[np.ndarray]]
    seed: int

    def mode(self, i: int, k: int) -> np.ndarray:
        """E_k of realization i; zeros when fewer than k modes exist."""
        modes = self.cached_modes[i]
        if k <= len(modes):
            return modes[k - 1]
        return np.zeros_like(self.realizations[i])


def _realization(n: int, seed: int, index: int) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
    w = rng.standard_normal(n)
    w -= w.mean()
    w /= w.std()
    return w


def generate_noise_bank(n: int, cfg: EnsembleConfig) -> NoiseBank:
    """Generate cfg.ensemble_size standardized noise realizations of length n
    and cache their EMD modes up to cfg.max_modes."""
    if n < 4:
        raise InvalidSignalError(f"noise bank needs n >= 4, got {n}")
    realizations = [_realization(n, cfg.seed, i) for i in range(cfg.ensemble_size)]
    cached = [
        emd(Signal(w, sample_rate_hz=1.0), cfg.sift, max_modes=cfg.max_modes).imfs
        for w in realizations
    ]
    return NoiseBank(realizations=realizations, cached_modes=cached, seed=cfg.seed)


def _ensemble_mean_local_mean(
    base: np.ndarray, scaled_noise: list[np.ndarray], cfg: EnsembleConfig
) -> np.ndarray:
    """Average of M(base + noise_i) over the ensemble.

    Kahan-compensated summation in fixed index order, so the result does
    not depend on any execution schedule.
    """
    acc = np.zeros_like(base)
    comp = np.zeros_like(base)
    for noise in scaled_noise:
        term = local_mean_operator(base + noise, cfg.sift)
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return acc / len(scaled_noise)


def iceemd(signal: Signal, cfg: EnsembleConfig = EnsembleConfig()) -> Decomposition:
    """Improved complete ensemble EMD of `signal`.

    Stage 1 perturbs the signal with the (unit-std) first noise mode scaled
    by epsilon0 * std(signal); stage k >= 2 perturbs the running residue
    with its k-th noise mode scaled by epsilon0 * std(residue). Each stage's
    residue is the ensemble-averaged local mean; IMFs are the successive
    residue differences, so the IMFs plus the final residue reproduce the
    input exactly.
    """
    x = as_float_array(signal.samples)
    if x.size < 4:
        raise InvalidSignalError(f"signal too short to decompose ({x.size} samples)")

    imfs: list[np.ndarray] = []
    residue = x.copy()
    if not _decomposable(residue):
        return Decomposition(imfs=imfs, residue=residue, source_length=x.size)

    bank = generate_noise_bank(x.size, cfg)
    for k in range(1, cfg.max_modes + 1):
        beta = cfg.epsilon0 * float(residue.std())
        if k == 1 and not cfg.first_stage_raw_noise:
            scaled = []
            for i in range(cfg.ensemble_size):
                e1 = bank.mode(i, 1)
                sd = float(e1.std())
                scaled.append(beta * e1 / sd if sd > 0 else np.zeros_like(e1))
        elif k == 1:
            scaled = [beta * w for w in bank.realizations]
        else:
            scaled = [beta * bank.mode(i, k) for i in range(cfg.ensemble_size)]
        next_residue = _ensemble_mean_local_mean(residue, scaled, cfg)
        imfs.append(residue - next_residue)
        residue = next_residue
        if not _decomposable(residue):
            break
    return Decomposition(imfs=imfs, residue=residue, source_length=x.size)
