"""Plain empirical mode decomposition.

Extrema detection, mirrored cubic-spline envelopes, sifting, and the two
operators the ensemble recursion is built from: the first-mode extractor
E_k and the local-mean operator M (with M(x) = x - E_1(x)).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import InvalidSignalError, NotEnoughExtremaError
from .types import Decomposition, Signal, as_float_array


@dataclass(frozen=True)
class SiftConfig:
    """Sifting parameters.

    sd_threshold is the Cauchy-style stop: sifting ends once the normalized
    squared change between successive iterates falls below it.
    boundary_extrema_count extrema are mirrored beyond each end before the
    envelope splines are fitted, to tame end swings.
    """

    sd_threshold: float = 0.2
    max_sift_iterations: int = 100
    boundary_extrema_count: int = 2

    def __post_init__(self):
        if self.sd_threshold <= 0:
            raise ValueError(f"sd_threshold must be > 0, got {self.sd_threshold}")
        if self.max_sift_iterations < 1:
            raise ValueError("max_sift_iterations must be >= 1")
        if self.boundary_extrema_count < 1:
            raise ValueError("boundary_extrema_count must be >= 1")


def find_extrema(samples) -> tuple[np.ndarray, np.ndarray]:
    """Indices of strict interior maxima and minima, ascending.

    A plateau of equal values flanked by lower (higher) neighbors counts as
    one maximum (minimum) at its middle index, left-middle for even plateau
    length. Monotone input has no interior extrema.
    """
    y = as_float_array(samples)
    if y.size < 3:
        raise InvalidSignalError(f"need at least 3 samples, got {y.size}")

    slope = np.diff(y)
    nonzero = slope != 0.0
    sgn = np.sign(slope[nonzero])
    idx = np.nonzero(nonzero)[0]
    if sgn.size < 2:
        return np.array([], dtype=int), np.array([], dtype=int)

    turn = np.diff(sgn)
    where = np.nonzero(turn)[0]
    # extremum spans from the end of the rising run to the start of the
    # falling run (indices around a possible plateau); report its middle
    left = idx[where]
    right = idx[where + 1] + 1
    pos = (left + right) // 2
    maxima = pos[turn[where] < 0]
    minima = pos[turn[where] > 0]
    return maxima, minima


def _mirrored(indices: np.ndarray, values: np.ndarray, n: int, count: int):
    """Reflect up to `count` extrema about each end of the index axis."""
    k = min(count, indices.size)
    left_x = -indices[:k][::-1]
    left_y = values[:k][::-1]
    right_x = 2 * (n - 1) - indices[-k:][::-1]
    right_y = values[-k:][::-1]
    x = np.concatenate([left_x, indices, right_x])
    y = np.concatenate([left_y, values, right_y])
    return x, y


def _envelope(x: np.ndarray, y: np.ndarray, n: int) -> np.ndarray:
    if x.size >= 3:
        return CubicSpline(x, y, bc_type="natural")(np.arange(n))
    # two knots: natural cubic degenerates to the chord
    return np.interp(np.arange(n), x, y)


def mean_envelope(samples, maxima, minima, cfg: SiftConfig = SiftConfig()) -> np.ndarray:
    """Half-sum of the upper and lower cubic-spline envelopes.

    Natural end conditions; `cfg.boundary_extrema_count` extrema are
    mirrored beyond each end before fitting so the splines never
    extrapolate over the signal support.
    """
    y = np.asarray(samples, dtype=np.float64)
    n = y.size
    maxima = np.asarray(maxima, dtype=int)
    minima = np.asarray(minima, dtype=int)
    if maxima.size < 1 or minima.size < 1:
        raise NotEnoughExtremaError(
            f"envelopes need interior maxima and minima "
            f"(got {maxima.size} maxima, {minima.size} minima)"
        )
    ux, uy = _mirrored(maxima, y[maxima], n, cfg.boundary_extrema_count)
    lx, ly = _mirrored(minima, y[minima], n, cfg.boundary_extrema_count)
    if ux.size < 2 or lx.size < 2:
        raise NotEnoughExtremaError("fewer than 2 envelope knots after mirroring")
    upper = _envelope(ux, uy, n)
    lower = _envelope(lx, ly, n)
    return (upper + lower) / 2.0


def _zero_crossings(y: np.ndarray) -> int:
    # samples at float-dust level carry no sign information
    tiny = 1e-9 * np.abs(y).max()
    s = np.sign(y[np.abs(y) > tiny])
    return int(np.sum(s[:-1] != s[1:]))


def _is_imf_like(y: np.ndarray, n_extrema: int) -> bool:
    """Extrema and zero-crossing counts differ by at most one."""
    return abs(n_extrema - _zero_crossings(y)) <= 1


def extract_imf(samples, cfg: SiftConfig = SiftConfig()) -> tuple[np.ndarray, np.ndarray]:
    """Sift one intrinsic mode function out of `samples`.

    Iterates h <- h - mean_envelope(h); stops once the normalized squared
    change sum((h_prev - h)^2) / sum(h_prev^2) drops below
    cfg.sd_threshold AND the iterate has the defining mode property
    (extrema and zero-crossing counts differing by at most one), or when
    the iteration cap is hit. Returns (imf, proto_residue) with
    proto_residue = samples - imf.

    Raises NotEnoughExtremaError if the input cannot be sifted even once.
    """
    x = as_float_array(samples)
    h = x.copy()
    for iteration in range(cfg.max_sift_iterations):
        try:
            maxima, minima = find_extrema(h)
            m = mean_envelope(h, maxima, minima, cfg)
        except NotEnoughExtremaError:
            if iteration == 0:
                raise
            break   # too smooth to sift further; accept h as the IMF
        denom = float(np.dot(h, h))
        if denom == 0.0:
            break
        h = h - m
        if float(np.dot(m, m)) / denom < cfg.sd_threshold:
            n_ext = sum(len(e) for e in find_extrema(h))
            if _is_imf_like(h, n_ext):
                break
    return h, x - h


def _is_monotone(y: np.ndarray) -> bool:
    d = np.diff(y)
    return bool(np.all(d >= 0) or np.all(d <= 0))


def _decomposable(y: np.ndarray) -> bool:
    """True if the residue still carries an extractable oscillation."""
    if y.size < 3 or _is_monotone(y):
        return False
    maxima, minima = find_extrema(y)
    return maxima.size + minima.size >= 3


def emd(signal: Signal, cfg: SiftConfig = SiftConfig(), max_modes: int = 12) -> Decomposition:
    """Empirical mode decomposition of `signal`.

    Extracts IMFs from successive residues until the residue is monotone,
    has fewer than 3 extrema, or `max_modes` is reached. The IMFs plus the
    final residue sum back to the input exactly up to float accumulation.
    """
    if max_modes < 1:
        raise ValueError(f"max_modes must be >= 1, got {max_modes}")
    x = as_float_array(signal.samples)
    if x.size < 4:
        raise InvalidSignalError(f"signal too short to decompose ({x.size} samples)")
    imfs: list[np.ndarray] = []
    residue = x.copy()
    while len(imfs) < max_modes and _decomposable(residue):
        try:
            imf, residue = extract_imf(residue, cfg)
        except NotEnoughExtremaError:
            break
        imfs.append(imf)
    return Decomposition(imfs=imfs, residue=residue, source_length=x.size)


def _emd_samples(samples, cfg: SiftConfig, max_modes: int) -> Decomposition:
    return emd(Signal(samples, sample_rate_hz=1.0), cfg, max_modes)


def mode_operator(samples, k: int, cfg: SiftConfig = SiftConfig()) -> np.ndarray:
    """E_k: the k-th EMD mode of `samples`, or zeros if fewer than k exist."""
    if k < 1:
        raise ValueError(f"mode index must be >= 1, got {k}")
    dec = _emd_samples(samples, cfg, max_modes=k)
    if dec.n_imfs >= k:
        return dec.imfs[k - 1]
    return np.zeros(np.asarray(samples).size)


def local_mean_operator(samples, cfg: SiftConfig = SiftConfig()) -> np.ndarray:
    """M: the signal minus its first EMD mode; identity when no mode exists."""
    x = as_float_array(samples)
    if not _decomposable(x):
        return x.copy()
    try:
        _, proto_residue = extract_imf(x, cfg)
    except NotEnoughExtremaError:
        return x.copy()
    return proto_residue
