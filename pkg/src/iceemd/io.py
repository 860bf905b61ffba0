"""Signal and decomposition file formats, plus JSON run reports.

Signal CSV: `# key=value` comment lines carrying the sampling metadata,
then one amplitude per row (a two-column `t,amplitude` form is accepted
on read; t is checked for uniform spacing and dropped). Decomposition
CSV: a named column row `t,imf1..imfK,residue` after the comments.
Floats are printed with 17 significant digits so write-read is lossless.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import SignalFormatError
from .types import Decomposition, Signal

FORMAT_VERSION = "1"

_RATE_TOLERANCE = 1e-3  # relative mismatch allowed between rate and interval


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


@dataclass
class SignalFileHeader:
    """Metadata parsed from the comment lines of a signal file."""

    sample_rate_hz: float
    n_samples: int | None = None
    label: str = ""


def _parse_header(lines: list[tuple[int, str]], path: str) -> tuple[SignalFileHeader, int]:
    """Consume leading `# key=value` comments; return header and body start."""
    meta: dict[str, str] = {}
    body_start = 0
    for lineno, line in lines:
        stripped = line.strip()
        if not stripped.startswith("#"):
            break
        body_start += 1
        content = stripped.lstrip("#").strip()
        if "=" in content:
            key, _, value = content.partition("=")
            meta[key.strip()] = value.strip()

    rate = meta.get("sample_rate_hz")
    interval = meta.get("sample_interval_s")
    if rate is None and interval is None:
        raise SignalFormatError(
            f"{path}: missing sampling metadata "
            "(need a '# sample_rate_hz=...' or '# sample_interval_s=...' line)"
        )
    try:
        rate_hz = float(rate) if rate is not None else None
        interval_s = float(interval) if interval is not None else None
    except ValueError as exc:
        raise SignalFormatError(f"{path}: bad sampling metadata: {exc}") from None
    if rate_hz is not None and (not np.isfinite(rate_hz) or rate_hz <= 0):
        raise SignalFormatError(f"{path}: sample_rate_hz must be positive")
    if interval_s is not None and (not np.isfinite(interval_s) or interval_s <= 0):
        raise SignalFormatError(f"{path}: sample_interval_s must be positive")
    if rate_hz is not None and interval_s is not None:
        if abs(1.0 / rate_hz - interval_s) > _RATE_TOLERANCE * interval_s:
            raise SignalFormatError(
                f"{path}: sample_rate_hz={rate_hz} and sample_interval_s="
                f"{interval_s} contradict each other; state one of them"
            )
    if rate_hz is None:
        rate_hz = 1.0 / interval_s

    n_samples = None
    if "n_samples" in meta:
        try:
            n_samples = int(meta["n_samples"])
        except ValueError:
            raise SignalFormatError(f"{path}: n_samples must be an integer") from None
    return SignalFileHeader(rate_hz, n_samples, meta.get("label", "")), body_start


def read_signal_csv(path) -> Signal:
    """Parse a signal file; see the module docstring for the format."""
    path = str(path)
    with open(path, "r", encoding="utf-8") as fh:
        lines = [(i + 1, ln) for i, ln in enumerate(fh) if ln.strip() != ""]
    header, body_start = _parse_header(lines, path)

    amplitudes: list[float] = []
    times: list[float] = []
    n_columns = None
    for lineno, line in lines[body_start:]:
        fields = [f.strip() for f in line.strip().split(",")]
        if n_columns is None:
            if len(fields) not in (1, 2):
                raise SignalFormatError(
                    f"{path}: expected 1 or 2 columns, got {len(fields)}", line=lineno
                )
            n_columns = len(fields)
        elif len(fields) != n_columns:
            raise SignalFormatError(
                f"{path}: inconsistent column count ({len(fields)} vs {n_columns})",
                line=lineno,
            )
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise SignalFormatError(
                f"{path}: non-numeric value {line.strip()!r}", line=lineno
            ) from None
        if not all(np.isfinite(values)):
            raise SignalFormatError(f"{path}: non-finite sample", line=lineno)
        if n_columns == 2:
            times.append(values[0])
            amplitudes.append(values[1])
        else:
            amplitudes.append(values[0])

    if not amplitudes:
        raise SignalFormatError(f"{path}: no data rows")
    if header.n_samples is not None and header.n_samples != len(amplitudes):
        raise SignalFormatError(
            f"{path}: header says n_samples={header.n_samples}, file has {len(amplitudes)}"
        )
    if times:
        dt = np.diff(times)
        interval = 1.0 / header.sample_rate_hz
        if np.any(np.abs(dt - interval) > _RATE_TOLERANCE * interval):
            raise SignalFormatError(
                f"{path}: time column is not uniform at the stated interval {interval}"
            )
    return Signal(np.array(amplitudes), header.sample_rate_hz)


def write_signal_csv(signal: Signal, path, label: str = "") -> None:
    """Write a signal in the format read_signal_csv accepts."""
    with open(str(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# sample_rate_hz={_fmt(signal.sample_rate_hz)}\n")
        fh.write(f"# n_samples={len(signal)}\n")
        if label:
            fh.write(f"# label={' '.join(label.split())}\n")
        fh.write(f"# format_version={FORMAT_VERSION}\n")
        for value in signal.samples:
            fh.write(_fmt(value) + "\n")


def write_decomposition_csv(
    dec: Decomposition, path, sample_rate_hz: float, tool_version: str
) -> None:
    """Write columns t, imf1..imfK, residue with lossless float formatting."""
    n = dec.residue.size
    columns = [np.arange(n) / sample_rate_hz, *dec.imfs, dec.residue]
    names = ["t"] + [f"imf{k + 1}" for k in range(dec.n_imfs)] + ["residue"]
    with open(str(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# sample_rate_hz={_fmt(sample_rate_hz)}\n")
        fh.write(f"# tool_version={tool_version}\n")
        fh.write(f"# format_version={FORMAT_VERSION}\n")
        fh.write(",".join(names) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def read_decomposition_csv(path) -> tuple[Decomposition, float]:
    """Read a decomposition file back; returns (decomposition, sample_rate_hz)."""
    path = str(path)
    with open(path, "r", encoding="utf-8") as fh:
        lines = [(i + 1, ln) for i, ln in enumerate(fh) if ln.strip() != ""]
    meta: dict[str, str] = {}
    body = 0
    for lineno, line in lines:
        stripped = line.strip()
        if not stripped.startswith("#"):
            break
        body += 1
        content = stripped.lstrip("#").strip()
        if "=" in content:
            key, _, value = content.partition("=")
            meta[key.strip()] = value.strip()
    try:
        rate = float(meta["sample_rate_hz"])
    except (KeyError, ValueError):
        raise SignalFormatError(f"{path}: missing or bad '# sample_rate_hz='") from None
    if body >= len(lines):
        raise SignalFormatError(f"{path}: missing column header row")
    header_lineno, header_line = lines[body]
    names = [c.strip() for c in header_line.strip().split(",")]
    expected = ["t"] + [f"imf{i}" for i in range(1, len(names) - 1)] + ["residue"]
    if names != expected:
        raise SignalFormatError(
            f"{path}: expected columns {expected}, got {names}", line=header_lineno
        )
    rows = []
    for lineno, line in lines[body + 1:]:
        fields = line.strip().split(",")
        if len(fields) != len(names):
            raise SignalFormatError(
                f"{path}: expected {len(names)} columns, got {len(fields)}", line=lineno
            )
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise SignalFormatError(
                f"{path}: non-numeric value {line.strip()!r}", line=lineno
            ) from None
    if not rows:
        raise SignalFormatError(f"{path}: no data rows")
    data = np.array(rows)
    imfs = [data[:, k].copy() for k in range(1, len(names) - 1)]
    residue = data[:, -1].copy()
    return Decomposition(imfs=imfs, residue=residue, source_length=residue.size), rate


def write_report(report: dict, path) -> None:
    """Serialize a run report with stable key order and lossless floats."""
    with open(str(path), "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def read_report(path) -> dict:
    with open(str(path), "r", encoding="utf-8") as fh:
        return json.load(fh)
