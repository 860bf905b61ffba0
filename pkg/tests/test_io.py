import numpy as np
import pytest

from iceemd import Decomposition, Signal, SignalFormatError, emd
from iceemd.io import (
    read_decomposition_csv,
    read_report,
    read_signal_csv,
    write_decomposition_csv,
    write_report,
    write_signal_csv,
)


def random_signal(n=100, seed=0, fs=10498.0):
    return Signal(np.random.default_rng(seed).standard_normal(n), fs)


class TestSignalCsv:
    def test_round_trip_lossless(self, tmp_path):
        sig = random_signal(n=257, fs=10498.0)
        path = tmp_path / "sig.csv"
        write_signal_csv(sig, path, label="field run")
        back = read_signal_csv(path)
        assert back.sample_rate_hz == sig.sample_rate_hz
        assert np.array_equal(back.samples, sig.samples)

    def test_field_style_header(self, tmp_path):
        path = tmp_path / "field.csv"
        values = np.random.default_rng(1).standard_normal(980)
        lines = ["# sample_rate_hz=10498"] + [f"{float(v):.17g}" for v in values]
        path.write_text("\n".join(lines) + "\n")
        sig = read_signal_csv(path)
        assert len(sig) == 980
        assert sig.sample_rate_hz == 10498.0

    def test_interval_header(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_interval_s=0.001\n0\n1\n0\n")
        sig = read_signal_csv(path)
        assert sig.sample_rate_hz == pytest.approx(1000.0)
        assert sig.samples.tolist() == [0.0, 1.0, 0.0]

    def test_contradictory_rate_and_interval(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=10498\n# sample_interval_s=4.0e-6\n0\n1\n0\n")
        with pytest.raises(SignalFormatError):
            read_signal_csv(path)

    def test_consistent_rate_and_interval(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=1000\n# sample_interval_s=0.001\n0\n1\n0\n")
        assert read_signal_csv(path).sample_rate_hz == 1000.0

    def test_missing_metadata(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("0\n1\n0\n")
        with pytest.raises(SignalFormatError):
            read_signal_csv(path)

    def test_two_column_uniform(self, tmp_path):
        path = tmp_path / "sig.csv"
        rows = "\n".join(f"{i/1000.0!r},{v}" for i, v in enumerate([0.5, 1.5, -0.5, 2.0]))
        path.write_text("# sample_rate_hz=1000\n" + rows + "\n")
        sig = read_signal_csv(path)
        assert sig.samples.tolist() == [0.5, 1.5, -0.5, 2.0]

    def test_two_column_non_uniform(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=1000\n0.000,1\n0.001,2\n0.005,3\n")
        with pytest.raises(SignalFormatError):
            read_signal_csv(path)

    def test_non_numeric_row_reports_line(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=1000\n1.0\nbogus\n2.0\n")
        with pytest.raises(SignalFormatError) as err:
            read_signal_csv(path)
        assert "line 3" in str(err.value)

    def test_n_samples_mismatch(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=1000\n# n_samples=5\n1\n2\n3\n")
        with pytest.raises(SignalFormatError):
            read_signal_csv(path)

    def test_non_finite_sample(self, tmp_path):
        path = tmp_path / "sig.csv"
        path.write_text("# sample_rate_hz=1000\n1\nnan\n3\n")
        with pytest.raises(SignalFormatError):
            read_signal_csv(path)

    def test_missing_file(self):
        with pytest.raises(OSError):
            read_signal_csv("/nonexistent/sig.csv")


class TestDecompositionCsv:
    def test_round_trip(self, tmp_path):
        sig = random_signal(n=128, seed=2, fs=1000.0)
        dec = emd(sig)
        path = tmp_path / "dec.csv"
        write_decomposition_csv(dec, path, sig.sample_rate_hz, "0.1.0")
        back, rate = read_decomposition_csv(path)
        assert rate == 1000.0
        assert back.n_imfs == dec.n_imfs
        for a, b in zip(back.imfs, dec.imfs):
            assert np.array_equal(a, b)
        assert np.array_equal(back.residue, dec.residue)

    def test_empty_imf_columns(self, tmp_path):
        dec = Decomposition(imfs=[], residue=np.linspace(0, 1, 16), source_length=16)
        path = tmp_path / "dec.csv"
        write_decomposition_csv(dec, path, 500.0, "0.1.0")
        header = [
            line
            for line in path.read_text().splitlines()
            if not line.startswith("#")
        ][0]
        assert header == "t,residue"
        back, _ = read_decomposition_csv(path)
        assert back.n_imfs == 0

    def test_many_mode_column_count(self, tmp_path):
        rng = np.random.default_rng(3)
        imfs = [rng.standard_normal(32) for _ in range(6)]
        dec = Decomposition(imfs=imfs, residue=rng.standard_normal(32), source_length=32)
        path = tmp_path / "dec.csv"
        write_decomposition_csv(dec, path, 10498.0, "0.1.0")
        header = [
            line for line in path.read_text().splitlines() if not line.startswith("#")
        ][0]
        assert header.split(",") == ["t"] + [f"imf{i}" for i in range(1, 7)] + ["residue"]

    def test_bad_header(self, tmp_path):
        path = tmp_path / "dec.csv"
        path.write_text("# sample_rate_hz=1000\nfoo,bar\n0,1\n")
        with pytest.raises(SignalFormatError):
            read_decomposition_csv(path)


class TestReport:
    def test_round_trip(self, tmp_path):
        report = {
            "config_echo": {"seed": 7, "epsilon0": 0.2},
            "apen_table": {"threshold": 0.9, "per_imf": []},
            "metrics": {"snr_db": 12.25, "rmse": 0.174},
            "artifact_paths": ["out.csv"],
            "versions": {"tool": "0.1.0"},
        }
        path = tmp_path / "report.json"
        write_report(report, path)
        assert read_report(path) == report

    def test_infinity_round_trip(self, tmp_path):
        report = {"metrics": {"snr_db": float("inf"), "rmse": 0.0}}
        path = tmp_path / "report.json"
        write_report(report, path)
        assert read_report(path)["metrics"]["snr_db"] == float("inf")
