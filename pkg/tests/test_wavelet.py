import math

import numpy as np
import pytest

from iceemd import (
    DenoiseConfig,
    InvalidConfigError,
    dwt,
    idwt,
    soft_threshold,
    universal_threshold,
    wavelet_denoise,
    wavelet_spec,
)
from iceemd.wavelet import EXTENSION_MODES, SUPPORTED_WAVELETS


class TestFilters:
    @pytest.mark.parametrize("name", SUPPORTED_WAVELETS)
    def test_orthonormality(self, name):
        h = wavelet_spec(name).rec_lo
        L = h.size
        assert h.sum() == pytest.approx(math.sqrt(2), abs=1e-12)
        assert np.dot(h, h) == pytest.approx(1.0, abs=1e-12)
        for m in range(1, L // 2):
            assert np.dot(h[: L - 2 * m], h[2 * m:]) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("name", SUPPORTED_WAVELETS)
    def test_highpass_annihilates_constants(self, name):
        spec = wavelet_spec(name)
        assert spec.dec_hi.sum() == pytest.approx(0.0, abs=1e-12)

    def test_unknown_name(self):
        with pytest.raises(InvalidConfigError):
            wavelet_spec("haar9")


class TestDwtIdwt:
    @pytest.mark.parametrize("name", ["db2", "db4", "db8", "sym4", "sym8"])
    @pytest.mark.parametrize("mode", EXTENSION_MODES)
    @pytest.mark.parametrize("n", [64, 100, 101, 257])
    def test_round_trip(self, name, mode, n):
        rng = np.random.default_rng(42)
        x = rng.standard_normal(n)
        cfg = DenoiseConfig(wavelet=name, levels=2, extension_mode=mode)
        rec = idwt(dwt(x, cfg), cfg)
        assert rec.size == n
        assert np.abs(rec - x).max() <= 1e-10 * np.abs(x).max()

    def test_impulse_matches_convolution(self):
        # one level of analysis must equal extend-convolve-downsample
        x = np.zeros(64)
        x[0] = 1.0
        cfg = DenoiseConfig(wavelet="db4", levels=1, extension_mode="periodic")
        coeffs = dwt(x, cfg)
        spec = wavelet_spec("db4")
        L = spec.length
        ext = np.concatenate([x[-(L - 1):], x, x[: L - 1]])
        ref_lo = np.convolve(ext, spec.dec_lo, mode="valid")[::2][:32]
        ref_hi = np.convolve(ext, spec.dec_hi, mode="valid")[::2][:32]
        assert np.allclose(coeffs.approximation, ref_lo, atol=1e-14)
        assert np.allclose(coeffs.details[0], ref_hi, atol=1e-14)

    @pytest.mark.parametrize("name", ["db2", "db4", "sym4"])
    def test_constant_signal_details_vanish(self, name):
        x = np.full(128, 3.25)
        coeffs = dwt(x, DenoiseConfig(wavelet=name, levels=3))
        for d in coeffs.details:
            assert np.abs(d).max() < 1e-10

    def test_periodic_subband_counts_halve(self):
        x = np.random.default_rng(0).standard_normal(101)
        coeffs = dwt(x, DenoiseConfig(levels=3, extension_mode="periodic"))
        assert coeffs.details[0].size == 51   # ceil(101/2)
        assert coeffs.details[1].size == 26   # ceil(51/2)
        assert coeffs.details[2].size == 13
        assert coeffs.approximation.size == 13

    def test_too_short_for_levels(self):
        with pytest.raises(InvalidConfigError):
            dwt(np.zeros(60), DenoiseConfig(levels=4))

    def test_energy_preserved_periodic(self):
        # orthonormal transform: coefficient energy equals signal energy
        rng = np.random.default_rng(3)
        x = rng.standard_normal(128)
        coeffs = dwt(x, DenoiseConfig(levels=4, extension_mode="periodic"))
        total = np.dot(coeffs.approximation, coeffs.approximation)
        total += sum(np.dot(d, d) for d in coeffs.details)
        assert total == pytest.approx(np.dot(x, x), rel=1e-12)


class TestThresholds:
    def test_universal_zero_sigma(self):
        assert universal_threshold(0.0, 1024) == 0.0

    def test_universal_n_one(self):
        assert universal_threshold(1.0, 1) == 0.0

    def test_universal_frozen_value(self):
        expected = 0.1 * math.sqrt(2.0 * math.log(1024))
        assert expected == pytest.approx(0.3723297, abs=1e-7)
        assert universal_threshold(0.1, 1024) == pytest.approx(expected, abs=1e-15)

    def test_universal_monotone(self):
        prev = 0.0
        for n in (2, 8, 64, 1024):
            lam = universal_threshold(1.0, n)
            assert lam >= prev
            prev = lam
        assert universal_threshold(2.0, 64) > universal_threshold(1.0, 64)

    def test_soft_threshold_rule(self):
        assert soft_threshold([5.0], 2.0)[0] == 3.0
        assert soft_threshold([-1.0], 2.0)[0] == 0.0
        assert soft_threshold([-5.0], 2.0)[0] == -3.0

    def test_soft_threshold_exhaustive_grid(self):
        ws = np.array([-7.5, -3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0, 7.5])
        for lam in (0.0, 0.5, 1.0, 3.0):
            out = soft_threshold(ws, lam)
            for w, o in zip(ws, out):
                expected = math.copysign(abs(w) - lam, w) if abs(w) > lam else 0.0
                assert o == pytest.approx(expected, abs=1e-15)
            # ties map exactly to zero
            assert soft_threshold([lam, -lam], lam).tolist() == [0.0, 0.0]

    def test_shrinkage_law_elementwise(self):
        rng = np.random.default_rng(1)
        w = rng.standard_normal(200)
        lam = 0.7
        out = soft_threshold(w, lam)
        assert np.all(np.abs(out) <= np.maximum(np.abs(w) - lam, 0.0) + 1e-15)
        assert np.all(np.sign(out[out != 0]) == np.sign(w[out != 0]))

    def test_negative_lambda_rejected(self):
        with pytest.raises(InvalidConfigError):
            soft_threshold([1.0], -0.1)


class TestDenoise:
    def test_zero_signal_fixed_point(self):
        out = wavelet_denoise(np.zeros(256))
        assert np.array_equal(out, np.zeros(256))

    def test_noisy_sine_improves_snr(self):
        rng = np.random.default_rng(8)
        t = np.arange(1000) / 1000.0
        clean = np.sin(2 * np.pi * 20 * t)
        noise = rng.standard_normal(1000)
        noise *= math.sqrt(np.dot(clean, clean) / 10**0.5 / np.dot(noise, noise))
        noisy = clean + noise
        for estimator in ("signal_std", "mad_finest"):
            out = wavelet_denoise(noisy, DenoiseConfig(sigma_estimator=estimator))
            err = out - clean
            snr_db = 10 * math.log10(np.dot(clean, clean) / np.dot(err, err))
            assert snr_db > 5.0

    def test_noiseless_sine_nearly_unchanged_with_mad(self):
        t = np.arange(1000) / 1000.0
        clean = np.sin(2 * np.pi * 20 * t)
        out = wavelet_denoise(clean, DenoiseConfig(sigma_estimator="mad_finest"))
        assert np.abs(out - clean).max() < 0.15

    def test_energy_never_grows_periodic(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            x = rng.standard_normal(128)
            out = wavelet_denoise(x, DenoiseConfig(extension_mode="periodic"))
            assert np.dot(out, out) <= np.dot(x, x) * (1 + 1e-12)

    def test_threshold_levels_subset(self):
        rng = np.random.default_rng(5)
        x = rng.standard_normal(256)
        all_levels = wavelet_denoise(x, DenoiseConfig(levels=3))
        only_finest = wavelet_denoise(x, DenoiseConfig(levels=3, threshold_levels=(1,)))
        assert not np.allclose(all_levels, only_finest)
        # untouched levels mean the output stays closer to the input
        assert np.dot(x - only_finest, x - only_finest) <= np.dot(
            x - all_levels, x - all_levels
        )

    def test_determinism(self):
        x = np.random.default_rng(6).standard_normal(256)
        assert np.array_equal(wavelet_denoise(x), wavelet_denoise(x))

    def test_config_validation(self):
        with pytest.raises(InvalidConfigError):
            DenoiseConfig(wavelet="nope")
        with pytest.raises(InvalidConfigError):
            DenoiseConfig(levels=0)
        with pytest.raises(InvalidConfigError):
            DenoiseConfig(sigma_estimator="mad")
        with pytest.raises(InvalidConfigError):
            DenoiseConfig(extension_mode="zero")
