#!/usr/bin/env python3
"""Rank intrinsic mode functions by approximate entropy.

Noise-dominated modes are irregular (entropy well above 1 on this
scale); tone-carrying modes are regular (well below 1). The default gate
threshold of 0.9 sits in the gap, so only the noisy modes get denoised.
"""
import numpy as np

from iceemd import (
    DEFAULT_APEN_THRESHOLD,
    ApEnConfig,
    EnsembleConfig,
    add_noise_snr,
    apen_per_imf,
    approximate_entropy,
    dominant_frequency,
    iceemd,
    synth_signal,
)

fs = 1000.0
clean = synth_signal()
cfg = ApEnConfig()

print(f"gate threshold: {DEFAULT_APEN_THRESHOLD}")
print(f"white noise entropy (n=1000): "
      f"{approximate_entropy(np.random.default_rng(0).standard_normal(1000), cfg):.3f}")

for label, signal, seed in (
    ("clean benchmark", clean, 0),
    ("benchmark + 5 dB noise", add_noise_snr(clean, 5.0, seed=1), 100),
):
    dec = iceemd(signal, EnsembleConfig(seed=seed))
    rep = apen_per_imf(dec, cfg, threshold=DEFAULT_APEN_THRESHOLD)
    print(f"\n-- {label} --")
    for k, value in rep.per_imf:
        flag = "DENOISE" if k in rep.flagged else ""
        print(
            f"  IMF{k + 1}: apen {value:5.3f}  dominant "
            f"{dominant_frequency(dec.imfs[k], fs):6.1f} Hz  {flag}"
        )
