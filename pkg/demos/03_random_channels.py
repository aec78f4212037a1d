# %% [markdown]
# # Random channels of capacity 0.5 sit between the extremal curves
#
# 5,000 two-mass and 5,000 three-mass channels, each of capacity exactly 0.5.

# %%
import numpy as np

from bmsorder import (ExtremalProfile, SamplerConfig, lambda_bar, lambda_eval, lambda_under,
                      sample_batch)

p = ExtremalProfile.for_capacity(0.5)
z = np.linspace(0.0, 1.0, 1001)
lo, hi = lambda_under(p, z), lambda_bar(p, z)

for n in (2, 3):
    batch = sample_batch(SamplerConfig(0.5, n, seed=42), 5000)
    lam = np.array([lambda_eval(ch, z) for ch in batch])
    print(f"{n} masses: below min {np.sum(lam < lo - 1e-9)}, above max {np.sum(lam > hi + 1e-9)}, "
          f"at z=0: max Lambda {lam[:, 0].max():.4f} (bound {hi[0]:.4f}), "
          f"min Lambda {lam[:, 0].min():.4f} (bound {lo[0]:.4f})")
