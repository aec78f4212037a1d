# %% [markdown]
# # Extremal Lambda functions of BMS(c)
#
# For every z, `lambda_bar` is the largest and `lambda_under` the smallest
# Lambda over all channels of capacity c. `lambda_star` is the chord-based
# least degraded channel, and `lambda_envelope` the exact concave majorant
# of `lambda_bar` (they coincide for c up to about 0.5666).

# %%
import numpy as np

from bmsorder import (ExtremalProfile, envelope_tangent, lambda_bar, lambda_envelope,
                      lambda_star, lambda_under)

c = 0.5
p = ExtremalProfile.for_capacity(c)
print(f"c={c}: eps_bsc={p.eps_bsc:.6f}  z_bsc={p.z_bsc:.6f}  1-2eps={p.x_bsc:.6f}")

z = np.linspace(0.0, 1.0, 501)
curves = {"lambda_bar": lambda_bar(p, z), "lambda_star": lambda_star(p, z),
          "lambda_under": lambda_under(p, z)}
for zz in (0.0, 0.25, p.z_bsc, 0.6, p.x_bsc, 0.9):
    print(f"z={zz:.3f}  " + "  ".join(f"{k}={float(f(p, zz)):.5f}" for k, f in
                                       (("bar", lambda_bar), ("star", lambda_star), ("under", lambda_under))))

# %% [markdown]
# Above c ~ 0.5666 the chord drops below `lambda_bar` near 1 - 2 eps_bsc.

# %%
q = ExtremalProfile.for_capacity(0.9)
zz = np.linspace(0.0, 1.0, 20001)
print("c=0.9: min(lambda_star - lambda_bar) =", (lambda_star(q, zz) - lambda_bar(q, zz)).min())
print("c=0.9: envelope tangent point       =", envelope_tangent(q))

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
    axes[0].plot(z, curves["lambda_bar"], "--", label="lambda_bar")
    axes[0].plot(z, curves["lambda_under"], label="lambda_under")
    axes[1].plot(z, curves["lambda_star"], "--", label="lambda_star")
    axes[1].plot(z, curves["lambda_under"], label="lambda_under")
    for ax in axes:
        ax.set_xlabel("z")
        ax.legend()
    fig.savefig("extremal_lambdas.png", dpi=120, bbox_inches="tight")
