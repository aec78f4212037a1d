# %% [markdown]
# # Discrete BMS channels and the degradation order
#
# A discrete BMS channel is a list of point masses on [0, 1] in the |D|
# domain. Capacity, Bhattacharyya parameter and error probability are
# all linear in the masses.

# %%
from bmsorder import (bec, bhattacharyya, bsc, capacity, compare, entropy_from_lambda,
                      error_probability, lambda_profile, new_channel)

channels = {
    "BSC(0.11)": bsc(0.11),
    "BEC(0.5)": bec(0.5),
    "BSC(0.5)": bsc(0.5),
    "mixed": new_channel([(0.3, 0.2), (0.7, 0.9)]),
}
for name, ch in channels.items():
    print(f"{name:10s} C={capacity(ch):.4f}  B={bhattacharyya(ch):.4f}  Pe={error_probability(ch):.4f}")

# %% [markdown]
# Lambda(z) = sum alpha_i (1 - max(z, x_i)) is piecewise linear. One channel
# is degraded w.r.t. another exactly when its Lambda lies above everywhere.

# %%
pl = lambda_profile(channels["mixed"])
print("breaks:", pl.breaks, "values:", pl.values)
print("entropy via Lambda integral:", entropy_from_lambda(pl))

for a in channels:
    for b in channels:
        if a < b:
            print(f"{a} vs {b}: {compare(lambda_profile(channels[a]), lambda_profile(channels[b])).value}")
