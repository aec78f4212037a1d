# %% [markdown]
# # Capacity gaps of the extremal channels
#
# d_gap = c - C(least degraded), u_gap = C(least upgraded) - c.

# %%
import numpy as np

from bmsorder import capacity_envelope, gap_row

print(" c    d_gap   u_gap   d_gap(exact envelope)")
for c in np.round(np.arange(0.1, 1.0, 0.1), 1):
    row = gap_row(c)
    print(f"{c:.1f}  {row.d_gap:.4f}  {row.u_gap:.4f}  {c - capacity_envelope(c):.4f}")

# %%
cs = np.round(np.arange(1, 1000) * 0.001, 3)
rows = [gap_row(c) for c in cs]
d = np.array([r.d_gap for r in rows])
u = np.array([r.u_gap for r in rows])
print(f"max d_gap {d.max():.4f} at c={cs[d.argmax()]}, max u_gap {u.max():.4f} at c={cs[u.argmax()]}")
