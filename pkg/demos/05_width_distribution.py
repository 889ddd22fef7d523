# %% [markdown]
# The distribution of the width
#
# The density of the width has no closed form, so it is estimated: a
# histogram and an empirical CDF of seeded samples, bracketed by the exact
# minimum width and the diameter.

# %%
import numpy as np

from widthlab import ecdf, histogram_density, make_body, sample_widths, width_extremes

P = make_body("tetra")
ex = width_extremes(P)
print(f"minimum width {ex.min_width:.12f} along {np.round(ex.min_direction.as_array(), 6)}")
print(f"diameter      {ex.diameter:.12f}")

# %%
S = sample_widths(P, 500_000, seed=5)
H = histogram_density(S, 40, (ex.min_width, ex.diameter))
print("mass:", H.masses.sum(), "overflow:", H.overflow)
peak = np.argmax(H.density)
print(f"mode near {0.5 * (H.bin_edges[peak] + H.bin_edges[peak + 1]):.4f}")

# a text histogram is enough to see the shape
for left, d in zip(H.bin_edges[:-1:2], H.density[::2]):
    print(f"{left:.3f} {'#' * int(d * 4)}")

# %%
F = ecdf(S)
for q in (0.05, 0.5, 0.95):
    print(f"quantile {q:.2f}: {F.quantile(q):.5f}")
print("sample mean", S.samples.mean(), "sample mean square", (S.samples**2).mean())
