# %% [markdown]
# Mean square width of the tetrahedron from one symmetry cell
#
# Six quadratic forms compete for the squared width. On the cell
# 0 <= theta <= pi/3, phi_b(theta) <= phi <= pi only the first one is
# active, its phi-integral has a closed form, and 24 copies of the cell
# cover the sphere.

# %%
import math

import numpy as np

from widthlab.tetra_analytic import (
    active_term,
    g_terms_at,
    mean_square_width_analytic,
    phi_boundary,
    region_map,
)

print("phi_b(0)    =", phi_boundary(0.0))
print("phi_b(pi/3) =", phi_boundary(math.pi / 3))
t = math.pi / 6
print("active term inside the cell:", active_term(t, 3.0))
print("terms on the boundary:", np.round(g_terms_at(t, phi_boundary(t)), 12))

# %%
rep = mean_square_width_analytic()
for key, value in rep.as_dict().items():
    print(f"{key:22s} {value}")

# %% [markdown]
# The same grid as the surface/contour pictures: which term is active where.

# %%
theta, phi, surface, active = region_map(73, 37)
print("cells per active term:", {int(k): int((active == k).sum()) for k in np.unique(active)})
print("width range on the grid:", surface.min(), surface.max())
