# %% [markdown]
# Width of a polytope in one direction
#
# The width along a unit vector u is the gap between the two supporting
# planes orthogonal to u: h(u) + h(-u), with h the largest vertex projection.
# widthlab offers two more ways to get the same number, handy as cross-checks.

# %%
import math

import numpy as np

from widthlab import Polytope, UnitDirection, ball_union_chord, g_max, make_body, width

cube = make_body("cube")
print(cube)
print(cube.vertices)

# %% Widths are reported for the unit-edge body (raw width / edge_norm).
for vec in [(1, 0, 0), (1, 1, 0), (1, 1, 1)]:
    u = UnitDirection.from_vector(vec)
    ev = width(cube, u)
    print(f"u ~ {vec}: width {ev.width:.15f}  raw {ev.raw_width:.6f}  pair {ev.achieving_pair}")

# %% [markdown]
# The largest squared projection of a vertex difference gives the raw width
# squared, and so does the chord cut by the line t*u through the balls whose
# diameters join the origin to each vertex.

# %%
u = UnitDirection.from_angles(0.7, 1.1)
raw = width(cube, u).raw_width
print("support:", raw)
print("g_max:  ", math.sqrt(g_max(cube, u)[0]))
print("chord:  ", ball_union_chord(cube, u))

# %% Any point cloud works; interior points and duplicates do not matter.
rng = np.random.default_rng(0)
blob = Polytope(np.vstack([rng.normal(size=(12, 3)), np.zeros((1, 3))]), name="blob")
u = UnitDirection.from_vector(rng.normal(size=3))
print(blob, width(blob, u).width, ball_union_chord(blob, u), math.sqrt(g_max(blob, u)[0]))
