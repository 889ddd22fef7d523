# %% [markdown]
# The four canonical bodies and their closed-form moments
#
# Each body sits in a convenient raw frame and carries its raw edge length,
# so every width refers to edge length one.

# %%
from widthlab import CanonicalBodyId, diameter, make_body, reference_moment
from widthlab.bodies import perimeter

for body in CanonicalBodyId:
    P = make_body(body)
    m1, m2 = reference_moment(body, 1), reference_moment(body, 2)
    print(f"{body.value:12s} n={len(P)}  diameter={diameter(P):.6f}")
    print(f"    E[w]   = {m1.formula_tag:32s} = {m1.value:.12f}")
    print(f"    E[w^2] = {m2.formula_tag:32s} = {m2.value:.12f}")

# %% [markdown]
# For planar bodies the mean width is the perimeter over pi (Cauchy).

# %%
for name in ("triangle", "square"):
    print(name, perimeter(name) / 3.141592653589793, reference_moment(name, 1).value)

# %% The square and cube maxima reduce to a few terms.
import numpy as np

from widthlab import DirectionStream
from widthlab.bodies import cube_g_reduced, cube_g_terms, square_g_reduced, square_g_terms

U2 = DirectionStream(2, 1).block(0, 10_000)
U3 = DirectionStream(3, 1).block(0, 10_000)
print("square 4 vs 2 terms:", np.abs(square_g_terms(*U2.T).max(0) - square_g_reduced(*U2.T).max(0)).max())
print("cube 13 vs 4 terms: ", np.abs(cube_g_terms(*U3.T).max(0) - cube_g_reduced(*U3.T).max(0)).max())
