# %% [markdown]
# Width moments by quadrature on the sphere
#
# A product rule: periodic trapezoid in the azimuth, Gauss-Legendre in
# cos(polar angle). The width has ridges where the maximizing vertex pair
# switches, so convergence is algebraic. The reported error is the change
# from the half-resolution grid.

# %%
from widthlab import CanonicalBodyId, build_grid, make_body, moment_quadrature, reference_moment

for n_theta in (64, 128, 256, 512, 1024):
    grid = build_grid(3, n_theta, n_theta // 2)
    est = moment_quadrature(make_body("tetra"), 2, grid)
    ref = reference_moment("tetra", 2).value
    print(f"n_theta={n_theta:5d}  E[w^2]={est.value:.12f}  err={abs(est.value - ref):.2e}  "
          f"estimate={est.error_estimate:.2e}")

# %% All eight constants on moderately fine grids.
grids = {2: build_grid(2, 16384), 3: build_grid(3, 1024, 512)}
for body in CanonicalBodyId:
    P = make_body(body)
    for k in (1, 2):
        est = moment_quadrature(P, k, grids[P.dimension])
        ref = reference_moment(body, k).value
        print(f"{body.value:12s} k={k}  {est.value:.10f}  rel err {abs(est.value - ref) / ref:.1e}")

# %% Higher moments have no tabulated form but are just as easy.
print("cube E[w^4] ~", moment_quadrature(make_body("cube"), 4, grids[3]).value)
