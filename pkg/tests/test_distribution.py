import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from widthlab import (
    ContractViolation,
    DirectionStream,
    Polytope,
    diameter,
    ecdf,
    histogram_density,
    make_body,
    moment_quadrature,
    build_grid,
    sample_widths,
    width,
    width_extremes,
    widths,
)
from widthlab.distribution import WidthSampleSet

from .helpers import exact_min_width

S3 = math.sqrt(3)


def synthetic(values):
    x = np.asarray(values, dtype=float)
    return WidthSampleSet("synthetic", x, None, len(x))


@pytest.fixture(scope="module")
def cube_samples():
    return sample_widths(make_body("cube"), 10**6, 3)


class TestSampling:
    def test_cube_mean(self, cube_samples):
        x = cube_samples.samples
        assert abs(x.mean() - 1.5) <= 4 * x.std(ddof=1) / math.sqrt(len(x))

    def test_single_sample(self, body):
        S = sample_widths(body, 1, 42)
        u = DirectionStream(body.dimension, 42)[0]
        assert S.samples[0] == pytest.approx(width(body, u).width, abs=1e-15)
        assert S.n == 1 and S.seed == 42

    def test_tetra_bounds(self):
        x = sample_widths(make_body("tetra"), 200_000, 8).samples
        assert x.min() >= 1 / math.sqrt(2) - 1e-9
        assert x.max() <= 1 + 1e-9

    def test_reproducible_and_thread_independent(self):
        P = make_body("tetra")
        a = sample_widths(P, 150_000, 2, threads=1).samples
        b = sample_widths(P, 150_000, 2, threads=6).samples
        np.testing.assert_array_equal(a, b)

    def test_moments_match_quadrature(self, body):
        S = sample_widths(body, 400_000, 13)
        g = build_grid(body.dimension, 512, None if body.dimension == 2 else 256)
        for k in (1, 2):
            x = S.samples**k
            q = moment_quadrature(body, k, g)
            assert abs(x.mean() - q.value) <= 4 * x.std(ddof=1) / math.sqrt(len(x)) + q.error_estimate

    def test_samples_within_support(self, body):
        S = sample_widths(body, 100_000, 1)
        ex = width_extremes(body)
        assert S.samples.min() >= ex.min_width - 1e-9
        assert S.samples.max() <= ex.diameter + 1e-9

    def test_empty(self):
        with pytest.raises(ContractViolation):
            sample_widths(make_body("cube"), 0, 1)


class TestHistogram:
    def test_single_bin(self, body):
        H = histogram_density(sample_widths(body, 1000, 0), 1)
        np.testing.assert_array_equal(H.masses, [1.0])

    def test_synthetic(self):
        H = histogram_density(synthetic([0.5, 1.5]), 2, (0, 2))
        np.testing.assert_array_equal(H.masses, [0.5, 0.5])
        np.testing.assert_array_equal(H.bin_edges, [0, 1, 2])

    def test_right_edge_inclusive(self):
        H = histogram_density(synthetic([0.0, 1.0, 2.0]), 2)
        assert H.masses.tolist() == pytest.approx([1 / 3, 2 / 3])

    def test_overflow_is_counted(self):
        H = histogram_density(synthetic([-1.0, 0.5, 1.5, 3.0]), 2, (0, 2))
        assert H.overflow == 2
        assert H.masses.sum() + H.overflow / H.n == pytest.approx(1.0)

    def test_cube_range(self, cube_samples):
        H = histogram_density(cube_samples, 200, (1.0, S3))
        assert H.overflow == 0
        assert abs(H.masses.sum() - 1) <= 1e-12
        assert np.all(H.masses >= 0)
        assert np.all(np.diff(H.bin_edges) > 0)

    def test_errors(self):
        with pytest.raises(ContractViolation):
            histogram_density(synthetic([]), 3)
        with pytest.raises(ContractViolation):
            histogram_density(synthetic([1.0]), 0)
        with pytest.raises(ContractViolation):
            histogram_density(synthetic([1.0]), 3, (2, 2))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.floats(0, 10), min_size=1, max_size=200), st.integers(1, 50))
    def test_masses_sum_to_one(self, values, bins):
        H = histogram_density(synthetic(values), bins)
        assert abs(H.masses.sum() - 1) <= 1e-12
        assert np.all(H.masses >= 0)


class TestECDF:
    def test_small(self):
        F = ecdf(synthetic([2, 1, 3]))
        np.testing.assert_array_equal(F.x, [1, 2, 3])
        np.testing.assert_allclose(F.y, [1 / 3, 2 / 3, 1])
        assert F(0.5) == 0 and F(1) == pytest.approx(1 / 3) and F(3) == 1

    def test_cube_lower_tail(self, cube_samples):
        F = ecdf(cube_samples)
        assert F(1 - 1e-12) == 0
        assert F.y[-1] == 1

    def test_median_agrees_with_histogram(self, cube_samples):
        H = histogram_density(cube_samples, 200)
        F = ecdf(cube_samples)
        assert abs(F.quantile(0.5) - H.quantile(0.5)) <= H.bin_width.max()

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.floats(-5, 5), min_size=1, max_size=100))
    def test_monotone(self, values):
        F = ecdf(synthetic(values))
        assert np.all(np.diff(F.y) >= 0) and F.y[-1] == 1
        assert np.all(np.diff(F.x) >= 0)


class TestExtremes:
    def test_tetra_against_brute_force(self):
        P = make_body("tetra")
        U = DirectionStream(3, 77).block(0, 1_200_000)
        w = widths(P, U)
        brute = w.min()
        # the brute-force minimiser sits near an opposite-edge direction
        u_best = U[np.argmin(w)]
        edge_dirs = np.array([[math.sqrt(2), 0, 1]]) / S3
        mid = lambda i, j: (P.vertices[i] + P.vertices[j]) / 2
        cands = []
        for (a, b), (c, d) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]:
            v = mid(a, b) - mid(c, d)
            cands.append(v / np.linalg.norm(v))
        cosines = np.abs(np.array(cands) @ u_best)
        assert cosines.max() > 0.999
        assert abs(brute - 1 / math.sqrt(2)) < 1e-3
        assert np.allclose(edge_dirs @ edge_dirs.T, 1)

        ex = width_extremes(P)
        assert ex.min_width == pytest.approx(1 / math.sqrt(2), abs=1e-6)
        assert ex.min_width >= brute - 1e-6 - 1e-3  # refinement never worse than the oracle grid
        assert ex.min_width <= brute
        assert width(P, ex.min_direction).width == pytest.approx(ex.min_width, abs=1e-15)
        assert ex.diameter == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize(
        "name, wmin, diam", [("cube", 1.0, S3), ("triangle", S3 / 2, 1.0), ("square", 1.0, math.sqrt(2))]
    )
    def test_simple_bodies(self, name, wmin, diam):
        ex = width_extremes(make_body(name))
        assert ex.min_width == pytest.approx(wmin, abs=1e-9)
        assert ex.diameter == pytest.approx(diam, abs=1e-12)

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("dim", [2, 3])
    def test_random_polytopes_against_exact_oracle(self, seed, dim):
        P = Polytope(np.random.default_rng(seed).normal(size=(9, dim)))
        ex = width_extremes(P)
        exact = exact_min_width(P)
        assert ex.min_width == pytest.approx(exact, abs=1e-6)
        assert ex.min_width >= exact - 1e-12
        assert ex.diameter == diameter(P)

    def test_min_never_above_coarse_grid(self, body):
        ex = width_extremes(body, coarse=32, refine_iters=10)
        theta = 2 * np.pi * np.arange(32) / 32
        if body.dimension == 2:
            U = np.column_stack([np.cos(theta / 2), np.sin(theta / 2)])
        else:
            U = np.column_stack([np.cos(theta), np.sin(theta), np.zeros(32)])
        assert ex.min_width <= widths(body, U).min() + 1e-15

    def test_preconditions(self):
        with pytest.raises(ContractViolation):
            width_extremes(make_body("cube"), coarse=16)
        with pytest.raises(ContractViolation):
            width_extremes(make_body("cube"), refine_iters=5)
