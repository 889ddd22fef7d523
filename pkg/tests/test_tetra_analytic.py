import math

import numpy as np
import pytest
from scipy import integrate, optimize

from widthlab import build_grid, g_max, make_body, moment_quadrature, reference_moment
from widthlab.tetra_analytic import (
    G_TERMS,
    SYMMETRY_FACTOR,
    active_term,
    antiderivative_F,
    g_terms_at,
    h_theta,
    mean_square_width_analytic,
    phi_boundary,
    region_map,
    sector_inner_integral,
    sector_integrand,
)

S2, S3 = math.sqrt(2), math.sqrt(3)
PI3 = math.pi / 3


def g1_minus_g4(theta, phi):
    g = g_terms_at(theta, phi)
    return g[0] - g[3]


class TestBoundary:
    def test_h_endpoints(self):
        assert h_theta(0.0) == pytest.approx(S2, abs=1e-15)
        assert h_theta(PI3) == pytest.approx((1 + S3) / S2, abs=1e-15)

    def test_phi_endpoints(self):
        assert phi_boundary(0.0) == pytest.approx(2 * math.atan(S2), abs=1e-15)
        assert phi_boundary(PI3) == pytest.approx(2 * math.atan((1 + S3) / S2), abs=1e-15)
        assert math.floor(phi_boundary(0.0) * 1e4) / 1e4 == 1.9106
        assert math.floor(phi_boundary(PI3) * 1e4) / 1e4 == 2.1862

    def test_h_at_pi_over_6_by_root_finding(self):
        t = math.pi / 6
        root = optimize.brentq(lambda p: g1_minus_g4(t, p), 1.5, 3.0, xtol=1e-15)
        assert 2 * math.atan(h_theta(t)) == pytest.approx(root, abs=1e-12)

    def test_boundary_identity(self):
        theta = np.linspace(0, PI3, 200)
        assert np.abs(g1_minus_g4(theta, phi_boundary(theta))).max() <= 1e-10


class TestActiveTerm:
    def test_inside_sector(self):
        t = math.pi / 6
        assert active_term(t, (phi_boundary(t) + math.pi) / 2) == 1

    def test_just_below_boundary(self):
        t = math.pi / 6
        phi = phi_boundary(t) - 1e-3
        assert int(np.argmax(g_terms_at(t, phi))) + 1 == 4
        assert active_term(t, phi) == 4

    def test_y_axis(self):
        assert active_term(math.pi / 2, math.pi / 2) == 6

    def test_sector_interior_random(self):
        rng = np.random.default_rng(5)
        hits = 0
        while hits < 10_000:
            t = rng.uniform(0, PI3)
            p = rng.uniform(phi_boundary(t) + 1e-6, math.pi)
            assert active_term(t, p) == 1
            hits += 1

    def test_terms_match_geometry(self):
        T = make_body("tetra")
        rng = np.random.default_rng(8)
        for _ in range(500):
            t, p = rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi)
            u = (math.cos(t) * math.sin(p), math.sin(t) * math.sin(p), math.cos(p))
            assert g_terms_at(t, p).max() == pytest.approx(g_max(T, u)[0], abs=1e-12)

    def test_term_evaluators(self):
        a, b, c = 0.2, 0.3, math.sqrt(1 - 0.13)
        np.testing.assert_allclose([gt.evaluate(a, b, c) for gt in G_TERMS],
                                   g_terms_at(math.atan2(b, a), math.acos(c)), atol=1e-14)
        assert [gt.index for gt in G_TERMS] == [1, 2, 3, 4, 5, 6]


class TestAntiderivative:
    def test_finite_differences(self):
        rng = np.random.default_rng(2)
        theta = rng.uniform(0, 2 * math.pi, 100)
        phi = rng.uniform(0, math.pi, 100)
        h = 1e-5
        fd = (antiderivative_F(theta, phi + h) - antiderivative_F(theta, phi - h)) / (2 * h)
        assert np.abs(fd - sector_integrand(theta, phi)).max() <= 1e-8

    @pytest.mark.parametrize("theta", [0.0, 0.3, PI3])
    def test_fundamental_theorem(self, theta):
        diff = antiderivative_F(theta, math.pi) - antiderivative_F(theta, phi_boundary(theta))
        assert diff == pytest.approx(sector_inner_integral(theta), abs=1e-12)


class TestInnerIntegral:
    def test_at_zero(self):
        # h = sqrt(2): numerator 24 + 32 + 12 + 4 = 72, denominator 18 pi 27
        assert sector_inner_integral(0.0) == pytest.approx(72 / (486 * math.pi), abs=1e-15)

    @pytest.mark.parametrize("theta", np.linspace(0, PI3, 7))
    def test_against_numeric_phi_integral(self, theta):
        num, _ = integrate.quad(lambda p: sector_integrand(theta, p), phi_boundary(theta), math.pi,
                                epsabs=1e-14, epsrel=1e-14)
        assert sector_inner_integral(theta) == pytest.approx(num, abs=1e-10)


class TestAssembly:
    def test_report(self):
        rep = mean_square_width_analytic()
        assert rep.symmetry_factor == SYMMETRY_FACTOR == 24
        assert abs(rep.assembled_mean_square - rep.reference) <= 1e-9
        assert rep.reference == reference_moment("tetra", 2).value
        assert rep.sector_integral == pytest.approx(0.0348, abs=5e-5)
        assert rep.sector_integral == pytest.approx(rep.assembled_mean_square / 24, rel=1e-15)
        assert rep.as_dict()["difference"] == rep.difference

    def test_sector_is_one_24th_of_sphere(self):
        # 2D quadrature of the full g (not g_1) over the cell, independent of the closed forms
        def inner(t):
            f = lambda p: g_terms_at(t, p).max() * math.sin(p) / ((8 / 3) * 4 * math.pi)
            return integrate.quad(f, phi_boundary(t), math.pi, epsabs=1e-13, epsrel=1e-13)[0]

        cell = integrate.quad(inner, 0, PI3, epsabs=1e-13, epsrel=1e-13)[0]
        full = moment_quadrature(make_body("tetra"), 2, build_grid(3, 1024, 512))
        assert abs(24 * cell - full.value) <= full.error_estimate + 1e-9

    def test_cross_validation_with_fine_grid(self):
        rep = mean_square_width_analytic()
        q = moment_quadrature(make_body("tetra"), 2, build_grid(3, 2048, 1024))
        assert abs(rep.assembled_mean_square - q.value) <= q.error_estimate + 1e-9

    def test_tolerance_failure_reported(self):
        from widthlab import ContractViolation, QuadratureError

        with pytest.raises(QuadratureError):
            mean_square_width_analytic(tol=1e-20)
        with pytest.raises(ContractViolation):
            mean_square_width_analytic(tol=0.0)


class TestRegionMap:
    def test_surface_is_normalized_width(self):
        theta, phi, surf, active = region_map(17, 17)
        T = make_body("tetra")
        from widthlab import widths

        U = np.column_stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)])
        np.testing.assert_allclose(surf, widths(T, U), atol=1e-14)

    def test_x_axis_value(self):
        theta, phi, surf, _ = region_map(17, 17)
        k = np.flatnonzero((theta == 0) & np.isclose(phi, math.pi / 2))[0]
        from widthlab import width

        assert surf[k] == pytest.approx(width(make_body("tetra"), (1.0, 0.0, 0.0)).width, abs=1e-14)
        assert surf[k] == pytest.approx(S3 / 2, abs=1e-14)

    def test_all_six_terms_present(self):
        *_, active = region_map(181, 91)
        assert set(active.tolist()) == {1, 2, 3, 4, 5, 6}
