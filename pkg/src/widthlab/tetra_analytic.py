"""Mean square width of the regular tetrahedron by sector decomposition.

In the raw frame (vertices on the unit sphere) the squared raw width is the
largest of six quadratic forms ``g_1 .. g_6``, one per vertex pair (the
pair behind each index is listed in ``G_TERMS``). The symmetry group of the
width function cuts the sphere into 24 congruent cells. On the cell

    0 <= theta <= pi/3,   phi_b(theta) <= phi <= pi

only ``g_1`` is active, where ``phi_b = 2*arctan(h(theta))`` solves
``g_1 = g_4``. Integrating ``g_1 * sin(phi)`` over ``phi`` in closed form
leaves a smooth one-dimensional integral over ``theta``; 24 times that
integral is ``E[w^2]``.

Angles follow the usual spherical convention: a direction is
``(cos t sin p, sin t sin p, cos p)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .bodies import (
    SQRT2,
    SQRT3,
    TETRA_TERM_PAIRS,
    CanonicalBodyId,
    reference_moment,
    tetrahedron_g_terms,
)
from .exceptions import ContractViolation, QuadratureError

__all__ = [
    "GTerm",
    "G_TERMS",
    "SectorReport",
    "SYMMETRY_FACTOR",
    "g_terms_at",
    "h_theta",
    "phi_boundary",
    "active_term",
    "sector_integrand",
    "antiderivative_F",
    "sector_inner_integral",
    "mean_square_width_analytic",
    "region_map",
]

SYMMETRY_FACTOR = 24
# squared raw edge length of the raw-frame tetrahedron, (2*sqrt(2/3))**2
_EDGE_SQ = 8.0 / 3.0


@dataclass(frozen=True)
class GTerm:
    index: int
    pair: tuple
    evaluate: Callable


def _term(i):
    return lambda a, b, c: tetrahedron_g_terms(a, b, c)[i]


G_TERMS = tuple(GTerm(i + 1, p, _term(i)) for i, p in enumerate(TETRA_TERM_PAIRS))


def _abc(theta, phi):
    s = np.sin(phi)
    return np.cos(theta) * s, np.sin(theta) * s, np.cos(phi)


def g_terms_at(theta, phi):
    """All six terms at spherical angles, shape ``(6,) + broadcast shape``."""
    return tetrahedron_g_terms(*_abc(theta, phi))


def h_theta(theta):
    return (
        np.cos(theta)
        + SQRT3 * np.sin(theta)
        + np.sqrt(10.0 - np.cos(2 * theta) + SQRT3 * np.sin(2 * theta))
    ) / (2 * SQRT2)


def phi_boundary(theta):
    """Polar angle where ``g_1 = g_4`` bounds the sector from above."""
    return 2.0 * np.arctan(h_theta(theta))


def active_term(theta: float, phi: float, tol: float = 1e-12) -> int:
    """1-based index of the largest term, lowest index on ties within ``tol``."""
    g = g_terms_at(theta, phi)
    return int(np.flatnonzero(g >= g.max() - tol)[0]) + 1


def sector_integrand(theta, phi):
    """``g_1 sin(phi) / ((8/3) * 4 pi)``: the normalized ``E[w^2]`` integrand on the sector."""
    a, b, c = _abc(theta, phi)
    return G_TERMS[0].evaluate(a, b, c) * np.sin(phi) / (_EDGE_SQ * 4 * math.pi)


def antiderivative_F(theta, phi):
    """Antiderivative of :func:`sector_integrand` in ``phi``."""
    c2 = np.cos(2 * theta)
    return (
        (-3 + c2) * np.cos(3 * phi)
        - 3 * (7 + 3 * c2) * np.cos(phi)
        - 16 * SQRT2 * np.cos(theta) * np.sin(phi) ** 3
    ) / (288 * math.pi)


def sector_inner_integral(theta):
    """Closed form of ``int_{phi_b(theta)}^{pi} sector_integrand(theta, phi) dphi``."""
    h = h_theta(theta)
    c2 = np.cos(2 * theta)
    num = 6 * h**4 + 8 * SQRT2 * h**3 * np.cos(theta) + 3 * h**2 * (1 + c2) + (3 + c2)
    return num / (18 * math.pi * (1 + h * h) ** 3)


@dataclass(frozen=True)
class SectorReport:
    phi_at_0: float
    phi_at_pi3: float
    sector_integral: float
    assembled_mean_square: float
    reference: float
    symmetry_factor: int
    quadrature_error: float

    @property
    def difference(self) -> float:
        return self.assembled_mean_square - self.reference

    def as_dict(self) -> dict:
        return {
            "phi_at_0": self.phi_at_0,
            "phi_at_pi3": self.phi_at_pi3,
            "sector_integral": self.sector_integral,
            "symmetry_factor": self.symmetry_factor,
            "assembled_mean_square": self.assembled_mean_square,
            "reference": self.reference,
            "difference": self.difference,
            "quadrature_error": self.quadrature_error,
        }


def mean_square_width_analytic(tol: float = 1e-12) -> SectorReport:
    """Integrate the sector's closed inner integral over ``theta`` and reassemble.

    Raises :class:`QuadratureError` if the adaptive rule cannot certify
    ``tol``.
    """
    if not (math.isfinite(tol) and tol > 0):
        raise ContractViolation(f"tol must be positive and finite, got {tol!r}")
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, err = integrate.quad(
                sector_inner_integral, 0.0, math.pi / 3, epsabs=tol, epsrel=tol, limit=200
            )
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(f"sector integral did not converge: {exc}") from None
    if not err <= tol:
        raise QuadratureError(
            f"sector integral error estimate {err:.3e} exceeds tolerance {tol:.1e}", achieved=err
        )
    return SectorReport(
        phi_at_0=float(phi_boundary(0.0)),
        phi_at_pi3=float(phi_boundary(math.pi / 3)),
        sector_integral=value,
        assembled_mean_square=SYMMETRY_FACTOR * value,
        reference=reference_moment(CanonicalBodyId.TETRAHEDRON, 2).value,
        symmetry_factor=SYMMETRY_FACTOR,
        quadrature_error=SYMMETRY_FACTOR * err,
    )


def region_map(n_theta: int, n_phi: int):
    """Grid over ``[0, 2 pi] x [0, pi]`` (endpoints included, ``phi`` fastest).

    Returns ``theta, phi, surface, active`` as flat arrays, where
    ``surface = sqrt(3 g / 8)`` is the unit-edge width and ``active`` the
    1-based index of the largest term (lowest on 1e-12 ties).
    """
    theta, phi = np.meshgrid(
        np.linspace(0.0, 2 * math.pi, n_theta), np.linspace(0.0, math.pi, n_phi), indexing="ij"
    )
    theta, phi = theta.ravel(), phi.ravel()
    g = g_terms_at(theta, phi)
    gmax = g.max(axis=0)
    active = np.argmax(g >= gmax - 1e-12, axis=0) + 1
    return theta, phi, np.sqrt(3.0 * gmax / 8.0), active
