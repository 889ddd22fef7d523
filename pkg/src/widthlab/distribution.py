"""Empirical distribution of the width under uniformly random directions.

The width density has no known closed form, so this module only estimates
it: seeded samples, a binned density, the empirical CDF, and the support
interval ``[min width, diameter]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _parallel
from .exceptions import ContractViolation
from .geometry import Polytope, UnitDirection, diameter, widths
from .rng import DirectionStream
from .sphere import MC_BLOCK

__all__ = [
    "WidthSampleSet",
    "HistogramDensity",
    "ECDF",
    "WidthExtremes",
    "sample_widths",
    "histogram_density",
    "ecdf",
    "width_extremes",
]


@dataclass(frozen=True, eq=False)
class WidthSampleSet:
    body: str
    samples: np.ndarray
    seed: int | None
    n: int

    def __len__(self):
        return self.n


def sample_widths(P: Polytope, n: int, seed: int, threads=None) -> WidthSampleSet:
    """Widths of ``P`` along the first ``n`` directions of the seeded stream."""
    if n < 1:
        raise ContractViolation("empty sample: n must be at least 1")
    n = int(n)
    stream = DirectionStream(P.dimension, seed)

    def block(b):
        start = b * MC_BLOCK
        return widths(P, stream.block(start, min(MC_BLOCK, n - start)))

    parts = _parallel.map_blocks(block, -(-n // MC_BLOCK), threads)
    samples = np.concatenate(parts)
    samples.setflags(write=False)
    return WidthSampleSet(P.name or repr(P), samples, int(seed), n)


@dataclass(frozen=True, eq=False)
class HistogramDensity:
    """Binned probability masses.

    ``masses[j]`` is the fraction of all ``n`` samples falling in bin ``j``;
    ``overflow`` counts samples outside an explicitly requested range, so
    ``masses.sum() + overflow / n == 1``.
    """

    bin_edges: np.ndarray
    masses: np.ndarray
    n: int
    overflow: int = 0

    @property
    def bin_width(self) -> np.ndarray:
        return np.diff(self.bin_edges)

    @property
    def density(self) -> np.ndarray:
        return self.masses / self.bin_width

    def quantile(self, q: float) -> float:
        """Quantile of the piecewise-uniform distribution the bins describe."""
        cum = np.concatenate([[0.0], np.cumsum(self.masses)])
        j = int(np.searchsorted(cum, q * cum[-1], side="left"))
        j = min(max(j, 1), len(self.masses))
        lo, hi = cum[j - 1], cum[j]
        frac = 0.0 if hi == lo else (q * cum[-1] - lo) / (hi - lo)
        return float(self.bin_edges[j - 1] + frac * (self.bin_edges[j] - self.bin_edges[j - 1]))


def histogram_density(S: WidthSampleSet, bins: int, range=None) -> HistogramDensity:
    """Histogram of the samples; right edge inclusive.

    Without ``range`` the bins span ``[min sample, max sample]``.
    """
    x = np.asarray(S.samples)
    if len(x) == 0:
        raise ContractViolation("empty sample")
    if bins < 1:
        raise ContractViolation(f"bins must be at least 1, got {bins}")
    if range is None:
        lo, hi = float(x.min()), float(x.max())
        outside = 0
    else:
        lo, hi = map(float, range)
        if not hi > lo:
            raise ContractViolation(f"histogram range must be nonempty, got {range!r}")
        outside = int(np.count_nonzero((x < lo) | (x > hi)))
    counts, edges = np.histogram(x, bins=int(bins), range=(lo, hi))
    return HistogramDensity(edges, counts / len(x), len(x), outside)


@dataclass(frozen=True, eq=False)
class ECDF:
    """Right-continuous empirical CDF, stored as sorted samples and step heights."""

    x: np.ndarray
    y: np.ndarray

    def __call__(self, t):
        return np.searchsorted(self.x, t, side="right") / len(self.x)

    def quantile(self, q: float) -> float:
        """Smallest sample ``x`` with ``F(x) >= q``."""
        j = int(np.searchsorted(self.y, q - 1e-15, side="left"))
        return float(self.x[min(j, len(self.x) - 1)])


def ecdf(S: WidthSampleSet) -> ECDF:
    x = np.sort(np.asarray(S.samples))
    if len(x) == 0:
        raise ContractViolation("empty sample")
    return ECDF(x, np.arange(1, len(x) + 1) / len(x))


@dataclass(frozen=True)
class WidthExtremes:
    min_width: float
    min_direction: UnitDirection
    diameter: float


def _tangent_basis(u):
    # two unit vectors orthogonal to u and to each other
    helper = np.eye(3)[int(np.argmin(np.abs(u)))]
    e1 = np.cross(u, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(u, e1)


def _refine_3d(P, u0, radius, iters, points):
    e1, e2 = _tangent_basis(u0)
    offsets = np.linspace(-1.0, 1.0, points)
    S, T = np.meshgrid(offsets, offsets, indexing="ij")
    S, T = S.ravel(), T.ravel()
    centre = np.zeros(2)
    best_u = u0
    best_w = float(widths(P, u0[None, :])[0])
    for _ in range(iters):
        s = centre[0] + radius * S
        t = centre[1] + radius * T
        U = u0 + s[:, None] * e1 + t[:, None] * e2
        U /= np.linalg.norm(U, axis=1)[:, None]
        w = widths(P, U)
        k = int(np.argmin(w))
        if w[k] < best_w:
            best_w, best_u = float(w[k]), U[k]
            centre = np.array([s[k], t[k]])
        radius *= 0.5
    return best_w, best_u


def _refine_2d(P, theta0, radius, iters, points):
    offsets = np.linspace(-1.0, 1.0, points)
    best_t = theta0
    best_w = float(widths(P, np.array([[math.cos(theta0), math.sin(theta0)]]))[0])
    for _ in range(iters):
        t = best_t + radius * offsets
        w = widths(P, np.column_stack([np.cos(t), np.sin(t)]))
        k = int(np.argmin(w))
        if w[k] < best_w:
            best_w, best_t = float(w[k]), float(t[k])
        radius *= 0.5
    return best_w, np.array([math.cos(best_t), math.sin(best_t)])


def width_extremes(
    P: Polytope, coarse: int = 64, refine_iters: int = 60, candidates: int = 8
) -> WidthExtremes:
    """Minimum width (by grid search) and diameter (exact).

    Since ``w(u) = w(-u)`` only half of the circle or sphere is scanned with
    ``coarse`` azimuths (and ``coarse // 2 + 1`` heights in 3D). The best
    ``candidates`` coarse nodes are then refined by a shrinking grid in a
    local chart: the angle in 2D, the tangent plane at the node in 3D. The
    grid halves ``refine_iters`` times and recentres on any improvement.
    """
    if coarse < 32:
        raise ContractViolation(f"coarse must be at least 32, got {coarse}")
    if refine_iters < 10:
        raise ContractViolation(f"refine_iters must be at least 10, got {refine_iters}")
    step = math.pi / coarse
    if P.dimension == 2:
        theta = np.pi * np.arange(coarse) / coarse
        W = widths(P, np.column_stack([np.cos(theta), np.sin(theta)]))
        order = np.argsort(W, kind="stable")[:candidates]
        results = [_refine_2d(P, float(theta[i]), step, refine_iters, 9) for i in order]
    else:
        theta = 2 * np.pi * np.arange(coarse) / coarse
        z = np.linspace(0.0, 1.0, coarse // 2 + 1)
        zz, tt = np.meshgrid(z, theta, indexing="ij")
        r = np.sqrt(1.0 - zz * zz)
        U = np.column_stack([(r * np.cos(tt)).ravel(), (r * np.sin(tt)).ravel(), zz.ravel()])
        W = widths(P, U)
        order = np.argsort(W, kind="stable")[:candidates]
        results = [_refine_3d(P, U[i], 2 * step, refine_iters, 7) for i in order]
    best_w, best_u = min(results, key=lambda r: r[0])
    best_u = best_u / np.linalg.norm(best_u)
    return WidthExtremes(best_w, UnitDirection(tuple(best_u)), diameter(P))
