"""Moments ``E[w^k]`` over uniformly distributed directions.

Two independent estimators:

* :func:`moment_quadrature` -- product rule, periodic trapezoid in the
  azimuth and Gauss-Legendre in ``z = cos(phi)``; the reported error is the
  change from the half-resolution grid.
* :func:`moment_monte_carlo` -- average over the counter-based direction
  stream of :mod:`widthlab.rng`, with the sample standard error.

Weights are normalized to sum to one, so both return plain averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _parallel
from .exceptions import ContractViolation
from .geometry import Polytope, widths
from .rng import DirectionStream

__all__ = [
    "QuadratureGrid",
    "MomentEstimate",
    "build_grid",
    "moment_quadrature",
    "moment_monte_carlo",
    "MC_BLOCK",
]

MC_BLOCK = 1 << 16
_QUAD_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """Directions with positive weights summing to one."""

    dimension: int
    directions: np.ndarray
    weights: np.ndarray
    n_theta: int
    n_phi: int | None = None

    def __len__(self):
        return len(self.weights)

    @property
    def nodes(self):
        return zip(self.directions, self.weights)


@dataclass(frozen=True)
class MomentEstimate:
    value: float
    k: int
    method: str
    error_estimate: float
    evaluations: int
    seed: int | None = None

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "k": self.k,
            "method": self.method,
            "error_estimate": self.error_estimate,
            "evaluations": self.evaluations,
            "seed": self.seed,
        }


def _grid(dimension, n_theta, n_phi):
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    if dimension == 2:
        dirs = np.column_stack([np.cos(theta), np.sin(theta)])
        return QuadratureGrid(2, dirs, np.full(n_theta, 1.0 / n_theta), n_theta)
    z, wz = np.polynomial.legendre.leggauss(n_phi)
    r = np.sqrt(1.0 - z * z)
    zz = np.repeat(z, n_theta)
    rr = np.repeat(r, n_theta)
    tt = np.tile(theta, n_phi)
    dirs = np.column_stack([rr * np.cos(tt), rr * np.sin(tt), zz])
    weights = np.repeat(wz / 2.0, n_theta) / n_theta
    return QuadratureGrid(3, dirs, weights, n_theta, n_phi)


def build_grid(dimension: int, n_theta: int, n_phi: int | None = None) -> QuadratureGrid:
    """Product grid on the circle (``n_theta`` points) or sphere (``n_theta * n_phi``).

    The 3D weight of node ``(theta_i, z_j)`` is ``(w_j / 2) / n_theta`` with
    ``(z_j, w_j)`` the Gauss-Legendre rule on [-1, 1].
    """
    if dimension not in (2, 3):
        raise ContractViolation(f"dimension must be 2 or 3, got {dimension}")
    if n_theta < 8:
        raise ContractViolation(f"n_theta must be at least 8, got {n_theta}")
    if dimension == 3 and (n_phi is None or n_phi < 4):
        raise ContractViolation(f"n_phi must be at least 4 in 3D, got {n_phi}")
    return _grid(dimension, int(n_theta), None if dimension == 2 else int(n_phi))


def _weighted_power_sum(P, k, grid, threads=None):
    n = len(grid)
    n_blocks = -(-n // _QUAD_CHUNK)

    def block(b):
        sl = slice(b * _QUAD_CHUNK, min(n, (b + 1) * _QUAD_CHUNK))
        return float(np.dot(grid.weights[sl], widths(P, grid.directions[sl]) ** k))

    return math.fsum(_parallel.map_blocks(block, n_blocks, threads))


def moment_quadrature(P: Polytope, k: int, grid: QuadratureGrid, threads=None) -> MomentEstimate:
    """``sum_i weight_i * width(P, u_i)**k`` with a half-resolution error estimate."""
    if grid.dimension != P.dimension:
        raise ContractViolation(
            f"grid dimension {grid.dimension} does not match polytope dimension {P.dimension}"
        )
    if int(k) != k or k < 0:
        raise ContractViolation(f"k must be a non-negative integer, got {k!r}")
    k = int(k)
    value = _weighted_power_sum(P, k, grid, threads)
    half = _grid(
        grid.dimension,
        max(grid.n_theta // 2, 1),
        None if grid.n_phi is None else max(grid.n_phi // 2, 1),
    )
    coarse = _weighted_power_sum(P, k, half, threads)
    return MomentEstimate(value, k, "quadrature", abs(value - coarse), len(grid) + len(half))


def _chan_merge(a, b):
    """Merge (count, mean, M2) summaries."""
    n_a, mean_a, m2_a = a
    n_b, mean_b, m2_b = b
    n = n_a + n_b
    delta = mean_b - mean_a
    mean = mean_a + delta * n_b / n
    m2 = m2_a + m2_b + delta * delta * n_a * n_b / n
    return n, mean, m2


def _pairwise_merge(parts):
    # fixed-shape binary tree over block summaries
    while len(parts) > 1:
        merged = [_chan_merge(parts[i], parts[i + 1]) for i in range(0, len(parts) - 1, 2)]
        if len(parts) % 2:
            merged.append(parts[-1])
        parts = merged
    return parts[0]


def moment_monte_carlo(P: Polytope, k: int, n: int, seed: int, threads=None) -> MomentEstimate:
    """Mean of ``width**k`` over the first ``n`` directions of the seeded stream.

    The stream is cut into blocks of :data:`MC_BLOCK` samples; block
    summaries are merged along a fixed pairwise tree, so the result does not
    depend on ``threads`` (or the ``WIDTHLAB_THREADS`` environment variable).
    """
    if n < 100:
        raise ContractViolation(f"n must be at least 100, got {n}")
    if int(k) != k or k < 1:
        raise ContractViolation(f"k must be a positive integer, got {k!r}")
    k, n = int(k), int(n)
    stream = DirectionStream(P.dimension, seed)
    n_blocks = -(-n // MC_BLOCK)

    def block(b):
        start = b * MC_BLOCK
        count = min(MC_BLOCK, n - start)
        x = widths(P, stream.block(start, count)) ** k
        mean = float(np.mean(x))
        return count, mean, float(np.sum((x - mean) ** 2))

    total, mean, m2 = _pairwise_merge(_parallel.map_blocks(block, n_blocks, threads))
    stderr = math.sqrt(m2 / (total - 1)) / math.sqrt(total)
    return MomentEstimate(mean, k, "monte-carlo", stderr, total, int(seed))
