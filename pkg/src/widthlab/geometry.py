"""Width of a convex polytope in a given direction.

A polytope is stored as its vertex list only; the support function of the
convex hull equals the maximum over vertices, so no hull is ever built.
Three routes to the width are provided and agree to rounding:

* :func:`width` -- support function, ``h(u) + h(-u)``;
* :func:`g_max` -- largest squared projection of a pairwise vertex
  difference, whose square root is the raw width;
* :func:`ball_union_chord` -- intersect the line ``t*u`` with the balls
  having diameters ``[0, v_i]`` and measure the spread of the roots.

Vertex indices are 0-based everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from .exceptions import ContractViolation

UNIT_TOL = 1e-12
DUPLICATE_TOL = 1e-12
TIE_TOL = 1e-12

__all__ = [
    "UnitDirection",
    "Polytope",
    "WidthEvaluation",
    "support",
    "width",
    "widths",
    "g_max",
    "ball_union_chord",
    "diameter",
]


@dataclass(frozen=True)
class UnitDirection:
    """A point on the unit circle (2D) or unit sphere (3D)."""

    components: tuple

    def __post_init__(self):
        comps = tuple(float(c) for c in self.components)
        if len(comps) not in (2, 3):
            raise ContractViolation(f"direction must have 2 or 3 components, got {len(comps)}")
        if not all(math.isfinite(c) for c in comps):
            raise ContractViolation("direction components must be finite")
        norm = math.sqrt(math.fsum(c * c for c in comps))
        if abs(norm - 1.0) > UNIT_TOL:
            raise ContractViolation(f"direction is not unit length (|u| = {norm!r})")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_vector(cls, vector) -> "UnitDirection":
        """Normalize a non-zero vector."""
        v = np.asarray(vector, dtype=float).ravel()
        norm = float(np.linalg.norm(v))
        if not math.isfinite(norm) or norm == 0.0:
            raise ContractViolation("cannot normalize a zero or non-finite vector")
        return cls(tuple(v / norm))

    @classmethod
    def from_angles(cls, theta: float, phi: float | None = None) -> "UnitDirection":
        """``(cos t, sin t)`` in 2D, or ``(cos t sin p, sin t sin p, cos p)`` in 3D."""
        if phi is None:
            return cls((math.cos(theta), math.sin(theta)))
        s = math.sin(phi)
        return cls((math.cos(theta) * s, math.sin(theta) * s, math.cos(phi)))

    @property
    def dimension(self) -> int:
        return len(self.components)

    def as_array(self) -> np.ndarray:
        return np.array(self.components)

    def __neg__(self) -> "UnitDirection":
        return UnitDirection(tuple(-c for c in self.components))


class Polytope:
    """Finite vertex set in the plane or in space.

    Parameters
    ----------
    vertices : array_like, shape (n, d)
        Vertex coordinates, ``d`` in {2, 3}. Points lying within 1e-12 of an
        earlier point are dropped; interior points are kept (they never
        change a width).
    edge_norm : float
        Divisor turning raw widths into reported widths. The canonical bodies
        use their raw edge length here so that widths refer to unit edges.
    name : str, optional
        Label used in reports.
    """

    def __init__(self, vertices, edge_norm: float = 1.0, name: str | None = None):
        try:
            arr = np.array(vertices, dtype=float)
        except (TypeError, ValueError) as exc:
            raise ContractViolation(f"vertices are not a numeric array: {exc}") from None
        if arr.ndim != 2 or arr.shape[1] not in (2, 3):
            raise ContractViolation(f"vertices must have shape (n, 2) or (n, 3), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ContractViolation("vertex coordinates must be finite")
        edge_norm = float(edge_norm)
        if not (math.isfinite(edge_norm) and edge_norm > 0):
            raise ContractViolation(f"edge_norm must be positive and finite, got {edge_norm!r}")

        arr = _drop_duplicates(arr)
        if len(arr) < 2:
            raise ContractViolation("a polytope needs at least two distinct vertices")
        arr.setflags(write=False)
        self._vertices = arr
        self._edge_norm = edge_norm
        self.name = name

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def dimension(self) -> int:
        return self._vertices.shape[1]

    @property
    def edge_norm(self) -> float:
        return self._edge_norm

    def __len__(self):
        return len(self._vertices)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Polytope({label}n={len(self)}, dimension={self.dimension}, edge_norm={self._edge_norm!r})"

    def transformed(self, matrix=None, shift=None, scale: float = 1.0) -> "Polytope":
        """Return ``scale * (V @ matrix.T) + shift`` with the same edge_norm."""
        v = self._vertices
        if matrix is not None:
            v = v @ np.asarray(matrix, dtype=float).T
        v = scale * v
        if shift is not None:
            v = v + np.asarray(shift, dtype=float)
        return Polytope(v, self._edge_norm, self.name)


def _drop_duplicates(arr: np.ndarray) -> np.ndarray:
    if len(arr) < 2:
        return arr
    pairs = cKDTree(arr).query_pairs(DUPLICATE_TOL, output_type="ndarray")
    if len(pairs) == 0:
        return arr
    keep = np.ones(len(arr), dtype=bool)
    # drop the later point of each close pair, keeping first occurrences
    for i, j in sorted(map(tuple, np.sort(pairs, axis=1))):
        if keep[i]:
            keep[j] = False
    return arr[keep]


@dataclass(frozen=True)
class WidthEvaluation:
    """Width of a polytope in one direction.

    ``achieving_pair`` is the ordered pair ``(i, j)`` maximising
    ``<v_i - v_j, u>``, i.e. ``i`` attains the support in ``u`` and ``j`` in
    ``-u``.
    """

    width: float
    raw_width: float
    achieving_pair: tuple


def _direction_array(P: Polytope, u) -> np.ndarray:
    if not isinstance(u, UnitDirection):
        u = UnitDirection(tuple(np.asarray(u, dtype=float).ravel()))
    if u.dimension != P.dimension:
        raise ContractViolation(
            f"direction has dimension {u.dimension}, polytope has dimension {P.dimension}"
        )
    return u.as_array()


def _first_within(values: np.ndarray, tol: float = TIE_TOL) -> int:
    """Index of the first entry within ``tol`` of the maximum."""
    return int(np.flatnonzero(values >= values.max() - tol)[0])


def support(P: Polytope, u, return_index: bool = False):
    """Support function ``max_i <v_i, u>``.

    With ``return_index=True`` also return the lowest vertex index attaining
    the maximum (within 1e-12).
    """
    p = P.vertices @ _direction_array(P, u)
    value = float(p.max())
    if return_index:
        return value, _first_within(p)
    return value


def width(P: Polytope, u) -> WidthEvaluation:
    """Distance between the two supporting planes orthogonal to ``u``."""
    p = P.vertices @ _direction_array(P, u)
    # max(p) + max(-p), written so that u and -u give identical bits
    raw = float(p.max() - p.min())
    diff = p[:, None] - p[None, :]
    np.fill_diagonal(diff, -np.inf)
    flat = _first_within(diff.ravel())
    pair = divmod(flat, len(p))
    return WidthEvaluation(raw / P.edge_norm, raw, (int(pair[0]), int(pair[1])))


def widths(P: Polytope, directions) -> np.ndarray:
    """Normalized widths for an ``(n, d)`` array of unit directions.

    Rows are not re-validated; callers pass directions they generated.
    """
    U = np.asarray(directions, dtype=float)
    if U.ndim != 2 or U.shape[1] != P.dimension:
        raise ContractViolation(
            f"directions must have shape (n, {P.dimension}), got {U.shape}"
        )
    # vertices along axis 0 keeps the max/min reductions contiguous
    p = P.vertices @ U.T
    return (p.max(axis=0) - p.min(axis=0)) / P.edge_norm


def g_max(P: Polytope, u):
    """Largest squared projection of a vertex difference onto ``u``.

    Works in raw coordinates (no edge normalization), so ``sqrt`` of the
    value is the raw width. Returns ``(value, (i, j))`` with ``i < j``.
    """
    uu = _direction_array(P, u)
    i, j = np.triu_indices(len(P), k=1)
    proj = (P.vertices[i] - P.vertices[j]) @ uu
    sq = proj * proj
    k = _first_within(sq)
    return float(sq[k]), (int(i[k]), int(j[k]))


def ball_union_chord(P: Polytope, u) -> float:
    """Raw width from line/ball intersections.

    Each vertex ``v`` carries the ball with diameter ``[0, v]`` (center
    ``v/2``, radius ``|v|/2``); for unit-norm vertices these are the radius
    1/2 balls through the origin. The line ``t*u`` meets each such ball at
    ``t = 0`` and at one further root ``t_i``; the result is
    ``max_{i,j} |t_i - t_j|``.
    """
    uu = _direction_array(P, u)
    centers = P.vertices / 2.0
    radii_sq = (np.linalg.norm(P.vertices, axis=1) / 2.0) ** 2
    # |t u - c|^2 = r^2  ->  t^2 - 2 t <u,c> + (|c|^2 - r^2) = 0
    half_b = centers @ uu
    const = np.einsum("ij,ij->i", centers, centers) - radii_sq
    disc = np.maximum(half_b * half_b - const, 0.0)
    roots = half_b + np.copysign(np.sqrt(disc), half_b)
    roots = np.where(half_b == 0.0, 0.0, roots)
    return float(roots.max() - roots.min())


def diameter(P: Polytope) -> float:
    """Largest vertex distance, divided by ``edge_norm``."""
    if len(P) < 2:
        raise ContractViolation("diameter needs at least two vertices")
    return float(pdist(P.vertices).max()) / P.edge_norm
