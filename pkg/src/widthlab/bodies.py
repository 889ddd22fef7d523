"""The triangle, square, regular tetrahedron and cube with their moment constants.

Each body is built in a convenient raw frame (vertices on the unit circle or
unit sphere, centroid at the origin) and carries its raw edge length as
``edge_norm``, so widths reported by :mod:`widthlab.geometry` refer to the
unit-edge body.

The module also carries the explicit pairwise-projection tables for each
body, written out term by term in ``(a, b)`` or ``(a, b, c)`` coordinates,
together with the reduced maxima for the square (two terms) and the cube
(four terms).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import NotAvailableError
from .geometry import Polytope

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

__all__ = [
    "CanonicalBodyId",
    "ReferenceMoment",
    "make_body",
    "reference_moment",
    "perimeter",
    "triangle_g_terms",
    "square_g_table",
    "square_g_terms",
    "square_g_reduced",
    "tetrahedron_g_terms",
    "TETRA_TERM_PAIRS",
    "cube_g_terms",
    "cube_g_reduced",
]


class CanonicalBodyId(str, enum.Enum):
    TRIANGLE = "triangle"
    SQUARE = "square"
    TETRAHEDRON = "tetrahedron"
    CUBE = "cube"

    @classmethod
    def parse(cls, value) -> "CanonicalBodyId":
        """Accept an enum member, its value, or the short name ``tetra``."""
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key == "tetra":
            key = "tetrahedron"
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown body {value!r}; expected one of {names} (or tetra)") from None


def make_body(body) -> Polytope:
    """Raw-frame vertices of a canonical body with its edge normalizer."""
    body = CanonicalBodyId.parse(body)
    if body is CanonicalBodyId.TRIANGLE:
        verts = [(0.0, 1.0), (SQRT3 / 2, -0.5), (-SQRT3 / 2, -0.5)]
        norm = SQRT3
    elif body is CanonicalBodyId.SQUARE:
        h = SQRT2 / 2
        verts = [(h, h), (h, -h), (-h, h), (-h, -h)]
        norm = SQRT2
    elif body is CanonicalBodyId.TETRAHEDRON:
        r = math.sqrt(2.0 / 3.0)
        verts = [
            (0.0, 0.0, 1.0),
            (2 * SQRT2 / 3, 0.0, -1.0 / 3),
            (-SQRT2 / 3, r, -1.0 / 3),
            (-SQRT2 / 3, -r, -1.0 / 3),
        ]
        norm = 2 * r
    else:
        s = SQRT3 / 3
        verts = [(x, y, z) for x in (s, -s) for y in (s, -s) for z in (s, -s)]
        norm = 2 / SQRT3
    return Polytope(verts, edge_norm=norm, name=body.value)


def perimeter(body) -> float:
    """Perimeter of a unit-edge planar body."""
    body = CanonicalBodyId.parse(body)
    sides = {CanonicalBodyId.TRIANGLE: 3, CanonicalBodyId.SQUARE: 4}
    if body not in sides:
        raise NotAvailableError(f"{body.value} is not a planar body")
    return float(sides[body])


@dataclass(frozen=True)
class ReferenceMoment:
    body: CanonicalBodyId
    k: int
    value: float
    formula_tag: str


# (body, k) -> (formula tag, evaluator); evaluated at call time
_REFERENCE_FORMS = {
    (CanonicalBodyId.TRIANGLE, 1): ("3/pi", lambda: 3 / math.pi),
    (CanonicalBodyId.TRIANGLE, 2): (
        "(1/2)*(1 + 3*sqrt(3)/(2*pi))",
        lambda: 0.5 * (1 + 3 * SQRT3 / (2 * math.pi)),
    ),
    (CanonicalBodyId.SQUARE, 1): ("4/pi", lambda: 4 / math.pi),
    (CanonicalBodyId.SQUARE, 2): ("1 + 2/pi", lambda: 1 + 2 / math.pi),
    (CanonicalBodyId.TETRAHEDRON, 1): (
        "(3/(2*pi))*arccos(-1/3)",
        lambda: 3 / (2 * math.pi) * math.acos(-1.0 / 3.0),
    ),
    (CanonicalBodyId.TETRAHEDRON, 2): (
        "(1/3)*(1 + (3 + sqrt(3))/pi)",
        lambda: (1 + (3 + SQRT3) / math.pi) / 3,
    ),
    (CanonicalBodyId.CUBE, 1): ("3/2", lambda: 1.5),
    (CanonicalBodyId.CUBE, 2): ("1 + 4/pi", lambda: 1 + 4 / math.pi),
}


def reference_moment(body, k: int) -> ReferenceMoment:
    """Closed-form ``E[w^k]`` for a unit-edge canonical body, ``k`` in {1, 2}."""
    body = CanonicalBodyId.parse(body)
    try:
        tag, fn = _REFERENCE_FORMS[(body, int(k))]
    except KeyError:
        raise NotAvailableError(f"no closed form for E[w^{k}] of the {body.value}") from None
    return ReferenceMoment(body, int(k), fn(), tag)


# Explicit projection tables. Inputs may be scalars or arrays; each function
# returns an array stacked along axis 0, one row per term.


def triangle_g_terms(a, b):
    """Squared chord lengths for pairs (1,2), (1,3), (2,3) of the triangle."""
    return np.stack(np.broadcast_arrays(
        0.25 * (3 - 6 * SQRT3 * a * b + 6 * b * b),
        0.75 * (1 + 2 * SQRT3 * a * b + 2 * b * b),
        3 * a * a,
    ))


def square_g_table(a, b):
    """All six pairwise entries of the square, pairs in lexicographic order."""
    return np.stack(np.broadcast_arrays(
        2 * b * b, 2 * a * a, 2 + 4 * a * b, 2 - 4 * a * b, 2 * a * a, 2 * b * b,
    ))


def square_g_terms(a, b):
    """The four distinct square expressions."""
    return np.stack(np.broadcast_arrays(
        2 * a * a, 2 * b * b, 2 * (1 + 2 * a * b), 2 * (1 - 2 * a * b),
    ))


def square_g_reduced(a, b):
    """The two square expressions that can attain the maximum."""
    return np.stack(np.broadcast_arrays(2 * (1 + 2 * a * b), 2 * (1 - 2 * a * b)))


# vertex pair (1-based) behind each tetrahedron term; v3 and v4 enter the
# middle terms in swapped order relative to a plain lexicographic listing
TETRA_TERM_PAIRS = ((1, 2), (1, 4), (1, 3), (2, 4), (2, 3), (3, 4))


def tetrahedron_g_terms(a, b, c):
    """The six squared chord lengths of the tetrahedron, in display order.

    With the vertices of :func:`make_body` these are the 1-based vertex
    pairs (1,2), (1,4), (1,3), (2,4), (2,3), (3,4); see ``TETRA_TERM_PAIRS``.
    """
    return np.stack(np.broadcast_arrays(
        8 / 9 * (a * a - 2 * SQRT2 * a * c + 2 * c * c),
        (SQRT2 * a + SQRT6 * b + 4 * c) ** 2 / 9,
        (SQRT2 * a - SQRT6 * b + 4 * c) ** 2 / 9,
        2 / 3 * (3 * a * a + 2 * SQRT3 * a * b + b * b),
        2 / 3 * (3 * a * a - 2 * SQRT3 * a * b + b * b),
        8 / 3 * b * b,
    ))


def cube_g_terms(a, b, c):
    """The thirteen distinct cube expressions out of 28 vertex pairs."""
    f = 4.0 / 3.0
    return np.stack(np.broadcast_arrays(
        f * a * a,
        f * b * b,
        f * c * c,
        f * (1 + 2 * a * b - c * c),
        f * (1 + 2 * a * c - b * b),
        f * (1 - 2 * a * b - c * c),
        f * (1 - 2 * a * c - b * b),
        f * (b + c) ** 2,
        f * (b - c) ** 2,
        f * (1 + 2 * a * b + 2 * a * c + 2 * b * c),
        f * (1 + 2 * a * b - 2 * a * c - 2 * b * c),
        f * (1 - 2 * a * b - 2 * a * c + 2 * b * c),
        f * (1 - 2 * a * b + 2 * a * c - 2 * b * c),
    ))


def cube_g_reduced(a, b, c):
    """The four space-diagonal expressions that attain the cube maximum."""
    f = 4.0 / 3.0
    return np.stack(np.broadcast_arrays(
        f * (1 + 2 * a * b + 2 * a * c + 2 * b * c),
        f * (1 + 2 * a * b - 2 * a * c - 2 * b * c),
        f * (1 - 2 * a * b - 2 * a * c + 2 * b * c),
        f * (1 - 2 * a * b + 2 * a * c - 2 * b * c),
    ))
