"""One-shot reproduction of every reference constant.

:func:`run_verify` recomputes the eight closed-form moments by quadrature,
reassembles the tetrahedron mean square width from its sector integral,
checks the reduced maxima for the square and cube, and sweeps the three
width constructions against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bodies import (
    CanonicalBodyId,
    cube_g_reduced,
    cube_g_terms,
    make_body,
    reference_moment,
    square_g_reduced,
    square_g_terms,
)
from .geometry import ball_union_chord, g_max, width
from .rng import DirectionStream
from .sphere import build_grid, moment_quadrature
from .tetra_analytic import mean_square_width_analytic

__all__ = ["VerifyRow", "VerifyReport", "run_verify", "GRID_3D", "GRID_2D", "SWEEP_SEED"]

GRID_3D = (2048, 1024)
GRID_2D = 65536
MOMENT_RTOL = 5e-6
ANALYTIC_TOL = 1e-9
ORACLE_TOL = 1e-12
SWEEP_N = 10_000
SWEEP_SEED = 20111004


@dataclass(frozen=True)
class VerifyRow:
    name: str
    computed: float
    reference: float
    tolerance: float
    relative: bool = False

    @property
    def error(self) -> float:
        err = abs(self.computed - self.reference)
        return err / abs(self.reference) if self.relative else err

    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance


@dataclass
class VerifyReport:
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def format_table(self) -> str:
        width = max(len(r.name) for r in self.rows)
        lines = [
            f"{'check':<{width}}  {'computed':>22}  {'reference':>22}  {'error':>9}  {'tol':>9}  status",
        ]
        for r in self.rows:
            kind = "rel" if r.relative else "abs"
            lines.append(
                f"{r.name:<{width}}  {r.computed:>22.17g}  {r.reference:>22.17g}  "
                f"{r.error:>9.2e}  {r.tolerance:>5.0e}{kind}  {'PASS' if r.passed else 'FAIL'}"
            )
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _sweep_directions(dimension, n=SWEEP_N, seed=SWEEP_SEED):
    return DirectionStream(dimension, seed).block(0, n)


def moment_rows(threads=None):
    rows = []
    for body in CanonicalBodyId:
        P = make_body(body)
        grid = build_grid(2, GRID_2D) if P.dimension == 2 else build_grid(3, *GRID_3D)
        for k in (1, 2):
            est = moment_quadrature(P, k, grid, threads=threads)
            ref = reference_moment(body, k).value
            rows.append(VerifyRow(f"{body.value} E[w^{k}]", est.value, ref, MOMENT_RTOL, relative=True))
    return rows


def truncate4(x: float) -> float:
    """Drop digits after the fourth decimal (the quoted angles are truncated, not rounded)."""
    return math.floor(x * 1e4) / 1e4


def analytic_rows():
    rep = mean_square_width_analytic()
    return [
        VerifyRow("tetra analytic E[w^2]", rep.assembled_mean_square, rep.reference, ANALYTIC_TOL),
        VerifyRow("tetra phi(0), 4 decimals", truncate4(rep.phi_at_0), 1.9106, 1e-12),
        VerifyRow("tetra phi(pi/3), 4 decimals", truncate4(rep.phi_at_pi3), 2.1862, 1e-12),
    ]


def simplification_rows():
    U2 = _sweep_directions(2)
    sq_full = square_g_terms(U2[:, 0], U2[:, 1]).max(axis=0)
    sq_red = square_g_reduced(U2[:, 0], U2[:, 1]).max(axis=0)
    U3 = _sweep_directions(3)
    cu_full = cube_g_terms(U3[:, 0], U3[:, 1], U3[:, 2]).max(axis=0)
    cu_red = cube_g_reduced(U3[:, 0], U3[:, 1], U3[:, 2]).max(axis=0)
    return [
        VerifyRow("square 4->2 term max", float(np.abs(sq_full - sq_red).max()), 0.0, ORACLE_TOL),
        VerifyRow("cube 13->4 term max", float(np.abs(cu_full - cu_red).max()), 0.0, ORACLE_TOL),
    ]


def oracle_rows():
    rows = []
    for body in CanonicalBodyId:
        P = make_body(body)
        g_dev = chord_dev = 0.0
        for u in _sweep_directions(P.dimension):
            raw = width(P, u).raw_width
            g_dev = max(g_dev, abs(math.sqrt(g_max(P, u)[0]) - raw))
            chord_dev = max(chord_dev, abs(ball_union_chord(P, u) - raw))
        rows.append(VerifyRow(f"{body.value} sqrt(g_max) = width", g_dev, 0.0, ORACLE_TOL))
        rows.append(VerifyRow(f"{body.value} ball chord = width", chord_dev, 0.0, ORACLE_TOL))
    return rows


def run_verify(threads=None) -> VerifyReport:
    report = VerifyReport()
    report.rows.extend(moment_rows(threads))
    report.rows.extend(analytic_rows())
    report.rows.extend(simplification_rows())
    report.rows.extend(oracle_rows())
    return report
