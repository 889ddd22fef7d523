"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .bodies import CanonicalBodyId, make_body
from .distribution import ecdf, histogram_density, sample_widths, width_extremes
from .exceptions import ContractViolation, PolytopeFileError
from .geometry import UnitDirection, width
from .io import dumps, load_polytope, write_csv
from .sphere import build_grid, moment_monte_carlo, moment_quadrature
from .tetra_analytic import mean_square_width_analytic, region_map
from .verify import GRID_2D, GRID_3D, run_verify

BODY_CHOICES = ("triangle", "square", "tetra", "cube")


class UsageError(Exception):
    pass


def _floats(text: str):
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _add_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--body", choices=BODY_CHOICES, help="canonical unit-edge body")
    src.add_argument("--file", metavar="PATH", help="polytope JSON file")


def _polytope(args):
    if args.body:
        return make_body(CanonicalBodyId.parse(args.body))
    return load_polytope(args.file)


def _emit(obj):
    sys.stdout.write(dumps(obj) + "\n")


def cmd_verify(args):
    report = run_verify(threads=args.threads)
    print(report.format_table())
    return 0 if report.passed else 1


def cmd_moments(args):
    P = _polytope(args)
    if args.method == "quad":
        if P.dimension == 2:
            grid = build_grid(2, args.n_theta or GRID_2D)
        else:
            grid = build_grid(3, args.n_theta or GRID_3D[0], args.n_phi or GRID_3D[1])
        est = moment_quadrature(P, args.k, grid, threads=args.threads)
    else:
        est = moment_monte_carlo(P, args.k, args.n, args.seed, threads=args.threads)
    _emit(est.as_dict())
    return 0


def cmd_density(args):
    if args.n < 1:
        raise UsageError("empty sample: --n must be at least 1")
    P = _polytope(args)
    S = sample_widths(P, args.n, args.seed, threads=args.threads)
    hist = histogram_density(S, args.bins, args.range)
    cdf = ecdf(S)
    hist_path = f"{args.out}.hist.csv"
    ecdf_path = f"{args.out}.ecdf.csv"
    try:
        write_csv(hist_path, ["bin_left", "bin_right", "mass"],
                  [hist.bin_edges[:-1], hist.bin_edges[1:], hist.masses])
        write_csv(ecdf_path, ["sorted_width", "ecdf"], [cdf.x, cdf.y])
    except OSError as exc:
        raise UsageError(f"cannot write output: {exc}") from None
    _emit({"histogram": hist_path, "ecdf": ecdf_path, "n": S.n, "seed": S.seed,
           "bins": args.bins, "overflow": hist.overflow})
    return 0


def cmd_width(args):
    P = _polytope(args)
    u = UnitDirection.from_vector(args.dir)
    ev = width(P, u)
    _emit({"direction": list(u.components), "width": ev.width, "raw_width": ev.raw_width,
           "achieving_pair": list(ev.achieving_pair)})
    return 0


def cmd_extremes(args):
    P = _polytope(args)
    ex = width_extremes(P, args.coarse, args.refine_iters)
    _emit({"min_width": ex.min_width, "min_direction": list(ex.min_direction.components),
           "diameter": ex.diameter})
    return 0


def cmd_analytic_tetra(args):
    _emit(mean_square_width_analytic().as_dict())
    return 0


def cmd_region_map(args):
    if args.n_theta < 16 or args.n_phi < 16:
        raise UsageError("--n-theta and --n-phi must be at least 16")
    theta, phi, surface, active = region_map(args.n_theta, args.n_phi)
    try:
        write_csv(args.out, ["theta", "phi", "sqrt_3g_over_8", "active_term"],
                  [theta, phi, surface, active])
    except OSError as exc:
        raise UsageError(f"cannot write output: {exc}") from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="widthlab", description="Width functions, moments and width distributions of convex polytopes."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $WIDTHLAB_THREADS or CPU count); results do not depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="reproduce every reference constant")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("moments", help="estimate E[w^k]")
    _add_source(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=("quad", "mc"), default="quad")
    p.add_argument("--n-theta", type=int, default=None)
    p.add_argument("--n-phi", type=int, default=None)
    p.add_argument("--n", type=int, default=1_000_000, help="Monte Carlo sample count")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("density", help="histogram and empirical CDF of sampled widths")
    _add_source(p)
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=200)
    p.add_argument("--range", type=_floats, default=None, metavar="LO,HI")
    p.add_argument("--out", required=True, metavar="PREFIX",
                   help="writes PREFIX.hist.csv and PREFIX.ecdf.csv")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("width", help="width in one direction")
    _add_source(p)
    p.add_argument("--dir", type=_floats, required=True, metavar="X,Y[,Z]")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("extremes", help="minimum width and diameter")
    _add_source(p)
    p.add_argument("--coarse", type=int, default=64)
    p.add_argument("--refine-iters", type=int, default=60)
    p.set_defaults(func=cmd_extremes)

    p = sub.add_parser("analytic-tetra", help="tetrahedron E[w^2] from the sector integral")
    p.set_defaults(func=cmd_analytic_tetra)

    p = sub.add_parser("region-map", help="grid of the tetrahedron width surface and active terms")
    p.add_argument("--n-theta", type=int, default=181)
    p.add_argument("--n-phi", type=int, default=91)
    p.add_argument("--out", required=True, metavar="CSV")
    p.set_defaults(func=cmd_region_map)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "density" and args.range is not None and len(args.range) != 2:
        parser.error("--range needs exactly two numbers")
    try:
        return args.func(args)
    except (UsageError, PolytopeFileError, ContractViolation) as exc:
        print(f"widthlab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
