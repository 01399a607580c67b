"""
Main application launch file
"""
import argparse
import logging
import sys

from src.coefficients import get_available_entries
from src.cli import cmd_solve, cmd_experiment, get_available_experiments
from src.core.errors import SolverError
from src.core.logging_config import set_level


def _add_config_flags(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("solver configuration")
    group.add_argument("--k", type=int, help="Chebyshev nodes per interval (default 16)")
    group.add_argument("--eps", type=float, help="Requested precision (default 1e-12)")
    group.add_argument("--thresh", type=float, help="High-frequency threshold (default 10)")
    group.add_argument("--max-newton", type=int, dest="max_newton",
                       help="Newton iteration cap (default 20)")
    group.add_argument("--max-depth", type=int, dest="max_depth",
                       help="Bisection depth cap (default 60)")
    group.add_argument("--out-csv", dest="out_csv", help="CSV output path (default stdout)")
    group.add_argument("--show-config", action="store_true",
                       help="Print the effective configuration to stderr")
    group.add_argument("--verbose", action="store_true", help="Debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Frequency-independent phase-function solver for y'' + omega^2 q(t, omega) y = 0")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve one problem and write its solution as CSV")
    source = solve.add_mutually_exclusive_group(required=True)
    source.add_argument("--q", help="Coefficient expression in t and omega, e.g. '1 + t^2/2'")
    source.add_argument("--catalog", choices=get_available_entries(), help="Built-in coefficient")
    solve.add_argument("--param", action="append", metavar="NAME=VALUE",
                       help="Named parameter for --q or --catalog (repeatable)")
    solve.add_argument("--omega", type=float, required=True, help="Frequency")
    solve.add_argument("--a", type=float, required=True, help="Left endpoint")
    solve.add_argument("--b", type=float, required=True, help="Right endpoint")
    conditions = solve.add_mutually_exclusive_group()
    conditions.add_argument("--ivp", type=float, nargs=3, metavar=("T0", "Y0", "YP0"),
                            help="Initial conditions y(t0) = y0, y'(t0) = yp0")
    conditions.add_argument("--bvp", type=float, nargs=2, metavar=("YA", "YB"),
                            help="Boundary conditions y(a) = ya, y(b) = yb")
    points = solve.add_mutually_exclusive_group()
    points.add_argument("--eval-points", type=int, default=1000, dest="eval_points",
                        help="Number of equispaced evaluation points (default 1000)")
    points.add_argument("--eval-file", dest="eval_file", help="File with one evaluation point per line")
    solve.add_argument("--out-phase", dest="out_phase", help="Save the phase function (OSCPHASE 1)")
    _add_config_flags(solve)
    solve.set_defaults(handler=cmd_solve)

    experiment = sub.add_parser("experiment", help="Run an experiment and write its table as CSV")
    experiment.add_argument("name", choices=get_available_experiments())
    experiment.add_argument("--values", type=float, nargs="+",
                            help="Degrees n or frequencies omega (default: experiment range)")
    experiment.add_argument("--orders", type=float, nargs="+",
                            help="Gegenbauer orders (default -0.499 0.25 1.0)")
    experiment.add_argument("--runs", type=int, help="Timing runs per row (default 100)")
    experiment.add_argument("--workers", type=int, help="Rows computed concurrently (default 1)")
    _add_config_flags(experiment)
    experiment.set_defaults(handler=cmd_experiment)
    return parser


def main(argv=None) -> int:
    """Launches the command line"""
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)
    try:
        return args.handler(args)
    except SolverError as e:
        print(f"error: {e.name}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
