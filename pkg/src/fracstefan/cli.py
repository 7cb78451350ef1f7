"""Command-line front end.

Results go to stdout as JSON (profiles to a CSV file). Exit codes:
0 success, 1 usage or validation error, 2 restriction violated,
3 numerical failure (non-convergence or special-function domain).
"""

import argparse
import csv
import json
import sys

from . import classical, inverse, solution, verify
from .errors import ConvergenceError, DomainError, RestrictionError, ValidationError
from .inverse import ThermalData, UnknownCoefficient

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESTRICTION = 2
EXIT_NUMERIC = 3

_COEFFICIENTS = ("k", "rho", "c", "ell")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would exit with status 2, which is reserved for restriction failures
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _alpha_list(text):
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("alpha list is empty")
    return values


def _add_data(p, alpha=True, q0=True):
    if alpha:
        p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--tm", type=float, required=True)
    for name in _COEFFICIENTS:
        p.add_argument(f"--{name}", type=float)
    if q0:
        p.add_argument("--q0", type=float)
    p.add_argument("--tol", type=float, default=inverse.DEFAULT_TOL)


def build_parser():
    parser = _Parser(prog="fracstefan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="recover one unknown coefficient")
    p.add_argument("--case", required=True, choices=[u.value for u in UnknownCoefficient])
    _add_data(p)

    p = sub.add_parser("forward", help="compute xi and q0 from all four coefficients")
    _add_data(p, q0=False)

    p = sub.add_parser("check", help="evaluate the solvability restriction")
    p.add_argument("--case", required=True, choices=[u.value for u in UnknownCoefficient])
    _add_data(p)

    p = sub.add_parser("profile", help="write T(x, t) and s(t) samples to CSV")
    _add_data(p, q0=False)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--nt", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("limit", help="compare fractional solutions with alpha = 1")
    p.add_argument("--case", required=True, choices=[u.value for u in UnknownCoefficient])
    p.add_argument("--alphas", type=_alpha_list, required=True)
    _add_data(p, alpha=False)

    p = sub.add_parser("residual", help="Caputo residual refinement study")
    _add_data(p, q0=False)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--tend", type=float, required=True)
    p.add_argument("--nsteps", type=int, required=True)
    p.add_argument("--levels", type=int, default=3)
    return parser


def _data(args, alpha=None):
    return ThermalData(
        alpha=args.alpha if alpha is None else alpha,
        t0=args.t0,
        tm=args.tm,
        k=args.k,
        rho=args.rho,
        c=args.c,
        ell=args.ell,
        q0=getattr(args, "q0", None),
    )


def _case_data(args, alpha=None):
    if getattr(args, args.case) is not None:
        raise ValidationError(f"--{args.case} is the unknown and must be omitted")
    return _data(args, alpha)


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2))
    out.write("\n")


def _cmd_solve(args, out):
    res = inverse.solve_case(args.case, _case_data(args), tol=args.tol)
    _emit({
        "case": res.case.value,
        "alpha": args.alpha,
        "xi": res.xi,
        "coefficient": res.coefficient,
        "lambda": res.lambda_,
        "restriction_margin": res.restriction_margin,
    }, out)


def _cmd_forward(args, out):
    fwd = inverse.forward_problem(_data(args), tol=args.tol)
    _emit({"xi": fwd.xi, "q0": fwd.q0, "lambda": fwd.lambda_}, out)


def _cmd_check(args, out):
    margin = inverse.restriction(args.case, _case_data(args))
    _emit({"restriction_margin": margin, "solvable": margin < 1.0}, out)


def _cmd_profile(args, out):
    sol = solution.StefanSolution.from_data(_data(args))
    grid = solution.GridSpec.uniform(args.xmax, args.tmax, args.nx, args.nt)
    prof = solution.emit_profile(sol, grid)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "x", "T", "s_of_t"])
        for i, t in enumerate(prof.times):
            for j, x in enumerate(prof.positions):
                writer.writerow([repr(float(t)), repr(float(x)),
                                 repr(float(prof.temperatures[i, j])),
                                 repr(float(prof.front[i]))])
    _emit({
        "out": args.out,
        "rows": int(prof.temperatures.size),
        "xi": sol.xi,
        "q0": sol.q0,
        "clamped": prof.clamped,
    }, out)


def _cmd_limit(args, out):
    rows = classical.limit_compare(
        args.case, _case_data(args, alpha=1.0), args.alphas, tol=args.tol
    )
    _emit([
        {"alpha": r.alpha, "xi": r.xi, "two_mu": r.two_mu,
         "xi_gap": r.xi_gap, "coeff_gap": r.coeff_gap}
        for r in rows
    ], out)


def _cmd_residual(args, out):
    if args.levels < 1:
        raise ValidationError("--levels must be >= 1")
    sol = solution.StefanSolution.from_data(_data(args))
    study = verify.pde_residual_study(sol, args.x, args.tend, args.nsteps, args.levels)
    _emit([{"nsteps": n, "residual": r} for n, r in study], out)


_COMMANDS = {
    "solve": _cmd_solve,
    "forward": _cmd_forward,
    "check": _cmd_check,
    "profile": _cmd_profile,
    "limit": _cmd_limit,
    "residual": _cmd_residual,
}


def run(argv=None, out=None, err=None):
    """Execute one command and return its exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    try:
        _COMMANDS[args.command](args, out)
    except RestrictionError as exc:
        _emit({"error": "restriction", "case": exc.case,
               "restriction_margin": exc.margin, "message": str(exc)}, out)
        return EXIT_RESTRICTION
    except ValidationError as exc:
        _emit({"error": "validation", "message": str(exc)}, out)
        return EXIT_USAGE
    except (ConvergenceError, DomainError) as exc:
        _emit({"error": "numeric", "message": str(exc)}, out)
        return EXIT_NUMERIC
    except OSError as exc:
        _emit({"error": "io", "message": str(exc)}, out)
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run())
