"""Command-line front end.

Subcommands
-----------
table1    denominator-factor comparison table (beta, theta, ratio)
example1  bounds versus actual error for the corner-family integrand
example2  bounds versus actual error for e^x
verify    run the identity/structure/exactness suites; nonzero exit on failure
rule      nodes and weights of one Gauss rule
coeffs    Chebyshev expansion coefficients of a named integrand
bound     direct evaluation of a single bound or factor row

Exit status: 0 success, 2 parameter error, 3 verification failure,
4 numerical non-convergence.  Output is deterministic: identical
configurations produce byte-identical csv/json reports.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Any, Sequence

from .bounds import (
    denominator_factors,
    gegenbauer_quadrature_bound,
    new_coeff_bound,
    new_quadrature_bound,
    trefethen_coeff_bound,
    xiang_quadrature_bound,
)
from .chebyshev import cheb_t
from .errors import NonConvergenceError
from .expansion import chebyshev_coefficients
from .reports import (
    DEFAULT_FACTOR_PAIRS,
    corner_experiment_rows,
    exp_experiment_rows,
    factor_table_rows,
    make_report,
    render_report,
)
from .rules import WeightSpec, golub_welsch
from .testbed import TestFunction, corner_family, exp_function
from .verify import run_suites

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_VERIFICATION = 3
EXIT_NONCONVERGENCE = 4


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadbound",
        description="Gauss rules, Chebyshev coefficients, and certified error bounds.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json", "pretty"), default="pretty",
        help="output format (default: pretty)",
    )
    common.add_argument("--out", metavar="PATH", help="write the report to PATH")
    common.add_argument(
        "--seedless", action="store_true",
        help="reserved: every computation is already deterministic, so this "
        "flag is rejected",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", parents=[common],
                       help="denominator-factor comparison table")
    p.add_argument("--N", type=_int_list, help="rule sizes (comma separated)")
    p.add_argument("--r", type=_int_list, help="orders, zipped with --N")
    p.add_argument("--paper-values", action="store_true",
                   help="append the published values (display only, never asserted)")

    p = sub.add_parser("example1", parents=[common],
                       help="corner-family integrand: bounds vs actual error")
    p.add_argument("--t", type=float, default=0.9, help="corner location (default 0.9)")
    p.add_argument("--j", type=int, default=4, help="corner order (default 4)")
    p.add_argument("--N", type=_int_list, default=[5, 10, 15, 20],
                   help="rule sizes (default 5,10,15,20)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5,
                   help="Gegenbauer weight parameter (default 0.5 = Legendre)")
    p.add_argument("--paper-values", action="store_true",
                   help="append the published values (display only, never asserted)")

    p = sub.add_parser("example2", parents=[common],
                       help="smooth integrand e^x: bounds vs actual error")
    p.add_argument("--r", type=int, default=4, help="derivative order (default 4)")
    p.add_argument("--N", type=_int_list, default=[5, 10, 15],
                   help="rule sizes (default 5,10,15)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5,
                   help="Gegenbauer weight parameter (default 0.5 = Legendre)")
    p.add_argument("--paper-values", action="store_true",
                   help="append the published values (display only, never asserted)")

    p = sub.add_parser("verify", parents=[common],
                       help="run the verification suites (exit 3 on failure)")
    p.add_argument("--N", dest="max_degree", type=int, default=40,
                   help="largest ladder degree (default 40)")
    p.add_argument("--r", dest="max_order", type=int, default=12,
                   help="largest ladder order (default 12)")
    p.add_argument("--perturb", action="store_true",
                   help="inject a deliberate ladder defect (negative control)")

    p = sub.add_parser("rule", parents=[common], help="nodes and weights of a Gauss rule")
    p.add_argument("weight", nargs="?", default=None,
                   help="weight alias: chebyshev1, legendre, chebyshev2")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="explicit Gegenbauer parameter (alternative to an alias)")
    p.add_argument("--N", type=int, required=True, help="rule size")

    p = sub.add_parser("coeffs", parents=[common],
                       help="Chebyshev expansion coefficients of an integrand")
    p.add_argument("function",
                   help="integrand: exp, corner (with --j/--t), or T<k>")
    p.add_argument("--M", type=int, default=20, help="truncation degree (default 20)")
    p.add_argument("--t", type=float, default=0.9, help="corner location (default 0.9)")
    p.add_argument("--j", type=int, default=4, help="corner order (default 4)")

    p = sub.add_parser("bound", parents=[common], help="evaluate one bound directly")
    p.add_argument("kind", choices=("table1-factor", "coeff", "quad"),
                   help="which quantity to evaluate")
    p.add_argument("--N", type=int, required=True,
                   help="rule size (for coeff: the coefficient index)")
    p.add_argument("--r", type=int, required=True, help="derivative order")
    p.add_argument("--function", default="exp",
                   help="profile source for coeff/quad: exp or corner")
    p.add_argument("--t", type=float, default=0.9, help="corner location (default 0.9)")
    p.add_argument("--j", type=int, default=4, help="corner order (default 4)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.5,
                   help="Gegenbauer weight parameter (default 0.5 = Legendre)")
    return parser


def _named_function(args: argparse.Namespace) -> TestFunction:
    name = args.function.strip().lower()
    if name == "exp":
        return exp_function()
    if name == "corner":
        return corner_family(args.j, args.t)
    raise ValueError(f"unknown profile source {args.function!r}; expected exp or corner")


def _cmd_table1(args: argparse.Namespace) -> dict[str, Any]:
    if (args.N is None) != (args.r is None):
        raise ValueError("--N and --r must be given together for table1")
    if args.N is None:
        pairs = DEFAULT_FACTOR_PAIRS
    else:
        if len(args.N) != len(args.r):
            raise ValueError("--N and --r must have the same length")
        pairs = tuple(zip(args.N, args.r))
    rows = factor_table_rows(pairs, published=args.paper_values)
    config = {"pairs": [list(p) for p in pairs], "paper_values": args.paper_values}
    return make_report("table1", config, rows=rows)


def _cmd_example1(args: argparse.Namespace) -> dict[str, Any]:
    weight = WeightSpec.gegenbauer(args.lam)
    rows = corner_experiment_rows(args.t, args.j, args.N, weight,
                                  published=args.paper_values)
    config = {
        "t": args.t, "j": args.j, "N_list": sorted(args.N),
        "weight": weight.name, "lambda": weight.lam,
        "paper_values": args.paper_values,
    }
    return make_report("example1", config, rows=rows)


def _cmd_example2(args: argparse.Namespace) -> dict[str, Any]:
    weight = WeightSpec.gegenbauer(args.lam)
    rows = exp_experiment_rows(args.r, args.N, weight, published=args.paper_values)
    config = {
        "r": args.r, "N_list": sorted(args.N),
        "weight": weight.name, "lambda": weight.lam,
        "paper_values": args.paper_values,
    }
    return make_report("example2", config, rows=rows)


def _cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    suites = run_suites(args.max_degree, args.max_order, perturb=args.perturb)
    config = {
        "max_degree": args.max_degree, "max_order": args.max_order,
        "perturb": args.perturb,
    }
    return make_report("verify", config, suites=suites)


def _cmd_rule(args: argparse.Namespace) -> dict[str, Any]:
    if (args.weight is None) == (args.lam is None):
        raise ValueError("give exactly one of a weight alias or --lambda")
    weight = (WeightSpec.from_name(args.weight) if args.weight is not None
              else WeightSpec.gegenbauer(args.lam))
    rule = golub_welsch(weight, args.N)
    rows = [
        {"node": x, "weight": w}
        for x, w in zip(rule.nodes.tolist(), rule.weights.tolist())
    ]
    config = {"weight": weight.name, "lambda": weight.lam, "N": args.N}
    return make_report("rule", config, rows=rows)


def _cmd_coeffs(args: argparse.Namespace) -> dict[str, Any]:
    name = args.function.strip()
    lowered = name.lower()
    config: dict[str, Any] = {"function": lowered, "M": args.M}
    if lowered == "exp":
        f = exp_function().evaluator
        points = None
    elif lowered == "corner":
        f = corner_family(args.j, args.t).evaluator
        points = 4096  # kinked integrand: oversample to suppress aliasing
        config.update({"j": args.j, "t": args.t})
    elif lowered.startswith("t") and lowered[1:].isdigit():
        degree = int(lowered[1:])
        f = lambda x: cheb_t(degree, x)
        points = None
        config["function"] = f"T{degree}"
    else:
        raise ValueError(f"unknown integrand {name!r}; expected exp, corner, or T<k>")
    expansion = chebyshev_coefficients(f, args.M, points=points)
    rows = [{"n": n, "a": float(a)} for n, a in enumerate(expansion.coeffs)]
    return make_report("coeffs", config, rows=rows)


def _cmd_bound(args: argparse.Namespace) -> dict[str, Any]:
    config: dict[str, Any] = {"kind": args.kind, "N": args.N, "r": args.r}
    if args.kind == "table1-factor":
        beta, theta, ratio = denominator_factors(args.N, args.r)
        rows = [{"N": args.N, "r": args.r, "beta": beta, "theta": theta,
                 "ratio": ratio}]
        return make_report("bound", config, rows=rows)
    function = _named_function(args)
    profile = function.profile(args.r)
    config["function"] = function.name
    if args.kind == "coeff":
        rows = [{
            "n": args.N, "r": args.r,
            "classical_bound": trefethen_coeff_bound(
                profile.weighted_var, args.r, args.N),
            "new_bound": new_coeff_bound(profile.total_var, args.r, args.N),
        }]
        return make_report("bound", config, rows=rows)
    weight = WeightSpec.gegenbauer(args.lam)
    config.update({"weight": weight.name, "lambda": weight.lam})
    rows = [{
        "N": args.N, "r": args.r,
        "classical_bound": xiang_quadrature_bound(
            profile.weighted_var, weight.norm(), args.N, args.r),
        "new_bound": new_quadrature_bound(
            profile.total_var, weight.norm(), args.N, args.r),
        "gegenbauer_bound": gegenbauer_quadrature_bound(
            profile.total_var, weight.lam, args.N, args.r),
    }]
    return make_report("bound", config, rows=rows)


_DISPATCH = {
    "table1": _cmd_table1,
    "example1": _cmd_example1,
    "example2": _cmd_example2,
    "verify": _cmd_verify,
    "rule": _cmd_rule,
    "coeffs": _cmd_coeffs,
    "bound": _cmd_bound,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seedless:
        print("error: --seedless is reserved; no randomness exists to disable",
              file=sys.stderr)
        return EXIT_PARAMETER
    try:
        report = _DISPATCH[args.command](args)
        rendered = render_report(report, args.format)
    except NonConvergenceError as exc:
        print(f"error: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    if args.command == "verify" and not all(s["passed"] for s in report["suites"]):
        return EXIT_VERIFICATION
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
