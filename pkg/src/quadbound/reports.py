"""Assembly and rendering of the reports emitted by the command line.

Every report is a plain dictionary with a fixed envelope (schema_version,
command, config, rows, suites) so that JSON output is stable and
machine-consumable.  CSV and JSON render numbers round-trip exactly; the
pretty renderer rounds the way the reference tables are typeset (three
significant digits for factors, one decimal for moderate ratios).

The PUBLISHED_* constants hold previously published reference values for
side-by-side display behind the --paper-values flag.  They are display
only and never asserted: recomputing the factor table from its defining
products contradicts four of the six published rows, and the recomputed
bound columns of the two experiment tables differ from the published ones
as well (see the README).
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Mapping, Sequence

from .bounds import new_quadrature_bound, xiang_quadrature_bound, denominator_factors
from .rules import WeightSpec, golub_welsch, integrate, reference_integral
from .testbed import TestFunction, corner_family, exp_function
from .verify import SuiteResult

__all__ = [
    "SCHEMA_VERSION",
    "DEFAULT_FACTOR_PAIRS",
    "PUBLISHED_FACTOR_TABLE",
    "PUBLISHED_CORNER_TABLE",
    "PUBLISHED_EXP_TABLE",
    "make_report",
    "factor_table_rows",
    "experiment_rows",
    "corner_experiment_rows",
    "exp_experiment_rows",
    "render_report",
]

SCHEMA_VERSION = 1

DEFAULT_FACTOR_PAIRS: tuple[tuple[int, int], ...] = (
    (10, 5),
    (20, 10),
    (30, 15),
    (10, 9),
    (20, 19),
    (30, 29),
)

# Published factor-table rows keyed by (N, r): (beta, theta, ratio) as printed.
PUBLISHED_FACTOR_TABLE: dict[tuple[int, int], tuple[str, str, str]] = {
    (10, 5): ("4.10e-07", "2.02e-07", "2.0"),
    (20, 10): ("2.88e-12", "1.14e-12", "2.5"),
    (30, 15): ("5.22e-20", "2.03e-20", "2.6"),
    (10, 9): ("9.38e-12", "1.08e-12", "8.7"),
    (20, 19): ("1.12e-25", "1.32e-28", "848.5"),
    (30, 29): ("1.23e-39", "4.96e-46", "2.48e+06"),
}

# Published corner-family experiment rows keyed by N:
# (classical bound, new bound, actual error, ratio) as printed.
PUBLISHED_CORNER_TABLE: dict[int, tuple[str, str, str, str]] = {
    5: ("1.24e-02", "6.78e-04", "3.21e-05", "18.3"),
    10: ("5.67e-04", "1.45e-05", "2.14e-07", "39.1"),
    15: ("7.89e-06", "9.22e-08", "4.57e-10", "85.6"),
    20: ("1.56e-07", "1.03e-09", "1.33e-12", "151.5"),
}

# Published smooth-integrand experiment rows keyed by N.
PUBLISHED_EXP_TABLE: dict[int, tuple[str, str, str]] = {
    5: ("3.41e-08", "8.72e-09", "2.14e-10"),
    10: ("4.52e-16", "6.31e-17", "<1e-18"),
    15: ("<1e-20", "<1e-21", "<1e-22"),
}


def make_report(
    command: str,
    config: Mapping[str, Any],
    rows: Sequence[Mapping[str, Any]] = (),
    suites: Sequence[SuiteResult] = (),
) -> dict[str, Any]:
    """Wrap rows/suites in the stable report envelope."""
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": dict(config),
        "rows": [dict(row) for row in rows],
        "suites": [
            {"name": s.name, "passed": s.passed, "worst_margin": s.worst_margin}
            for s in suites
        ],
    }


def factor_table_rows(
    pairs: Iterable[tuple[int, int]] = DEFAULT_FACTOR_PAIRS,
    published: bool = False,
) -> list[dict[str, Any]]:
    """Denominator-factor comparison rows: N, r, beta, theta, ratio, r/(N-1)."""
    rows = []
    for n_points, r in pairs:
        beta, theta, ratio = denominator_factors(n_points, r)
        row: dict[str, Any] = {
            "N": n_points,
            "r": r,
            "beta": beta,
            "theta": theta,
            "ratio": ratio,
            "r_over_n_minus_1": r / (n_points - 1) if n_points > 1 else math.inf,
        }
        if published:
            pub = PUBLISHED_FACTOR_TABLE.get((n_points, r))
            row["published_beta"] = pub[0] if pub else ""
            row["published_theta"] = pub[1] if pub else ""
            row["published_ratio"] = pub[2] if pub else ""
        rows.append(row)
    return rows


def experiment_rows(
    function: TestFunction,
    order: int,
    n_list: Sequence[int],
    weight: WeightSpec,
) -> list[dict[str, Any]]:
    """Bound-versus-actual rows for one integrand at one derivative order.

    Columns: classical bound (needs the weighted variation, +inf when it
    diverges), the sharper bound (plain variation), the measured error
    against the cached 500-point reference rule, and their ratio.
    """
    profile = function.profile(order)
    w_norm = weight.norm()
    truth = reference_integral(weight, function.evaluator)
    rows = []
    for n_points in sorted(n_list):
        rule = golub_welsch(weight, n_points)
        actual = abs(truth - integrate(rule, function.evaluator))
        classical = xiang_quadrature_bound(
            profile.weighted_var, w_norm, n_points, order
        )
        new = new_quadrature_bound(profile.total_var, w_norm, n_points, order)
        rows.append(
            {
                "N": n_points,
                "r": order,
                "classical_bound": classical,
                "new_bound": new,
                "actual_error": actual,
                "ratio": classical / new if math.isfinite(classical) else math.inf,
            }
        )
    return rows


def corner_experiment_rows(
    t: float,
    j: int,
    n_list: Sequence[int],
    weight: WeightSpec,
    published: bool = False,
) -> list[dict[str, Any]]:
    """Experiment rows for the corner-family integrand at order r = j."""
    rows = experiment_rows(corner_family(j, t), j, n_list, weight)
    if published:
        for row in rows:
            pub = PUBLISHED_CORNER_TABLE.get(row["N"])
            row["published_classical"] = pub[0] if pub else ""
            row["published_new"] = pub[1] if pub else ""
            row["published_actual"] = pub[2] if pub else ""
            row["published_ratio"] = pub[3] if pub else ""
    return rows


def exp_experiment_rows(
    order: int,
    n_list: Sequence[int],
    weight: WeightSpec,
    published: bool = False,
) -> list[dict[str, Any]]:
    """Experiment rows for the smooth integrand e^x at the given order."""
    rows = experiment_rows(exp_function(), order, n_list, weight)
    if published:
        for row in rows:
            pub = PUBLISHED_EXP_TABLE.get(row["N"])
            row["published_classical"] = pub[0] if pub else ""
            row["published_new"] = pub[1] if pub else ""
            row["published_actual"] = pub[2] if pub else ""
    return rows


def render_report(report: Mapping[str, Any], fmt: str) -> str:
    """Render a report as json, csv, or a pretty text table."""
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "pretty":
        return _render_pretty(report)
    raise ValueError(f"unknown output format {fmt!r}")


def _csv_cell(value: Any) -> Any:
    if isinstance(value, float):
        return format(value, ".17g")
    return value


def _render_csv(report: Mapping[str, Any]) -> str:
    records = report["rows"] or report["suites"]
    out = io.StringIO()
    if records:
        writer = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow({k: _csv_cell(v) for k, v in record.items()})
    return out.getvalue()


def _sig3(value: float) -> str:
    if value != value or math.isinf(value):
        return "inf" if value > 0 else str(value)
    return format(value, ".2e")


def _ratio_str(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return format(value, ".1f") if value < 1000.0 else format(value, ".3g")


_PRETTY_FORMATS = {
    "beta": _sig3,
    "theta": _sig3,
    "classical_bound": _sig3,
    "new_bound": _sig3,
    "actual_error": _sig3,
    "ratio": _ratio_str,
    "r_over_n_minus_1": lambda v: format(v, ".2f"),
    "worst_margin": lambda v: format(v, ".3g"),
    "node": lambda v: format(v, ".16e"),
    "weight": lambda v: format(v, ".16e"),
    "a": lambda v: format(v, ".16e"),
    "value": lambda v: format(v, ".16e"),
}


def _pretty_cell(key: str, value: Any) -> str:
    if isinstance(value, float):
        return _PRETTY_FORMATS.get(key, lambda v: format(v, "g"))(value)
    return str(value)


def _render_table(records: Sequence[Mapping[str, Any]]) -> str:
    headers = list(records[0])
    cells = [[_pretty_cell(k, row[k]) for k in headers] for row in records]
    widths = [
        max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_pretty(report: Mapping[str, Any]) -> str:
    header = f"# {report['command']}  (schema v{report['schema_version']})\n"
    config = ", ".join(f"{k}={v}" for k, v in report["config"].items())
    body = ""
    if report["rows"]:
        body += _render_table(report["rows"])
    if report["suites"]:
        body += _render_table(report["suites"])
    if not body:
        body = "(empty report)\n"
    return header + (f"# {config}\n" if config else "") + body
