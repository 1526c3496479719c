"""Executable verification suites: polynomial identities, ladder structure,
coefficient envelopes, and rule exactness/parity.

Each suite reports the worst fraction of its tolerance that any single
check consumed (so values below 1 pass); suites whose checks are exact
rational identities report 0.0 on success and infinity on failure.  The
``perturb`` hook deliberately corrupts one ladder denominator so the
negative-control path of the command line can be exercised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import chebyshev as cheb
from .bounds import new_coeff_bound
from .expansion import chebyshev_coefficients
from .rules import (
    WeightSpec,
    chebyshev_rule,
    golub_welsch,
    integrate,
    weight_moment,
)
from .testbed import corner_family, exp_function

__all__ = ["SuiteResult", "run_suites"]


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    worst_margin: float  # fraction of tolerance consumed; >= 1 means failure
    detail: str = field(default="", compare=False)


def _toleranced(name: str, worst: float, detail: str = "") -> SuiteResult:
    return SuiteResult(name=name, passed=worst < 1.0, worst_margin=worst, detail=detail)


def _exact(name: str, failures: list[str]) -> SuiteResult:
    if failures:
        return SuiteResult(
            name=name,
            passed=False,
            worst_margin=math.inf,
            detail="; ".join(failures[:3]),
        )
    return SuiteResult(name=name, passed=True, worst_margin=0.0)


def _uniform_bound_suite() -> SuiteResult:
    tol = 1e-14
    xs = np.linspace(-1.0, 1.0, 1000)
    worst = 0.0
    for n in range(0, 201):
        for x in xs:
            excess = abs(cheb.cheb_t(n, float(x))) - 1.0
            if excess > worst:
                worst = excess
    return _toleranced("cheb-uniform-bound", worst / tol)


def _three_term_suite() -> SuiteResult:
    # (1-x^2) T_n' - (n/2)(T_{n-1} - T_{n+1}) with T_n' from the recurrence
    # oracle and T_{n+-1} from the trig form: a genuine cross-path check.
    tol = 1e-11
    xs = np.linspace(-0.99, 0.99, 101)
    worst = 0.0
    for n in range(1, 101):
        for x in xs:
            x = float(x)
            lhs = (1.0 - x * x) * cheb.cheb_t_derivative_recurrence(n, x)
            rhs = 0.5 * n * (cheb.cheb_t(n - 1, x) - cheb.cheb_t(n + 1, x))
            worst = max(worst, abs(lhs - rhs))
    return _toleranced("cheb-three-term-derivative", worst / tol)


def _sturm_liouville_suite() -> SuiteResult:
    # sqrt(1-x^2) (sqrt(1-x^2) T_n')' reduces analytically to -n^2 cos(n acos x),
    # so the residual compares the recurrence-evaluated polynomial against the
    # trigonometric closed form, scaled by n^2.
    tol = 1e-9
    xs = np.linspace(-0.95, 0.95, 77)
    worst = 0.0
    for n in range(1, 51):
        n2 = float(n * n)
        for x in xs:
            x = float(x)
            derivative_term = -n2 * math.cos(n * math.acos(x))
            residual = derivative_term + n2 * cheb.cheb_t_recurrence(n, x)
            worst = max(worst, abs(residual))
    return _toleranced("cheb-sturm-liouville", worst / tol)


def _weak_form_suite() -> SuiteResult:
    # Analytic form of the scaled-mode derivative: 𝒯_n' = -T_n / sqrt(1-x^2).
    # Part one multiplies back by sqrt(1-x^2) (tolerance 1e-11); part two
    # cross-checks the analytic derivative by central differences.
    tol_analytic = 1e-11
    tol_fd = 1e-5
    h = 1e-6
    worst = 0.0
    xs = np.linspace(-0.9, 0.9, 21)
    for n in range(1, 51):
        for x in xs:
            x = float(x)
            s = math.sqrt(1.0 - x * x)
            analytic = -cheb.cheb_t(n, x) / s
            residual = analytic * s + cheb.cheb_t(n, x)
            worst = max(worst, abs(residual) / tol_analytic)
            fd = (cheb.cheb_t_scaled(n, x + h) - cheb.cheb_t_scaled(n, x - h)) / (2 * h)
            worst = max(worst, abs(fd - analytic) / tol_fd)
    return _toleranced("cheb-weak-form", worst)


def _ladder_structure_suite(max_degree: int, max_order: int, perturb: bool) -> SuiteResult:
    failures: list[str] = []
    for n in range(2, max_degree + 1):
        for r in range(1, min(max_order, n - 1) + 1):
            comb = cheb.ladder_expansion(n, r)
            ladder = cheb.beta_ladder(n, r)
            betas = list(ladder.betas)
            if perturb and n == 2 and r == 1:
                betas[0] *= 2  # negative-control hook: flip one denominator
            expected_support = set(range(n - r, n + r + 1, 2))
            if not set(comb.support()) <= expected_support:
                failures.append(f"support escape at (n={n}, r={r})")
            lo, hi = cheb.min_beta(n, r), cheb.max_beta(n, r)
            if betas[0] != lo or betas[1] != lo:
                failures.append(f"descending closed form broken at (n={n}, r={r})")
            if betas[-1] != hi or betas[-2] != hi:
                failures.append(f"ascending closed form broken at (n={n}, r={r})")
            if any(betas[2 * k] != betas[2 * k + 1] for k in range(len(betas) // 2)):
                failures.append(f"pairwise equality broken at (n={n}, r={r})")
            if any(not lo <= b <= hi for b in betas):
                failures.append(f"denominator range broken at (n={n}, r={r})")
            from fractions import Fraction

            if comb.coefficient(n + r) != Fraction(1, hi):
                failures.append(f"top coefficient mismatch at (n={n}, r={r})")
            if comb.coefficient(n - r) != Fraction((-1) ** r, lo):
                failures.append(f"bottom coefficient mismatch at (n={n}, r={r})")
            # Merged coefficients must equal the signed per-mode ladder mass.
            mass: dict[int, Fraction] = {}
            for beta, mode, sign in zip(betas, ladder.modes(), ladder.signs()):
                mass[mode] = mass.get(mode, Fraction(0)) + Fraction(sign, beta)
            if dict(comb.items()) != {m: c for m, c in mass.items() if c}:
                failures.append(f"merged/unmerged mismatch at (n={n}, r={r})")
    return _exact("ladder-structure", failures)


def _ladder_sum_suite(max_degree: int, max_order: int) -> SuiteResult:
    failures = []
    for n in range(2, max_degree + 1):
        for r in range(1, min(max_order, n - 1) + 1):
            lhs, rhs = cheb.ladder_sum_identity(n, r)
            if lhs != rhs:
                failures.append(f"identity broken at (n={n}, r={r}): {lhs} != {rhs}")
    return _exact("ladder-sum-identity", failures)


def _coefficient_envelope_suite() -> SuiteResult:
    tolerance_factor = 1.0 + 1e-6
    cases = [
        (corner_family(4, 0.9), [4], 4096),
        (exp_function(), [1, 2, 3, 4, 5, 6], None),
    ]
    worst = 0.0
    where = ""
    for function, orders, points in cases:
        coeffs = chebyshev_coefficients(function.evaluator, 200, points=points).coeffs
        for r in orders:
            u = function.profile(r).total_var
            for n in range(r + 1, 201):
                ratio = abs(coeffs[n]) / new_coeff_bound(u, r, n)
                if ratio > worst:
                    worst, where = ratio, f"{function.name}, r={r}, n={n}"
    return _toleranced(
        "coefficient-envelope", worst / tolerance_factor, f"tightest at {where}"
    )


_SUITE_WEIGHTS = (
    WeightSpec.chebyshev1(),
    WeightSpec.legendre(),
    WeightSpec.chebyshev2(),
    WeightSpec.gegenbauer(2.5),
)


def _exactness_suite() -> SuiteResult:
    tol = 1e-11
    worst = 0.0
    for weight in _SUITE_WEIGHTS:
        for n in range(1, 21):
            rule = golub_welsch(weight, n)
            for k in range(2 * n):
                moment = weight_moment(weight, k)
                scale = moment if k % 2 == 0 else weight_moment(weight, k - 1)
                err = abs(integrate(rule, lambda x: x**k) - moment)
                worst = max(worst, err / (tol * scale))
    return _toleranced("rule-exactness", worst)


def _parity_suite() -> SuiteResult:
    tol = 1e-13
    worst = 0.0
    for lam in (0.0, 0.5, 1.0, 2.5):
        weight = WeightSpec.gegenbauer(lam)
        for n in range(1, 21):
            rule = golub_welsch(weight, n)
            for j in range(1, 4 * n + 2, 2):
                value = abs(integrate(rule, lambda x: cheb.cheb_t(j, x)))
                worst = max(worst, value)
    return _toleranced("rule-odd-parity", worst / tol)


def _interlacing_suite() -> SuiteResult:
    failures = []
    for weight in _SUITE_WEIGHTS[:3]:
        prev = golub_welsch(weight, 1)
        for n in range(1, 51):
            cur = golub_welsch(weight, n + 1)
            small, large = prev.nodes, cur.nodes
            ok = all(large[i] < small[i] < large[i + 1] for i in range(n))
            if not ok:
                failures.append(f"interlacing broken for {weight.name} at N={n}")
            prev = cur
    return _exact("rule-interlacing", failures)


def _chebyshev_oracle_suite() -> SuiteResult:
    tol = 1e-13
    worst = 0.0
    for n in range(1, 41):
        solved = golub_welsch(WeightSpec.chebyshev1(), n)
        closed = chebyshev_rule(n)
        worst = max(worst, float(np.max(np.abs(solved.nodes - closed.nodes))))
        worst = max(worst, float(np.max(np.abs(solved.weights - closed.weights))))
    return _toleranced("rule-chebyshev-closed-form", worst / tol)


def run_suites(
    max_degree: int = 40, max_order: int = 12, perturb: bool = False
) -> list[SuiteResult]:
    """Run every verification suite and return one result per suite.

    ``max_degree`` and ``max_order`` bound the exact ladder grids; the
    floating-point identity sweeps use their own fixed ranges.  Raises
    ValueError when the grid is empty or inconsistent.
    """
    if max_degree < 2:
        raise ValueError("max degree must be at least 2")
    if not 1 <= max_order <= max_degree - 1:
        raise ValueError(
            f"max order {max_order} must satisfy 1 <= max_order <= max_degree-1"
        )
    return [
        _uniform_bound_suite(),
        _three_term_suite(),
        _sturm_liouville_suite(),
        _weak_form_suite(),
        _ladder_structure_suite(max_degree, max_order, perturb),
        _ladder_sum_suite(max_degree, max_order),
        _coefficient_envelope_suite(),
        _exactness_suite(),
        _parity_suite(),
        _interlacing_suite(),
        _chebyshev_oracle_suite(),
    ]
