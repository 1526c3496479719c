"""Coefficient-decay and quadrature error bounds, and their denominator factors.

Two regularity functionals drive everything here: the plain variation
u = integral of |f^(r+1)| over [-1, 1], and the Chebyshev-weighted variation
v = integral of |f^(r+1)| / sqrt(1-x^2).  The classical coefficient and
quadrature bounds (Trefethen, Xiang) need v; the sharper bounds certified by
this package need only u and carry strictly smaller denominator products.
Divergent weighted variation is represented by +infinity and propagates
through the classical bounds, marking them unavailable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # circular at runtime: rules imports the weight norm from here
    from .rules import WeightSpec

__all__ = [
    "RegularityProfile",
    "BoundReport",
    "trefethen_coeff_bound",
    "new_coeff_bound",
    "xiang_quadrature_bound",
    "new_quadrature_bound",
    "gegenbauer_quadrature_bound",
    "gegenbauer_weight_norm",
    "denominator_factors",
    "denominator_factors_exact",
]


@dataclass(frozen=True)
class RegularityProfile:
    """Regularity data of one integrand at derivative order ``order``.

    ``total_var`` is the variation of f^(order) (the integral of
    |f^(order+1)|, including any jump masses); ``weighted_var`` is the same
    integral against the Chebyshev weight and may be math.inf when the mass
    sits at the endpoints.  Either entry may be None when unavailable.
    """

    order: int
    total_var: float | None
    weighted_var: float | None

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        u, v = self.total_var, self.weighted_var
        if u is not None and u < 0:
            raise ValueError("total_var must be nonnegative")
        if v is not None and v < 0:
            raise ValueError("weighted_var must be nonnegative")
        # The Chebyshev weight is >= 1 on [-1, 1], so u <= v whenever both
        # are finite; allow a whisker of slack for numerically computed pairs.
        if u is not None and v is not None and math.isfinite(v):
            if u > v * (1.0 + 1e-9):
                raise ValueError(f"total_var {u} exceeds weighted_var {v}")


@dataclass(frozen=True)
class BoundReport:
    """All bound values plus the measured error for one experiment row."""

    n_points: int
    order: int
    classical_bound: float
    new_bound: float
    actual_error: float
    weight: "WeightSpec"
    gegenbauer_bound: float | None = None

    def __post_init__(self) -> None:
        for name in ("classical_bound", "new_bound", "actual_error"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.gegenbauer_bound is not None and self.gegenbauer_bound < 0:
            raise ValueError("gegenbauer_bound must be nonnegative")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def trefethen_coeff_bound(v: float, r: int, n: int) -> float:
    """Classical coefficient bound 2*v / (pi * n(n-1)...(n-r)).

    Needs the weighted variation v of f^(r); valid for n >= r+1.
    Returns +inf when v is +inf.
    """
    _require(r >= 0, "order r must be nonnegative")
    _require(n >= r + 1, f"index n={n} must be at least r+1={r + 1}")
    _require(v >= 0, "variation must be nonnegative")
    if math.isinf(v):
        return math.inf
    prod = 1.0
    for j in range(r + 1):
        prod *= n - j
    return 2.0 * v / (math.pi * prod)


def new_coeff_bound(u: float, r: int, n: int) -> float:
    """Sharper coefficient bound 2*u / (pi * prod_{j=0..r} (n-r+2j)).

    Needs only the plain variation u of f^(r); valid for n >= r+1.  At r=0
    the denominator products coincide and this equals the classical bound.
    """
    _require(r >= 0, "order r must be nonnegative")
    _require(n >= r + 1, f"index n={n} must be at least r+1={r + 1}")
    _require(u >= 0, "variation must be nonnegative")
    prod = 1.0
    for j in range(r + 1):
        prod *= n - r + 2 * j
    return 2.0 * u / (math.pi * prod)


def _xiang_product(n_points: int, r: int) -> int:
    """(2N+1) * 2N * ... * (2N-r+2): exactly r descending factors."""
    out = 1
    for k in range(r):
        out *= 2 * n_points + 1 - k
    return out


def _tail_product(n_points: int, r: int) -> int:
    """prod_{j=1..r} (2N - r + 2j + 1): r ascending odd-step factors."""
    out = 1
    for j in range(1, r + 1):
        out *= 2 * n_points - r + 2 * j + 1
    return out


def _check_quadrature_args(n_points: int, r: int) -> None:
    _require(n_points >= 1, "rule size must be positive")
    _require(1 <= r <= 2 * n_points - 1, f"order r={r} must satisfy 1 <= r <= 2N-1")


def xiang_quadrature_bound(v: float, w_norm: float, n_points: int, r: int) -> float:
    """Classical quadrature error bound 4*v*|w|_1 / (pi * r * (2N+1)...(2N-r+2)).

    Returns +inf when the weighted variation v diverges.
    """
    _check_quadrature_args(n_points, r)
    _require(v >= 0, "variation must be nonnegative")
    _require(w_norm > 0, "weight norm must be positive")
    if math.isinf(v):
        return math.inf
    return 4.0 * v * w_norm / (math.pi * r * _xiang_product(n_points, r))


def new_quadrature_bound(u: float, w_norm: float, n_points: int, r: int) -> float:
    """Sharper quadrature error bound 4*u*|w|_1 / (r*pi*prod(2N-r+2j+1))."""
    _check_quadrature_args(n_points, r)
    _require(u >= 0, "variation must be nonnegative")
    _require(w_norm > 0, "weight norm must be positive")
    return 4.0 * u * w_norm / (r * math.pi * _tail_product(n_points, r))


def gegenbauer_quadrature_bound(u: float, lam: float, n_points: int, r: int) -> float:
    """Gegenbauer-rule error bound: half the general one at the same norm.

    Odd Chebyshev modes integrate to zero on both sides of a symmetric rule,
    so only even modes contribute and the leading factor drops from 4 to 2.
    """
    _check_quadrature_args(n_points, r)
    _require(u >= 0, "variation must be nonnegative")
    w_norm = gegenbauer_weight_norm(lam)
    return 2.0 * u * w_norm / (r * math.pi * _tail_product(n_points, r))


def gegenbauer_weight_norm(lam: float) -> float:
    """Integral of (1-x^2)^(lam-1/2) over [-1, 1], via the Gamma closed form.

    Equals sqrt(pi) * Gamma(lam+1/2) / Gamma(lam+1); defined for lam > -1/2.
    Note the Legendre value (lam = 1/2) is exactly 2, the measure of the
    interval.
    """
    _require(lam > -0.5, "Gegenbauer parameter must exceed -1/2")
    return math.sqrt(math.pi) * math.gamma(lam + 0.5) / math.gamma(lam + 1.0)


def denominator_factors(n_points: int, r: int) -> tuple[float, float, float]:
    """(beta, theta, beta/theta) comparing the two bound denominators.

    beta is the reciprocal classical product, theta the reciprocal sharper
    product; theta < beta always, so the ratio exceeds 1 and grows as r
    approaches the rule size.
    """
    beta_exact, theta_exact, ratio_exact = denominator_factors_exact(n_points, r)
    return float(beta_exact), float(theta_exact), float(ratio_exact)


def denominator_factors_exact(
    n_points: int, r: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact-rational version of denominator_factors, for golden comparisons."""
    _check_quadrature_args(n_points, r)
    xp = _xiang_product(n_points, r)
    tp = _tail_product(n_points, r)
    return Fraction(1, xp), Fraction(1, tp), Fraction(tp, xp)
