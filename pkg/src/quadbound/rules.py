"""Gauss rule construction for Gegenbauer-class weights on [-1, 1].

Nodes and weights come from the Golub-Welsch eigenproblem of the Jacobi
matrix built from the monic three-term recurrence coefficients; the
tridiagonal eigensolver is the in-repo implicit QL (tridiag module).
Closed-form Gauss-Chebyshev rules are kept alongside as an independent
oracle for the eigensolver, and a cached 500-point rule per weight serves
as the ground-truth reference integrator for actual-error columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .bounds import gegenbauer_weight_norm
from .tridiag import eigh_tridiagonal_first

__all__ = [
    "WeightSpec",
    "QuadratureRule",
    "recurrence_coefficients",
    "golub_welsch",
    "chebyshev_rule",
    "integrate",
    "reference_rule",
    "reference_integral",
    "weight_moment",
    "REFERENCE_SIZE",
]

REFERENCE_SIZE = 500

_ALIASES = {"chebyshev1": 0.0, "legendre": 0.5, "chebyshev2": 1.0}


@dataclass(frozen=True)
class WeightSpec:
    """Gegenbauer weight (1-x^2)^(lam-1/2) on [-1, 1], lam > -1/2.

    lam = 0, 1/2, 1 give the Chebyshev (first kind), Legendre and Chebyshev
    (second kind) weights respectively.
    """

    lam: float

    def __post_init__(self) -> None:
        if not self.lam > -0.5:
            raise ValueError(f"Gegenbauer parameter {self.lam} must exceed -1/2")

    @classmethod
    def chebyshev1(cls) -> "WeightSpec":
        return cls(0.0)

    @classmethod
    def legendre(cls) -> "WeightSpec":
        return cls(0.5)

    @classmethod
    def chebyshev2(cls) -> "WeightSpec":
        return cls(1.0)

    @classmethod
    def gegenbauer(cls, lam: float) -> "WeightSpec":
        return cls(float(lam))

    @classmethod
    def from_name(cls, name: str) -> "WeightSpec":
        try:
            return cls(_ALIASES[name.strip().lower()])
        except KeyError:
            raise ValueError(
                f"unknown weight alias {name!r}; expected one of {sorted(_ALIASES)}"
            ) from None

    @property
    def name(self) -> str:
        for alias, lam in _ALIASES.items():
            if self.lam == lam:
                return alias
        return f"gegenbauer({self.lam:g})"

    def norm(self) -> float:
        """L1 norm of the weight over [-1, 1]."""
        return gegenbauer_weight_norm(self.lam)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights of a Gauss rule for ``weight``.

    Nodes are strictly increasing in the open interval (-1, 1) and exactly
    antisymmetric about 0; weights are symmetric and sum to the weight norm.
    """

    weight: WeightSpec
    nodes: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return len(self.nodes)

    def validate(self) -> None:
        """Raise ValueError on the first violated rule invariant."""
        x, w = self.nodes, self.weights
        n = len(x)
        if len(w) != n or n == 0:
            raise ValueError("nodes and weights must be nonempty and equal length")
        if not (np.all(np.diff(x) > 0)):
            raise ValueError("nodes must be strictly increasing")
        if not (x[0] > -1.0 and x[-1] < 1.0):
            raise ValueError("nodes must lie in the open interval (-1, 1)")
        if not np.all(w > 0):
            raise ValueError("weights must be positive")
        norm = self.weight.norm()
        if abs(math.fsum(w) - norm) > 1e-12 * norm:
            raise ValueError("weights must sum to the weight norm")
        if np.max(np.abs(x + x[::-1])) > 1e-13:
            raise ValueError("nodes must be antisymmetric about 0")
        if np.max(np.abs(w - w[::-1])) > 1e-13 * np.max(w):
            raise ValueError("weights must be symmetric")


def recurrence_coefficients(weight: WeightSpec, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Monic three-term recurrence coefficients (alphas, betas), length n each.

    By symmetry every alpha vanishes; beta_0 is the weight norm and the
    remaining betas follow the standard Jacobi closed form with both
    exponents equal to lam - 1/2.
    """
    if n < 1:
        raise ValueError("rule size must be positive")
    lam = weight.lam
    betas = np.empty(n)
    betas[0] = weight.norm()
    if n > 1:
        betas[1] = 1.0 / (2.0 * lam + 2.0)
    for k in range(2, n):
        betas[k] = k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0))
    return np.zeros(n), betas


def golub_welsch(weight: WeightSpec, n: int) -> QuadratureRule:
    """Gauss rule of size n for ``weight`` via the Golub-Welsch eigenproblem.

    Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix and
    each weight is beta_0 times the squared first eigenvector component.
    The output is sorted and averaged across +-pairs so node antisymmetry
    and weight symmetry hold exactly, removing eigen-ordering jitter from
    golden tests.

    Raises NonConvergenceError if the QL iteration cap is exceeded.
    """
    alphas, betas = recurrence_coefficients(weight, n)
    values, first = eigh_tridiagonal_first(alphas, np.sqrt(betas[1:]))
    order = sorted(range(n), key=values.__getitem__)
    x = [values[k] for k in order]
    w = [betas[0] * first[k] * first[k] for k in order]
    nodes = np.array([0.5 * (x[i] - x[n - 1 - i]) for i in range(n)])
    weights = np.array([0.5 * (w[i] + w[n - 1 - i]) for i in range(n)])
    rule = QuadratureRule(weight=weight, nodes=nodes, weights=weights)
    rule.validate()
    return rule


def chebyshev_rule(n: int) -> QuadratureRule:
    """Closed-form Gauss-Chebyshev rule: nodes cos((2i-1)pi/2n), weights pi/n.

    Independent oracle for the eigensolver path; golub_welsch output stays
    canonical.
    """
    if n < 1:
        raise ValueError("rule size must be positive")
    i = np.arange(1, n + 1)
    nodes = np.cos((2.0 * i - 1.0) * math.pi / (2.0 * n))[::-1].copy()
    nodes = 0.5 * (nodes - nodes[::-1])  # exact antisymmetry
    weights = np.full(n, math.pi / n)
    return QuadratureRule(weight=WeightSpec.chebyshev1(), nodes=nodes, weights=weights)


def integrate(rule: QuadratureRule, f: Callable[[float], float]) -> float:
    """Apply the rule: sum of w_i * f(x_i), accumulated exactly."""
    return math.fsum(w * f(x) for x, w in zip(rule.nodes.tolist(), rule.weights.tolist()))


@lru_cache(maxsize=None)
def reference_rule(weight: WeightSpec) -> QuadratureRule:
    """Cached 500-point rule used as the ground-truth reference integrator."""
    return golub_welsch(weight, REFERENCE_SIZE)


def reference_integral(weight: WeightSpec, f: Callable[[float], float]) -> float:
    """Ground-truth value of the weighted integral of f, for error columns."""
    return integrate(reference_rule(weight), f)


def weight_moment(weight: WeightSpec, k: int) -> float:
    """Exact monomial moment of the weight via the Beta-function closed form.

    Odd moments vanish by symmetry; for k = 2m the value is
    Gamma(m+1/2) * Gamma(lam+1/2) / Gamma(m+lam+1).
    """
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    if k % 2 == 1:
        return 0.0
    m = k // 2
    lam = weight.lam
    return math.gamma(m + 0.5) * math.gamma(lam + 0.5) / math.gamma(m + lam + 1.0)
