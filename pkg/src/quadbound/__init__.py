"""Gauss-Christoffel and Gauss-Gegenbauer quadrature on [-1, 1], Chebyshev
expansion coefficients, and certified a-priori error bounds driven by
derivative-variation regularity."""

from .bounds import (
    BoundReport,
    RegularityProfile,
    denominator_factors,
    denominator_factors_exact,
    gegenbauer_quadrature_bound,
    gegenbauer_weight_norm,
    new_coeff_bound,
    new_quadrature_bound,
    trefethen_coeff_bound,
    xiang_quadrature_bound,
)
from .chebyshev import (
    BetaLadder,
    ModeCombination,
    beta_ladder,
    cheb_t,
    cheb_t_scaled,
    ladder_expansion,
    ladder_sum_identity,
    max_beta,
    min_beta,
    rewrite_once,
)
from .errors import NonConvergenceError
from .expansion import (
    ChebyshevExpansion,
    abs_tail_sum,
    chebyshev_coefficients,
    odd_tail_sum,
)
from .rules import (
    QuadratureRule,
    WeightSpec,
    chebyshev_rule,
    golub_welsch,
    integrate,
    recurrence_coefficients,
    reference_integral,
    reference_rule,
    weight_moment,
)
from .testbed import (
    TestFunction,
    adaptive_integral,
    chebyshev_weighted_variation,
    corner_derivative,
    corner_family,
    exp_function,
    total_variation,
)
from .verify import SuiteResult, run_suites

__version__ = "0.1.0"

__all__ = [
    "BetaLadder",
    "BoundReport",
    "ChebyshevExpansion",
    "ModeCombination",
    "NonConvergenceError",
    "QuadratureRule",
    "RegularityProfile",
    "SuiteResult",
    "TestFunction",
    "WeightSpec",
    "abs_tail_sum",
    "adaptive_integral",
    "beta_ladder",
    "cheb_t",
    "cheb_t_scaled",
    "chebyshev_coefficients",
    "chebyshev_rule",
    "chebyshev_weighted_variation",
    "corner_derivative",
    "corner_family",
    "denominator_factors",
    "denominator_factors_exact",
    "exp_function",
    "gegenbauer_quadrature_bound",
    "gegenbauer_weight_norm",
    "golub_welsch",
    "integrate",
    "ladder_expansion",
    "ladder_sum_identity",
    "max_beta",
    "min_beta",
    "new_coeff_bound",
    "new_quadrature_bound",
    "odd_tail_sum",
    "recurrence_coefficients",
    "reference_integral",
    "reference_rule",
    "rewrite_once",
    "run_suites",
    "total_variation",
    "trefethen_coeff_bound",
    "weight_moment",
    "xiang_quadrature_bound",
    "__version__",
]
