"""Reference integrands with known regularity profiles, and the adaptive
quadrature used to evaluate derivative-variation functionals numerically.

The corner family has a single point where the j-th derivative jumps; its
(j+1)-st derivative is a pure point mass, which is handled symbolically via
explicit (location, mass) pairs rather than ever being sampled.  The
adaptive integrator is deliberately plain (recursive bisection on a fixed
15-point Gauss kernel) so it can serve as an auditable oracle, independent
of the Golub-Welsch machinery it is used to check.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np

from .bounds import RegularityProfile
from .errors import NonConvergenceError

__all__ = [
    "adaptive_integral",
    "total_variation",
    "chebyshev_weighted_variation",
    "TestFunction",
    "corner_family",
    "corner_derivative",
    "exp_function",
]

# Fixed Gauss-Legendre kernel for one panel of the adaptive scheme.
_KERNEL_X, _KERNEL_W = (a.tolist() for a in np.polynomial.legendre.leggauss(15))

Delta = tuple[float, float]  # (location, signed mass) of a point contribution


def _panel(f: Callable[[float], float], a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * math.fsum(w * f(mid + half * x) for x, w in zip(_KERNEL_X, _KERNEL_W))


def adaptive_integral(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-9,
    abs_floor: float = 1e-14,
    max_depth: int = 500,
) -> float:
    """Integral of f over [a, b] by adaptive bisection of a Gauss kernel.

    A panel is accepted when the whole-panel estimate and the sum of its two
    half-panel estimates agree within max(abs_floor, rel_tol * |panel|);
    otherwise both halves are refined.  Panels are processed iteratively and
    the accepted contributions are summed exactly, so results are
    deterministic.  Kernel nodes are interior, so integrable endpoint
    singularities are never sampled; they simply drive the bisection deep,
    up to max_depth, past which NonConvergenceError is raised.
    """
    accepted: list[float] = []
    stack = [(float(a), float(b), _panel(f, a, b), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        refined = left + right
        if abs(refined - whole) <= max(abs_floor, rel_tol * abs(refined)):
            accepted.append(refined)
            continue
        if depth >= max_depth:
            raise NonConvergenceError(
                f"adaptive bisection exceeded depth {max_depth} on "
                f"[{lo!r}, {hi!r}]"
            )
        stack.append((mid, hi, right, depth + 1))
        stack.append((lo, mid, left, depth + 1))
    return math.fsum(accepted)


def total_variation(
    derivative: Callable[[float], float],
    deltas: Iterable[Delta] = (),
    rel_tol: float = 1e-9,
) -> float:
    """Integral of |derivative| over [-1, 1] plus any point-mass magnitudes.

    ``derivative`` is the absolutely continuous part of f^(r+1); point
    masses (a jump of f^(r) contributes its jump height) are passed as
    (location, mass) pairs and added symbolically, never integrated.
    """
    smooth = adaptive_integral(lambda x: abs(derivative(x)), -1.0, 1.0, rel_tol)
    return smooth + math.fsum(abs(mass) for _, mass in deltas)


def chebyshev_weighted_variation(
    derivative: Callable[[float], float],
    deltas: Iterable[Delta] = (),
    rel_tol: float = 1e-9,
) -> float:
    """Like total_variation but against the weight 1/sqrt(1-x^2).

    Integrated under x = cos(theta), which removes the endpoint singularity
    of the weight; point masses at interior locations x0 contribute
    |mass| / sqrt(1 - x0^2).
    """
    smooth = adaptive_integral(
        lambda theta: abs(derivative(math.cos(theta))), 0.0, math.pi, rel_tol
    )
    point = math.fsum(
        abs(mass) / math.sqrt(1.0 - x0 * x0) for x0, mass in deltas
    )
    return smooth + point


class TestFunction:
    """A named integrand together with its regularity profiles.

    ``profile(r)`` returns the RegularityProfile at derivative order r,
    analytic where a closed form exists and numeric otherwise.
    """

    def __init__(
        self,
        name: str,
        evaluator: Callable[[float], float],
        profile_fn: Callable[[int], RegularityProfile],
        description: str,
    ) -> None:
        self.name = name
        self.evaluator = evaluator
        self.description = description
        self._profile_fn = profile_fn

    def __call__(self, x: float) -> float:
        return self.evaluator(x)

    def profile(self, r: int) -> RegularityProfile:
        return self._profile_fn(r)

    def __repr__(self) -> str:
        return f"TestFunction({self.name!r})"


def corner_derivative(j: int, t: float, order: int) -> Callable[[float], float]:
    """Analytic ``order``-th derivative of the corner-family function.

    For order <= j this is sign(x-t) * (x-t)^(j-order) / (j-order)!, a
    piecewise monomial (at order = j, the sign function itself).  The next
    derivative is a pure point mass at t and has no pointwise evaluator.
    """
    _check_corner_args(j, t)
    if not 0 <= order <= j:
        raise ValueError(f"derivative order {order} must lie in [0, {j}]")
    power = j - order
    scale = 1.0 / math.factorial(power)

    def deriv(x: float) -> float:
        d = x - t
        if d == 0.0:
            return 0.0
        sign = 1.0 if d > 0 else -1.0
        return sign * d**power * scale

    return deriv


def _check_corner_args(j: int, t: float) -> None:
    if j < 2:
        raise ValueError("corner order j must be at least 2")
    if not abs(t) < 1:
        raise ValueError("corner location t must lie strictly inside (-1, 1)")


def corner_family(j: int, t: float) -> TestFunction:
    """Corner integrand (x-t)^(j-1) |x-t| / j! with the kink at x = t.

    Derivatives up to order j-1 are absolutely continuous and the j-th has a
    single jump of height 2 at t, so the (j+1)-st derivative is the point
    mass 2*delta(x-t).  profile(j) is therefore analytic: total variation 2
    and weighted variation 2/sqrt(1-t^2).  Profiles at r < j integrate the
    piecewise-monomial derivative numerically.
    """
    _check_corner_args(j, t)
    scale = 1.0 / math.factorial(j)

    def evaluator(x: float) -> float:
        d = x - t
        return d ** (j - 1) * abs(d) * scale

    def profile_fn(r: int) -> RegularityProfile:
        if not 0 <= r <= j:
            raise ValueError(
                f"profile order {r} outside [0, {j}]: the derivative of order "
                f"{j + 1} is a point mass and higher orders do not exist"
            )
        if r == j:
            return RegularityProfile(
                order=j,
                total_var=2.0,
                weighted_var=2.0 / math.sqrt(1.0 - t * t),
            )
        deriv = corner_derivative(j, t, r + 1)
        return RegularityProfile(
            order=r,
            total_var=total_variation(deriv),
            weighted_var=chebyshev_weighted_variation(deriv),
        )

    return TestFunction(
        name=f"corner(j={j}, t={t:g})",
        evaluator=evaluator,
        profile_fn=profile_fn,
        description=f"(x - {t:g})^{j - 1} |x - {t:g}| / {j}!, kink at x = {t:g}",
    )


def exp_function() -> TestFunction:
    """The smooth integrand e^x; every derivative is e^x again.

    The total variation is e - 1/e at every order; the weighted variation is
    order-independent as well and is evaluated numerically (about 3.9775).
    """

    def profile_fn(r: int) -> RegularityProfile:
        if r < 0:
            raise ValueError("profile order must be nonnegative")
        return RegularityProfile(
            order=r,
            total_var=math.e - 1.0 / math.e,
            weighted_var=chebyshev_weighted_variation(math.exp),
        )

    return TestFunction(
        name="exp",
        evaluator=math.exp,
        profile_fn=profile_fn,
        description="e^x, smooth with identical derivatives of every order",
    )
