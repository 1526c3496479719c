"""Chebyshev polynomials, their scaled first derivatives, and the exact
mode-ladder identities behind the coefficient decay estimates.

Point evaluation uses the trigonometric closed forms cos(n*arccos x) and
sin(n*arccos x)/n, which stay uniformly accurate near x = +-1 where the
three-term recurrence degrades; recurrence evaluators are kept only as
independent test oracles.  The ladder identities are manipulated in exact
rational arithmetic throughout, since they are statements about formal
expansions, not floating-point quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "DOMAIN_TOL",
    "cheb_t",
    "cheb_t_scaled",
    "cheb_t_recurrence",
    "cheb_t_derivative_recurrence",
    "ModeCombination",
    "rewrite_once",
    "ladder_expansion",
    "BetaLadder",
    "beta_ladder",
    "min_beta",
    "max_beta",
    "ladder_sum_identity",
]

# Absolute slack admitted on |x| <= 1, so that rule nodes produced by the
# eigensolver (which may stick out by a few ulp) are still accepted.
DOMAIN_TOL = 1e-12

ExactCoeff = Union[Fraction, int]


def _clamped(x: float) -> float:
    if abs(x) > 1.0 + DOMAIN_TOL:
        raise ValueError(f"point {x!r} lies outside [-1, 1]")
    return min(1.0, max(-1.0, x))


def cheb_t(n: int, x: float) -> float:
    """Chebyshev polynomial of the first kind, T_n(x) = cos(n*arccos x)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return math.cos(n * math.acos(_clamped(x)))


def cheb_t_scaled(n: int, x: float) -> float:
    """Scaled derivative sin(n*arccos x)/n = sqrt(1-x^2)*T_n'(x)/n^2.

    Bounded by 1/n on [-1, 1] and exactly zero at the endpoints.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    x = _clamped(x)
    if x == 1.0 or x == -1.0:
        return 0.0
    return math.sin(n * math.acos(x)) / n


def cheb_t_recurrence(n: int, x: float) -> float:
    """T_n(x) by the three-term recurrence.  Test oracle only; prefer cheb_t."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_t_derivative_recurrence(n: int, x: float) -> float:
    """T_n'(x) via T_n' = n*U_{n-1} with the second-kind recurrence.

    Test oracle only: accuracy degrades near x = +-1 for large n.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 0.0
    prev, cur = 1.0, 2.0 * x  # U_0, U_1
    if n == 1:
        return 1.0
    for _ in range(n - 2):
        prev, cur = cur, 2.0 * x * cur - prev
    return n * cur


class ModeCombination:
    """Exact linear combination of scaled Chebyshev modes, keyed by degree.

    Coefficients are Fractions; terms with coefficient zero are dropped, so
    the empty combination represents zero.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[int, ExactCoeff] | Iterable[tuple[int, ExactCoeff]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[int, Fraction] = {}
        for mode, coeff in items:
            if not isinstance(mode, int) or isinstance(mode, bool) or mode < 0:
                raise ValueError(f"mode index {mode!r} must be a nonnegative integer")
            if isinstance(coeff, float):
                raise TypeError("coefficients must be exact rationals, not floats")
            value = merged.get(mode, Fraction(0)) + Fraction(coeff)
            if value:
                merged[mode] = value
            else:
                merged.pop(mode, None)
        self._terms = dict(sorted(merged.items()))

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return tuple(self._terms.items())

    def support(self) -> tuple[int, ...]:
        return tuple(self._terms)

    def coefficient(self, mode: int) -> Fraction:
        return self._terms.get(mode, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModeCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {c}" for m, c in self._terms.items())
        return f"ModeCombination({{{body}}})"


def rewrite_once(comb: ModeCombination) -> ModeCombination:
    """Rewrite every mode m as (-mode(m-1) + mode(m+1)) / (2m), exactly.

    One application raises by one the derivative order under which the
    combination reproduces the original scaled mode.  Every mode index must
    be at least 2 so that the image indices stay positive.
    """
    out: dict[int, Fraction] = {}
    for mode, coeff in comb.items():
        if mode < 2:
            raise ValueError(f"mode {mode} cannot be rewritten; need mode >= 2")
        step = coeff / (2 * mode)
        out[mode - 1] = out.get(mode - 1, Fraction(0)) - step
        out[mode + 1] = out.get(mode + 1, Fraction(0)) + step
    return ModeCombination(out)


def _check_ladder_args(n: int, r: int) -> None:
    if n < 2:
        raise ValueError("degree n must be at least 2")
    if not 1 <= r <= n - 1:
        raise ValueError(f"order r={r} must satisfy 1 <= r <= n-1 (n={n})")


def ladder_expansion(n: int, r: int) -> ModeCombination:
    """Combination whose r-th derivative equals the scaled mode n.

    Built by applying rewrite_once r times to the singleton {n: 1}.  The
    support lies in {n-r, n-r+2, ..., n+r}; the extremal coefficients are
    (-1)^r / min_beta(n, r) at mode n-r and 1 / max_beta(n, r) at n+r.
    """
    _check_ladder_args(n, r)
    comb = ModeCombination({n: Fraction(1)})
    for _ in range(r):
        comb = rewrite_once(comb)
    return comb


def min_beta(n: int, r: int) -> int:
    """Denominator of the all-descending path: prod_{i=1..r} (2n-2i+2)."""
    _check_ladder_args(n, r)
    out = 1
    for i in range(1, r + 1):
        out *= 2 * n - 2 * i + 2
    return out


def max_beta(n: int, r: int) -> int:
    """Denominator of the all-ascending path: prod_{i=1..r} (2n+2i-2)."""
    _check_ladder_args(n, r)
    out = 1
    for i in range(1, r + 1):
        out *= 2 * n + 2 * i - 2
    return out


@dataclass(frozen=True)
class BetaLadder:
    """The 2^r unmerged rewrite denominators for mode n at order r.

    ``betas[k]`` belongs to the k-th down/up path in first-step-major order
    (all-descending first), so ``betas[0]`` and ``betas[-1]`` carry the
    closed-form products of min_beta and max_beta.  Entries are exact
    positive integers.
    """

    n: int
    r: int
    betas: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_ladder_args(self.n, self.r)
        if len(self.betas) != 2**self.r:
            raise ValueError("ladder must contain exactly 2^r entries")
        if any(b <= 0 for b in self.betas):
            raise ValueError("ladder denominators must be positive")

    def modes(self) -> tuple[int, ...]:
        """Final mode of each path: n - r + 2 * (number of ascending steps)."""
        return tuple(
            self.n - self.r + 2 * _popcount(k) for k in range(len(self.betas))
        )

    def signs(self) -> tuple[int, ...]:
        """Sign of each path: (-1) per descending step."""
        return tuple(
            -1 if (self.r - _popcount(k)) % 2 else 1 for k in range(len(self.betas))
        )


def _popcount(k: int) -> int:
    return bin(k).count("1")


def beta_ladder(n: int, r: int) -> BetaLadder:
    """Unmerged ladder of denominators produced by r successive rewrites.

    Each rewrite of a path at mode m multiplies its denominator by 2m,
    independently of the step direction, which is why paths differing only
    in their final step share a denominator.
    """
    _check_ladder_args(n, r)
    paths: list[tuple[int, int]] = [(n, 1)]  # (current mode, denominator)
    for _ in range(r):
        nxt: list[tuple[int, int]] = []
        for mode, beta in paths:
            grown = beta * 2 * mode
            nxt.append((mode - 1, grown))
            nxt.append((mode + 1, grown))
        paths = nxt
    return BetaLadder(n=n, r=r, betas=tuple(beta for _, beta in paths))


def ladder_sum_identity(n: int, r: int) -> tuple[Fraction, Fraction]:
    """Both sides of the ladder mass identity, as exact rationals.

    The left side sums |coefficient| / mode over the merged expansion
    (equivalently 1/(beta*mode) over the unmerged ladder, since all paths
    landing on one mode share a sign); the right side is the closed form
    1 / prod_{j=0..r} (n - r + 2j).
    """
    _check_ladder_args(n, r)
    comb = ladder_expansion(n, r)
    lhs = sum((abs(c) / m for m, c in comb.items()), Fraction(0))
    denom = 1
    for j in range(r + 1):
        denom *= n - r + 2 * j
    return lhs, Fraction(1, denom)
