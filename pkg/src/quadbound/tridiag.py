"""Implicit-shift QL iteration for symmetric tridiagonal matrices.

Only the eigenvalues and the first component of each normalized eigenvector
are computed, which is exactly what the Golub-Welsch construction consumes.
Accumulating a single eigenvector row instead of the full matrix keeps the
whole sweep O(n^2).  The formulation is the classical implicit QL with
Wilkinson-style shifts (Numerical Recipes tqli lineage); deflation tests are
relative to the magnitude of the neighboring diagonal entries.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import NonConvergenceError

__all__ = ["eigh_tridiagonal_first"]

# Sweep budget per eigenvalue index, hence at most 30*n sweeps in total.
SWEEP_CAP = 30

_EPS = 2.220446049250313e-16


def eigh_tridiagonal_first(
    diag: Sequence[float],
    offdiag: Sequence[float],
    sweep_cap: int = SWEEP_CAP,
) -> tuple[list[float], list[float]]:
    """Eigenvalues and first eigenvector components of a tridiagonal matrix.

    Parameters
    ----------
    diag : main diagonal, length n.
    offdiag : subdiagonal, length n-1.
    sweep_cap : implicit QL sweeps allowed per eigenvalue index.

    Returns
    -------
    (values, first) where ``values[k]`` is an eigenvalue (unordered) and
    ``first[k]`` the first component of its normalized eigenvector.

    Raises
    ------
    NonConvergenceError if some index exceeds ``sweep_cap`` sweeps.
    """
    n = len(diag)
    if n == 0:
        return [], []
    if len(offdiag) != n - 1:
        raise ValueError("offdiag must have length len(diag) - 1")
    d = [float(v) for v in diag]
    e = [float(v) for v in offdiag] + [0.0]
    z = [0.0] * n
    z[0] = 1.0

    for l in range(n):
        sweeps = 0
        while True:
            # Find the first negligible subdiagonal element at or past l.
            m = l
            while m < n - 1:
                scale = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * scale:
                    break
                m += 1
            if m == l:
                break  # eigenvalue at index l has converged
            sweeps += 1
            if sweeps > sweep_cap:
                raise NonConvergenceError(
                    f"QL iteration cap ({sweep_cap} sweeps) exceeded at index {l}"
                )
            # Wilkinson shift from the leading 2x2 block.
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            rad = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(rad, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                rad = math.hypot(f, g)
                e[i + 1] = rad
                if rad == 0.0:
                    # Recover from underflow: abandon this rotation chain.
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / rad
                c = g / rad
                g = d[i + 1] - p
                rad = (d[i] - g) * s + 2.0 * c * b
                p = s * rad
                d[i + 1] = g + p
                g = c * rad - b
                # Accumulate the rotation on the tracked first row.
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z
