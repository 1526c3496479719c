"""Exception types shared across the package."""


class NonConvergenceError(RuntimeError):
    """An iterative numerical procedure exceeded its iteration budget.

    Raised by the tridiagonal eigensolver and the adaptive quadrature;
    the command line maps it to exit status 4.
    """
