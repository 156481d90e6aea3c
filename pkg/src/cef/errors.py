"""Exception types shared across the package.

Parameter validation failures raise plain ValueError. Overflow conditions
raise the built-in OverflowError (cmath.exp already does this naturally;
explicit range guards use it too, so callers only ever need one type).
"""


class DomainError(ValueError):
    """Argument lies outside the domain of the requested operation.

    Raised for non-finite input, for evaluation points outside the upper
    half-plane when a series kernel is called directly, and for the
    explicit pole of the complementary-error-function series at z = 0.
    """


class ConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget before
    reaching the requested tolerance."""
