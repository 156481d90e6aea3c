"""Independent quadrature reference for w(z).

Everything else in this package evaluates closed forms; this module goes
back to the defining integral

    w(z) = (1/sqrt(pi)) * integral_0^inf exp(-tau^2/4 - y tau + i x tau) dtau

and to its finite-interval intermediate, where the Gaussian kernel is
replaced by its cosine expansion and integrated over [0, tau_m]. Both are
computed by composite Gauss-Legendre panels, halving the panel width until
two successive levels agree within the requested absolute tolerance. The
initial panel width shrinks like pi/(4 x) so the oscillatory factor
e^{i x tau} never outruns the rule. Panels are anchored at tau = 0, so
results do not depend on the exact truncation point once the integrand has
decayed below double precision (beyond tau ~ 53 it is < 1e-304).

This is a correctness instrument, not a production path: clarity and a
trustworthy error estimate over speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientTable
from .errors import ConvergenceError, DomainError

__all__ = ["QuadratureSpec", "w_quadrature", "w_finite_quadrature"]

_SQRT_PI = math.sqrt(math.pi)
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(20)

# exp(-tau^2/4) < 1e-304 beyond this point; extending tau_max further
# cannot change the double-precision result.
_DECAY_CUTOFF = 52.9


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation point, target absolute tolerance, and panel budget."""

    tau_max: float = 50.0
    abs_tol: float = 1e-14
    max_subdivisions: int = 2 ** 16

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau_max) and self.tau_max > 0):
            raise ValueError(f"tau_max must be positive, got {self.tau_max!r}")
        if not (math.isfinite(self.abs_tol) and self.abs_tol > 0):
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if not isinstance(self.max_subdivisions, int) or self.max_subdivisions < 1:
            raise ValueError(
                f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}")


def _refine_panels(f, upper: float, width: float, spec: QuadratureSpec) -> complex:
    """Halve the panel width until two successive composite Gauss-Legendre
    estimates agree within spec.abs_tol."""
    previous = None
    while True:
        n_panels = math.ceil(upper / width)
        if n_panels > spec.max_subdivisions:
            raise ConvergenceError(
                f"needed more than {spec.max_subdivisions} panels to reach "
                f"abs_tol={spec.abs_tol:g}")
        half = 0.5 * width
        mids = width * np.arange(n_panels) + half
        t = (mids[:, None] + half * _NODES[None, :]).ravel()
        vals = f(t).reshape(n_panels, _NODES.size)
        current = half * complex((vals @ _WEIGHTS).sum())
        if previous is not None and abs(current - previous) <= spec.abs_tol:
            return current
        previous = current
        width = half


def w_quadrature(z: complex, spec: QuadratureSpec) -> complex:
    """w(z) for Im z > 0 by direct numerical integration of the defining
    integral, truncated at spec.tau_max.

    Raises DomainError for Im z <= 0 and ConvergenceError when the panel
    budget runs out before the tolerance is met.
    """
    if not z.imag > 0.0:
        raise DomainError(f"w_quadrature requires Im z > 0, got z = {z!r}")
    x = z.real
    y = z.imag

    def integrand(t: np.ndarray) -> np.ndarray:
        return np.exp(-0.25 * t * t - y * t) * (np.cos(x * t) + 1j * np.sin(x * t))

    upper = min(spec.tau_max, _DECAY_CUTOFF)
    width = min(1.0, math.pi / (4.0 * max(1.0, abs(x))))
    return _refine_panels(integrand, upper, width, spec) / _SQRT_PI


def w_finite_quadrature(z: complex, coeffs: CoefficientTable,
                        spec: QuadratureSpec) -> complex:
    """w(z) by integrating the cosine-expanded kernel over [0, tau_m].

    The refined series is the exact antiderivative evaluation of this
    integral, so the two must agree; this cross-check validates the
    analytic integration step independently of the closed form.
    """
    if not z.imag > 0.0:
        raise DomainError(f"w_finite_quadrature requires Im z > 0, got z = {z!r}")
    x = z.real
    y = z.imag
    tau = coeffs.params.tau_m
    a = np.asarray(coeffs.a)
    freqs = np.arange(a.size) * (math.pi / tau)

    def integrand(t: np.ndarray) -> np.ndarray:
        kernel = np.cos(t[:, None] * freqs[None, :]) @ a - 0.5 * a[0]
        return kernel * np.exp(-y * t) * (np.cos(x * t) + 1j * np.sin(x * t))

    # the kernel itself carries frequencies up to N pi / tau_m
    bandwidth = max(1.0, abs(x)) + freqs[-1]
    width = min(0.5, math.pi / (4.0 * bandwidth))
    return _refine_panels(integrand, tau, width, spec) / _SQRT_PI
