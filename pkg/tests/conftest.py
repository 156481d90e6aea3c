import math

import pytest

from cef import QuadratureSpec, SeriesParams, build_coefficients


@pytest.fixture(scope="session")
def coeffs():
    return build_coefficients(SeriesParams())


@pytest.fixture(scope="session")
def qspec():
    return QuadratureSpec()


def rel_error(got: complex, want: complex) -> float:
    return abs(got - want) / abs(want)


def component_rel_errors(got: complex, want: complex) -> tuple[float, float]:
    return (abs(got.real - want.real) / abs(want.real),
            abs(got.imag - want.imag) / abs(want.imag))


def ulp_diff(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / math.ulp(max(abs(a), abs(b)))
