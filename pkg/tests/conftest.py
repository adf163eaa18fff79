"""Shared fixtures: the curves used throughout the test suite."""

import pytest

from chordcert.curve import WeierstrassCurve
from chordcert.fields import build_extension, build_prime_field


@pytest.fixture
def f5():
    return build_prime_field(5)


@pytest.fixture
def f4():
    return build_extension(2, (1, 1, 1))


@pytest.fixture
def e5(f5):
    """y^2 = x^3 + x + 1 over F_5: cyclic of order 9, generated by (0,1)."""
    return WeierstrassCurve.from_ints(f5, 0, 0, 0, 1, 1)


@pytest.fixture
def e5_two_torsion(f5):
    """y^2 = x^3 + 4x over F_5: 8 points, full 2-torsion."""
    return WeierstrassCurve.from_ints(f5, 0, 0, 0, 4, 0)


@pytest.fixture
def e2():
    """y^2 + y = x^3 over F_2."""
    return WeierstrassCurve.from_ints(build_prime_field(2), 0, 0, 1, 0, 0)
