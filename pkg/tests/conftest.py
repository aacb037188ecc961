import pytest

from holodense.curves import validate_curve
from holodense.fields import make_extension, make_prime_field


@pytest.fixture(scope="session")
def F2():
    return make_prime_field(2)


@pytest.fixture(scope="session")
def F5():
    return make_prime_field(5)


@pytest.fixture(scope="session")
def F4(F2):
    return make_extension(F2, 2)


@pytest.fixture(scope="session")
def E5(F5):
    """y^2 = x^3 + x + 1 over F_5, the running example: 9 rational points."""
    return validate_curve(F5, 1, 1)
