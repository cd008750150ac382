import pytest

from hsideals.monomial import parse_ideal

EX14 = "x1^2, x1*x2, x2^4, x1*x3^4, x1*x3^3*x4, x1*x3^2*x4^2"
EX14_HS1 = (
    "x1^2*x2, x1*x2^4, x1*x3^3*x4^2, x1*x2*x3^2*x4^2, x1^2*x3^2*x4^2, "
    "x1*x3^4*x4, x1*x2*x3^3*x4, x1^2*x3^3*x4, x1*x2*x3^4, x1^2*x3^4"
)
EX23_EDGES = [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)]


@pytest.fixture
def triangle():
    return parse_ideal("x1x2, x1x3, x2x3")


@pytest.fixture
def ex14():
    return parse_ideal(EX14)


@pytest.fixture
def ex14_hs1():
    return parse_ideal(EX14_HS1, 4)
