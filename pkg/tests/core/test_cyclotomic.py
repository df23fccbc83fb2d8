from fractions import Fraction

import pytest
from hypothesis import given, settings

from oreh.core.cyclotomic import (
    CyclotomicElement,
    divisors,
    euler_phi,
    mobius,
    multiplicative_order,
    primitive_root_of_unity,
    roots_of_unity,
    zeta,
)
from oreh.utils.errors import InvalidInputError
from tests.strategies import roots_of_unity as root_strategy


def test_rational_values_collapse():
    assert zeta(1) == 1
    assert isinstance(zeta(1), Fraction)
    assert zeta(2) == -1
    assert isinstance(zeta(2), Fraction)
    assert zeta(4) ** 2 == -1
    assert isinstance(zeta(4) ** 2, Fraction)
    assert isinstance(zeta(3), CyclotomicElement)


def test_arithmetic():
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(3) * zeta(3, 2) == 1
    assert zeta(5) * (1 / zeta(5)) == 1
    assert zeta(8) ** 2 == zeta(4)
    assert zeta(3) - zeta(3) == 0
    assert Fraction(1, 2) + zeta(3) - zeta(3) == Fraction(1, 2)

    with pytest.raises(InvalidInputError):
        zeta(3) / 0


def test_mixed_conductors():
    assert zeta(6) == -zeta(3, 2)
    assert hash(zeta(6)) == hash(-zeta(3, 2))
    assert zeta(4) * zeta(3) == zeta(12, 7)
    assert zeta(6, 3) == -1


def test_str():
    assert str(zeta(3)) == "zeta(3,1)"
    assert str(zeta(3, 2)) == "-1 - zeta(3,1)"
    assert str(zeta(5) * 2) == "2*zeta(5,1)"


def test_number_theory():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(7) == 6
    assert mobius(6) == 1
    assert mobius(4) == 0
    assert mobius(30) == -1
    assert divisors(12) == [1, 2, 3, 4, 6, 12]

    with pytest.raises(InvalidInputError):
        euler_phi(0)


def test_roots_of_unity():
    roots = roots_of_unity(4)
    assert len(roots) == 4
    assert all(root**4 == 1 for root in roots)
    assert len(set(roots)) == 4
    assert primitive_root_of_unity(6) == zeta(6, 1)

    with pytest.raises(InvalidInputError):
        zeta(0)


def test_multiplicative_order():
    assert multiplicative_order(zeta(6)) == 6
    assert multiplicative_order(zeta(6, 2)) == 3
    assert multiplicative_order(-zeta(3)) == 6
    assert multiplicative_order(Fraction(-1)) == 2
    assert multiplicative_order(Fraction(1)) == 1
    assert multiplicative_order(Fraction(2)) is None


@given(root_strategy(), root_strategy())
@settings(max_examples=50, deadline=None)
def test_field_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert multiplicative_order(a) is not None
