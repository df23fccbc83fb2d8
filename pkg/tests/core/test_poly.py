from fractions import Fraction

import pytest
from hypothesis import given, settings

from oreh.core.cyclotomic import zeta
from oreh.core.poly import (
    Poly,
    compose_affine,
    cyclotomic_poly,
    poly_gcd,
    poly_xgcd,
    solve_linear_system,
)
from oreh.utils.errors import InvalidInputError
from tests.strategies import nonzero_polys, polys

X = Poly.x()


@pytest.mark.parametrize(
    "poly, expected",
    [
        (Poly(), "0"),
        (Poly((1, 2, 1)), "x^2 + 2*x + 1"),
        (Poly((0, -1)), "-x"),
        (Poly((Fraction(1, 2),)), "1/2"),
        (Poly((-3, 0, 0, Fraction(-2, 3))), "-2/3*x^3 - 3"),
    ],
)
def test_str(poly, expected):
    assert str(poly) == expected


def test_trailing_zeros_are_trimmed():
    assert Poly((1, 0, 0)) == Poly.one()
    assert Poly((0, 0)).is_zero
    assert Poly().degree == float("-inf")
    assert Poly.monomial(3, 2).degree == 3
    assert Poly.from_dict({2: 1, 0: -1}) == X**2 - 1


def test_scalar_equality():
    assert Poly.constant(3) == 3
    assert Poly.constant(3) != X
    assert hash(Poly.constant(3)) == hash(Fraction(3))


def test_divmod():
    assert divmod(X**3 + 1, X + 1) == (X**2 - X + 1, Poly())
    assert divmod(X**2 + 1, X * 2) == (X / 2, Poly.one())
    assert (X**2 - 1).exact_div(X - 1) == X + 1

    with pytest.raises(InvalidInputError):
        (X**2 + 1).exact_div(X)
    with pytest.raises(InvalidInputError):
        divmod(X, Poly())


def test_gcd():
    assert poly_gcd(X**2 - 1, X**2 + X * 2 + 1) == X + 1
    assert poly_gcd(X**3, (X**3).derivative()) == X**2
    assert poly_gcd(X**2 + 1, X) == Poly.one()

    with pytest.raises(InvalidInputError):
        poly_gcd(Poly(), Poly())


@given(nonzero_polys(), nonzero_polys())
@settings(max_examples=50, deadline=None)
def test_xgcd(f, g):
    d, u, v = poly_xgcd(f, g)
    assert u * f + v * g == d
    assert d.leading_coefficient == 1
    assert d.divides(f) and d.divides(g)


def test_calculus():
    assert (X**3 * 3 + 2).antiderivative() == X**4 * Fraction(3, 4) + X * 2
    assert (X**3 + X).derivative() == X**2 * 3 + 1
    assert Poly.constant(5).antiderivative() == X * 5


def test_compose_affine():
    assert compose_affine(X**2, 2, 1) == X**2 * 4 + X * 4 + 1
    assert compose_affine(X**3 + X, -1) == -(X**3) - X
    assert (X**2 + X).scale_variable(3) == X**2 * 9 + X * 3
    assert (X**2)(Fraction(1, 2)) == Fraction(1, 4)

    with pytest.raises(InvalidInputError):
        compose_affine(X, 0)


@pytest.mark.parametrize(
    "m, expected",
    [
        (1, X - 1),
        (2, X + 1),
        (4, X**2 + 1),
        (6, X**2 - X + 1),
        (12, X**4 - X**2 + 1),
    ],
)
def test_cyclotomic_poly(m, expected):
    assert cyclotomic_poly(m) == expected


def test_solve_linear_system():
    assert solve_linear_system([[1, 1], [1, -1]], [2, 0], 2) == ([1, 1], [])
    assert solve_linear_system([[1, 1]], [2], 2) == ([2, 0], [[-1, 1]])
    assert solve_linear_system([[1, 1], [1, 1]], [1, 2], 2) == (None, [[-1, 1]])
    assert solve_linear_system([], [], 1) == ([0], [[1]])


def test_cyclotomic_coefficients():
    w = zeta(3)
    f = X - w
    g = X**2 + X + 1
    assert divmod(g, f) == (X + w + 1, Poly())
    assert poly_gcd(g, f * (X - 1)) == f
    assert (X * w + 1)(w**2) == 2
    assert f.monic() == f
    assert (f * w).monic() == f
    assert solve_linear_system([[w, 1], [1, w]], [1, 0], 2) == (
        [w / (w**2 - 1), -1 / (w**2 - 1)],
        [],
    )
    assert solve_linear_system([[w, w**2]], [w], 2) == ([1, 0], [[-w, 1]])


@given(polys(), polys(), polys())
@settings(max_examples=50, deadline=None)
def test_ring_axioms(f, g, k):
    assert (f * g) * k == f * (g * k)
    assert f * (g + k) == f * g + f * k
    assert f * g == g * f
    assert f - f == Poly()


@given(polys(6), nonzero_polys(3))
@settings(max_examples=50, deadline=None)
def test_division_identity(f, g):
    quotient, remainder = divmod(f, g)
    assert quotient * g + remainder == f
    assert remainder.degree < g.degree
