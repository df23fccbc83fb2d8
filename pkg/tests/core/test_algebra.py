from fractions import Fraction

import pytest
from hypothesis import given, settings

from oreh.core.algebra import AlgebraContext, OreElement, commutator, ore_mul, ore_pow
from oreh.core.poly import Poly
from oreh.core.unit import LaurentUnit
from oreh.utils.errors import InvalidInputError
from tests.strategies import elements, nonzero_polys

X = Poly.x()
T = OreElement.t()


def test_context(ctx_x2, ctx_x2_minus_1, ctx_cubic):
    assert ctx_x2.N == 2
    assert ctx_x2.psi == X
    assert ctx_x2.q == X
    assert not ctx_x2.is_square_free
    assert ctx_x2.support == {2}

    assert ctx_x2_minus_1.is_square_free
    assert ctx_x2_minus_1.is_normalized
    assert ctx_cubic.psi == 1

    assert not AlgebraContext(X**2 + X * 2).is_normalized
    assert not AlgebraContext(X**2 * 2).is_normalized
    assert not AlgebraContext(Poly.one()).is_normalized
    with pytest.raises(InvalidInputError):
        AlgebraContext(X**2 + X * 2).ensure_normalized()
    with pytest.raises(InvalidInputError):
        AlgebraContext(Poly())


@pytest.mark.parametrize(
    "element, expected",
    [
        (OreElement(), "0"),
        (OreElement({1: X**2, 0: X**3 * 2}), "x^2*t + 2*x^3"),
        (OreElement({2: X + 1}), "(x + 1)*t^2"),
        (OreElement({1: -1, 0: Fraction(1, 2)}), "-t + 1/2"),
        (OreElement({1: LaurentUnit({0: X, 1: -X})}), "(1 - a)*x*t"),
    ],
)
def test_str(element, expected):
    assert str(element) == expected


def test_normal_form():
    element = OreElement({3: Poly(), 1: X, 0: 0})
    assert element.terms == {1: X}
    assert element.deg_t == 1
    assert OreElement().deg_t == float("-inf")
    assert element.to_json() == [[1, "x"]]
    assert OreElement({0: X}).as_poly() == X
    assert OreElement({0: LaurentUnit.a_power(1)}).is_symbolic
    assert OreElement.x() == X
    assert OreElement.one() == 1

    with pytest.raises(InvalidInputError):
        T.as_poly()
    with pytest.raises(InvalidInputError):
        OreElement({-1: X})


def test_commutation_rule(ctx_x2, ctx_cubic):
    assert str(ore_mul(ctx_x2, T, OreElement.from_poly(X**2))) == "x^2*t + 2*x^3"
    assert commutator(ctx_x2, T, OreElement.x()) == X**2
    assert commutator(ctx_cubic, T, OreElement.x()) == ctx_cubic.h
    assert ore_mul(ctx_x2, OreElement.x(), T) == OreElement({1: X})
    # t·t·x = x t^2 + 2 h t + h h'
    expected = OreElement({2: X, 1: X**2 * 2, 0: X**3 * 2})
    assert ore_mul(ctx_x2, ore_pow(ctx_x2, T, 2), OreElement.x()) == expected


def test_ore_pow(ctx_x):
    u = OreElement({1: X, 0: 1})
    assert ore_pow(ctx_x, u, 0) == 1
    assert ore_pow(ctx_x, u, 3) == ore_mul(ctx_x, u, ore_mul(ctx_x, u, u))
    with pytest.raises(InvalidInputError):
        ore_pow(ctx_x, u, -1)


def test_scalar_and_poly_multiplication(ctx_x2):
    u = OreElement({1: X, 0: 1})
    assert u * 2 == OreElement({1: X * 2, 0: 2})
    assert X * u == ore_mul(ctx_x2, OreElement.x(), u)
    assert u - u == 0


@given(elements(), elements(), elements(), nonzero_polys(2))
@settings(max_examples=30, deadline=None)
def test_ring_axioms(u, v, w, h):
    if h.degree < 1:
        h = h * Poly.x()
    ctx = AlgebraContext(h)
    assert ore_mul(ctx, ore_mul(ctx, u, v), w) == ore_mul(ctx, u, ore_mul(ctx, v, w))
    assert ore_mul(ctx, u, v + w) == ore_mul(ctx, u, v) + ore_mul(ctx, u, w)
    assert ore_mul(ctx, u + v, w) == ore_mul(ctx, u, w) + ore_mul(ctx, v, w)
    assert ore_mul(ctx, OreElement.one(), u) == u == ore_mul(ctx, u, OreElement.one())
    assert commutator(ctx, u, u) == 0
