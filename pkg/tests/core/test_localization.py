import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oreh.core.algebra import AlgebraContext, OreElement, ore_mul
from oreh.core.localization import (
    LocElement,
    PsiFraction,
    SpecialPoly,
    commutator_decompose,
    d_S,
    exact_quotient,
    fraction,
    in_base_ring,
    is_constant_kernel,
    loc_commutator,
    loc_mul,
    w_star,
)
from oreh.core.poly import Poly
from oreh.utils.errors import InvalidInputError, NotDecomposableError, NotStableError
from tests.strategies import elements, polys

X = Poly.x()
T = OreElement.t()


def test_fraction_reduction(ctx_x2):
    assert fraction(ctx_x2, X**2, 1) == X
    assert fraction(ctx_x2, X**2, 1).is_polynomial
    assert fraction(ctx_x2, X + 1, 2).k == 2
    assert fraction(ctx_x2, Poly(), 3).k == 0
    assert fraction(ctx_x2, X**3 + 1, 1).degree == 2
    assert PsiFraction(X, 2).k == 0

    with pytest.raises(InvalidInputError):
        fraction(ctx_x2, 1, -1)
    with pytest.raises(InvalidInputError):
        fraction(ctx_x2, 1, 1).as_poly()


def test_fraction_str(ctx_x2, ctx_x2_minus_1):
    assert str(fraction(ctx_x2, 1, 1)) == "1/x"
    assert str(fraction(ctx_x2, X + 1, 2)) == "(x + 1)/x^2"
    assert str(fraction(ctx_x2, 3, 0)) == "3"
    assert fraction(ctx_x2, 1, 1).to_json() == {"num": "1", "psi_pow": 1}

    ctx = AlgebraContext(X**3)
    assert str(fraction(ctx, -1, 2)) == "(-1)/(x^2)^2"
    assert str(fraction(ctx_x2_minus_1, 1, 1)) == "1"


def test_fraction_arithmetic(ctx_x2):
    inverse = fraction(ctx_x2, 1, 1)
    assert inverse * X == 1
    assert inverse + inverse == fraction(ctx_x2, 2, 1)
    assert inverse - X == fraction(ctx_x2, 1 - X**2, 1)
    assert fraction(ctx_x2, 1).divide_by(X) == inverse
    assert fraction(ctx_x2, X**2 + X).divide_by(X + 1) == X

    with pytest.raises(NotDecomposableError):
        fraction(ctx_x2, 1).divide_by(X + 1)
    with pytest.raises(InvalidInputError):
        inverse.divide_by(Poly())


def test_exact_quotient(ctx_x2):
    assert exact_quotient(fraction(ctx_x2, X**2), fraction(ctx_x2, X)) == X
    assert exact_quotient(fraction(ctx_x2, X, 1), fraction(ctx_x2, 1, 1)) == X
    assert exact_quotient(fraction(ctx_x2, 1), fraction(ctx_x2, X)) is None
    with pytest.raises(InvalidInputError):
        exact_quotient(fraction(ctx_x2, 1), fraction(ctx_x2, 0))


def test_d_S(ctx_x2):
    assert d_S(ctx_x2, fraction(ctx_x2, 1, 1)) == -1
    assert d_S(ctx_x2, fraction(ctx_x2, 1, 2)) == fraction(ctx_x2, -2, 1)
    assert d_S(ctx_x2, fraction(ctx_x2, X**2)) == X**3 * 2
    assert is_constant_kernel(ctx_x2, fraction(ctx_x2, 3))
    assert not is_constant_kernel(ctx_x2, fraction(ctx_x2, 1, 1))


@given(polys(3), st.integers(0, 2), polys(3), st.integers(0, 2))
@settings(max_examples=50, deadline=None)
def test_d_S_leibniz(f, j, g, k):
    ctx = AlgebraContext(X**3 - X**2)
    u = fraction(ctx, f, j)
    v = fraction(ctx, g, k)
    assert d_S(ctx, u * v) == d_S(ctx, u) * v + u * d_S(ctx, v)


def test_loc_mul(ctx_x2):
    inverse = LocElement.from_fraction(fraction(ctx_x2, 1, 1))
    t = LocElement.from_ore(ctx_x2, T)
    product = loc_mul(ctx_x2, t, inverse)
    assert str(product) == "1/x*t - 1"
    assert product.to_json() == [[0, {"num": "-1", "psi_pow": 0}], [1, {"num": "1", "psi_pow": 1}]]
    assert loc_commutator(ctx_x2, t, inverse) == LocElement.from_fraction(fraction(ctx_x2, -1))
    assert not product.is_polynomial

    with pytest.raises(InvalidInputError):
        product.to_ore()


def test_in_base_ring(ctx_x2):
    assert not in_base_ring(LocElement.from_fraction(fraction(ctx_x2, 1, 1), 1))
    assert in_base_ring(LocElement.from_fraction(fraction(ctx_x2, 3, 2)))
    assert in_base_ring(LocElement())
    assert not in_base_ring(LocElement.from_ore(ctx_x2, T + OreElement.x()))


@given(elements(), elements())
@settings(max_examples=30, deadline=None)
def test_loc_mul_restricts_to_ore_mul(u, v):
    ctx = AlgebraContext(X**2)
    product = loc_mul(ctx, LocElement.from_ore(ctx, u), LocElement.from_ore(ctx, v))
    assert product.to_ore() == ore_mul(ctx, u, v)


def test_special_poly(ctx_x2, ctx_x3):
    special = SpecialPoly({1: Poly.one()})
    assert SpecialPoly.create(ctx_x2, special) == special
    assert SpecialPoly.create(ctx_x3, OreElement({2: X})).to_ore() == OreElement({2: X})
    assert SpecialPoly.zero().is_zero
    assert str(special) == "t"

    with pytest.raises(InvalidInputError):
        SpecialPoly.create(ctx_x2, SpecialPoly({1: X}))
    with pytest.raises(InvalidInputError):
        SpecialPoly({0: Poly.one()})


def test_w_star(ctx_x2):
    result = w_star(ctx_x2, OreElement.x(), SpecialPoly({1: Poly.one()}))
    assert result.coefficient(1) == fraction(ctx_x2, 1, 1)
    assert result.coefficient(0) == X
    assert str(result) == "1/x*t + x"


def test_commutator_decompose(ctx_x2):
    assert commutator_decompose(ctx_x2, fraction(ctx_x2, 1, 1)) == (Poly(), -Poly.one())
    f, r_rem = commutator_decompose(ctx_x2, fraction(ctx_x2, X**2))
    assert (f, r_rem) == (X**2, Poly())

    with pytest.raises(NotStableError):
        commutator_decompose(ctx_x2, fraction(ctx_x2, 1, 2))
