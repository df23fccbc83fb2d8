from fractions import Fraction

import pytest
from hypothesis import given, settings

from oreh.core.algebra import AlgebraContext, OreElement, commutator, ore_mul
from oreh.core.automorphism import (
    Automorphism,
    a_psi,
    apply,
    apply_loc,
    apply_to_fraction,
    aut_group,
    compose,
    ensure_valid,
    image_of_t,
    invert,
    normalize_h,
    power,
    validate,
)
from oreh.core.localization import LocElement, fraction
from oreh.core.poly import Poly
from oreh.core.unit import UnitConstraint, UnitParam
from oreh.utils.errors import InvalidAutomorphismError, InvalidInputError
from tests.strategies import automorphisms, elements

X = Poly.x()
T = OreElement.t()


def test_str():
    assert str(Automorphism(2, X**2)) == "sigma(x^2);tau(2)"
    assert str(Automorphism.tau(2, 1)) == "sigma(0);tau(2, 1)"
    assert str(Automorphism(UnitParam.symbolic(), X)) == "sigma(x);tau(sym)"
    assert Automorphism.identity().is_identity
    assert Automorphism.sigma(X) == Automorphism(1, X)
    assert not Automorphism.sigma(X).is_identity

    with pytest.raises(InvalidInputError):
        Automorphism(0)
    with pytest.raises(InvalidInputError):
        Automorphism(UnitParam.symbolic(), None, 1)
    with pytest.raises(InvalidInputError):
        Automorphism(UnitParam.symbolic()).a_value


@pytest.mark.parametrize(
    "h, order, generator, torsion",
    [
        (X**2, 0, "k*", "k*"),
        (X**3 + X + 1, 1, "1", "G_1"),
        (X**3 + X, 2, "zeta(2,1)", "G_2"),
        (X**4 + X, 3, "zeta(3,1)", "G_3"),
        (X**2 - 1, 2, "zeta(2,1)", "G_2"),
    ],
)
def test_aut_group(h, order, generator, torsion):
    info = aut_group(AlgebraContext(h))
    assert info.order == order
    assert info.generator == generator
    assert info.torsion == torsion


def test_aut_group_needs_normalized_h():
    with pytest.raises(InvalidInputError):
        aut_group(AlgebraContext(X**2 + X))


def test_validate(ctx_cubic, ctx_x2):
    assert validate(ctx_cubic, 1) is True
    assert validate(ctx_cubic, -1) is False
    assert validate(AlgebraContext(X**3 + X), -1) is True
    assert validate(ctx_x2, Fraction(7, 3)) is True
    assert validate(AlgebraContext(X**3 + X), UnitParam.symbolic()) == UnitConstraint.of([0, 2])

    with pytest.raises(InvalidAutomorphismError):
        ensure_valid(AlgebraContext(X**3 + X), Automorphism(2))
    with pytest.raises(InvalidAutomorphismError):
        apply(ctx_cubic, Automorphism(-1), T)


def test_apply(ctx_x2):
    rho = Automorphism(2, 1)
    assert apply(ctx_x2, rho, OreElement.x()) == X * 2
    assert apply(ctx_x2, rho, T) == OreElement({1: 2, 0: 2})
    assert str(image_of_t(ctx_x2, rho)) == "2*t + 2"
    assert apply(ctx_x2, rho, OreElement()) == 0

    symbolic = Automorphism(UnitParam.symbolic())
    assert str(apply(ctx_x2, symbolic, T)) == "a*t"
    assert str(apply(ctx_x2, symbolic, OreElement.x())) == "a*x"


@given(automorphisms(), elements(), elements())
@settings(max_examples=25, deadline=None)
def test_apply_is_multiplicative(rho, u, v):
    ctx = AlgebraContext(X**2)
    assert apply(ctx, rho, ore_mul(ctx, u, v)) == ore_mul(ctx, apply(ctx, rho, u), apply(ctx, rho, v))


@given(automorphisms(), automorphisms(), elements(max_deg_t=1))
@settings(max_examples=25, deadline=None)
def test_compose(rho1, rho2, u):
    ctx = AlgebraContext(X**3)
    composite = compose(ctx, rho1, rho2)
    assert apply(ctx, composite, u) == apply(ctx, rho1, apply(ctx, rho2, u))
    assert compose(ctx, rho1, invert(ctx, rho1)).is_identity
    assert compose(ctx, invert(ctx, rho1), rho1).is_identity


def test_power(ctx_x2):
    rho = Automorphism(-1, X)
    assert power(ctx_x2, rho, 2) == Automorphism(1, X * 2)
    assert power(ctx_x2, rho, 0).is_identity
    assert power(ctx_x2, rho, -1) == invert(ctx_x2, rho)

    translated = Automorphism(-1, X, 1)
    ctx = AlgebraContext(X**2 + X)
    assert power(ctx, translated, 3) == compose(ctx, compose(ctx, translated, translated), translated)


@given(automorphisms())
@settings(max_examples=25, deadline=None)
def test_power_matches_composition(rho):
    ctx = AlgebraContext(X**2)
    assert power(ctx, rho, 3) == compose(ctx, rho, compose(ctx, rho, rho))


def test_normalize_h():
    h_star, witness = normalize_h(X**2 + X * 2)
    assert h_star == X**2 - 1
    assert (witness.alpha, witness.beta, witness.gamma) == (1, -1, 1)
    assert not witness.is_identity

    h_star, witness = normalize_h(X**2 * 2)
    assert h_star == X**2
    assert witness.gamma == 2

    assert normalize_h(X**3 + X)[1].is_identity
    with pytest.raises(InvalidInputError):
        normalize_h(Poly.constant(3))


@pytest.mark.parametrize("h", [X**2 + X * 2, X**2 * 2 + X * 4, X**3 * 3 + X**2 + 1])
def test_witness_transports_relation(h):
    h_star, witness = normalize_h(h)
    ctx_star = AlgebraContext(h_star)
    assert ctx_star.is_normalized
    x_image = witness.to_normalized(OreElement.x())
    t_image = witness.to_normalized(T)
    assert commutator(ctx_star, t_image, x_image) == witness.to_normalized(OreElement.from_poly(h))
    u = OreElement({2: X, 0: X**2 + 1})
    assert witness.from_normalized(witness.to_normalized(u)) == u


def test_pull_back():
    h = X**2 + X * 2
    h_star, witness = normalize_h(h)
    ctx, ctx_star = AlgebraContext(h), AlgebraContext(h_star)
    rho = Automorphism(-1, X)
    pulled = witness.pull_back(rho)
    assert pulled == Automorphism(-1, X + 1, -2)
    ensure_valid(ctx, pulled)
    for u in (OreElement.x(), T):
        expected = witness.from_normalized(apply(ctx_star, rho, witness.to_normalized(u)))
        assert apply(ctx, pulled, u) == expected

    with pytest.raises(InvalidInputError):
        witness.pull_back(Automorphism(UnitParam.symbolic()))


def test_localization_extension(ctx_x2):
    rho = Automorphism(2, X)
    assert a_psi(ctx_x2, rho) == 2
    assert apply_to_fraction(ctx_x2, rho, fraction(ctx_x2, 1, 1)) == fraction(
        ctx_x2, Fraction(1, 2), 1
    )
    u = OreElement({1: X, 0: 1})
    assert apply_loc(ctx_x2, rho, LocElement.from_ore(ctx_x2, u)) == LocElement.from_ore(
        ctx_x2, apply(ctx_x2, rho, u)
    )
    assert a_psi(AlgebraContext(X**2 - 1), Automorphism(-1)) == 1
