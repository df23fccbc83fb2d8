from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oreh.core.algebra import AlgebraContext, OreElement
from oreh.core.automorphism import Automorphism, apply, compose, invert
from oreh.core.config import IsotropyConfig
from oreh.core.cyclotomic import zeta
from oreh.core.derivation import Derivation, decompose_images
from oreh.core.isotropy import (
    RRule,
    TorsionKind,
    check,
    check_oracle,
    check_symbolic,
    delta_torsion,
    describe,
    lnd_isotropy,
    required_rhs,
)
from oreh.core.localization import SpecialPoly
from oreh.core.poly import Poly, compose_affine
from oreh.core.scalar import scalar_power
from oreh.core.unit import UnitParam
from oreh.utils.errors import BoundsExceededError, InvalidInputError
from tests.strategies import elements, polys, rationals, units

X = Poly.x()


def inner(terms) -> Derivation:
    return Derivation.inner(OreElement(terms))


@pytest.fixture
def joint() -> Derivation:
    return Derivation(OreElement.from_poly(-X), SpecialPoly({1: Poly.one()}))


@pytest.fixture
def quadratic() -> Derivation:
    return inner({2: Poly.one(), 1: X * 2, 0: X**2 + X})


def test_required_rhs(ctx_x2):
    assert required_rhs(ctx_x2, X, 2) == Poly()
    assert required_rhs(ctx_x2, Poly.one(), 2) == Poly.constant(Fraction(-1, 2))
    assert required_rhs(ctx_x2, Poly(), 5) == Poly()


def test_check_joint_membership(ctx_x2, joint):
    rho = Automorphism(2, X**2)
    report = check(ctx_x2, joint, rho)
    assert report.is_member
    assert report.delta.is_zero
    assert check_oracle(ctx_x2, joint, rho)

    assert not check(ctx_x2, Derivation.inner(joint.w), rho).is_member
    assert not check(ctx_x2, Derivation.special(joint.H), rho).is_member
    assert not check(ctx_x2, joint, Automorphism.tau(2)).is_member
    assert not check_oracle(ctx_x2, joint, Automorphism.tau(2))


@pytest.mark.parametrize(
    "rho",
    [
        Automorphism.identity(),
        Automorphism(-1),
        Automorphism(3, X + 1),
        Automorphism(1, X**3),
        Automorphism(2, X**2),
    ],
)
def test_check_agrees_with_oracle(ctx_x2, joint, rho):
    for D in (joint, inner({1: X, 0: X}), Derivation.delta(X), inner({2: X})):
        assert check(ctx_x2, D, rho).is_member == check_oracle(ctx_x2, D, rho)


def test_check_rejects(ctx_x2, ctx_cubic, joint):
    report = check(ctx_x2, inner({1: X}), Automorphism(1, X))
    assert not report.is_member
    assert report.delta.deg_t == 0

    report = check(ctx_x2, inner({2: Poly.one()}), Automorphism(2))
    assert not report.is_member
    assert report.dS_delta is None

    with pytest.raises(InvalidInputError):
        check(ctx_x2, joint, Automorphism(UnitParam.symbolic()))
    with pytest.raises(InvalidInputError):
        check(ctx_cubic, inner({1: X}), Automorphism(-1))


def test_delta_torsion(ctx_x2, ctx_x3):
    assert delta_torsion(ctx_x3, X).order == 1
    assert delta_torsion(ctx_x3, X**2).admits_all_units
    assert delta_torsion(ctx_x3, Poly.one()).order == 2
    assert delta_torsion(ctx_x3, Poly()).admits_all_units
    with pytest.raises(InvalidInputError):
        delta_torsion(ctx_x2, X**2)


def test_lnd_isotropy(ctx_x2):
    free = lnd_isotropy(ctx_x2, X)
    assert free.torsion == "k*"
    assert free.r_rule == RRule.FREE
    assert free.sample(5, 2) == Automorphism(5)

    trivial = lnd_isotropy(ctx_x2, Poly.one())
    assert trivial.torsion == "G_1"
    assert trivial.sample(2) is None
    assert trivial.sample(1) == Automorphism.identity()


def test_linear_t(ctx_x3):
    result = describe(ctx_x3, inner({1: Poly.one()}))
    assert result.torsion == "G_2"
    assert result.torsion_kind == TorsionKind.CYCLIC_ORDER
    assert result.r_rule == RRule.CONSTANTS_ONLY
    assert result.certified
    assert result.sample(-1, 3) == Automorphism(-1, 3)
    assert result.sample(2) is None


def test_linear_t_plus_x(ctx_x3):
    D = inner({1: Poly.one(), 0: X})
    result = describe(ctx_x3, D)
    assert result.r_rule == RRule.AFFINE_FAMILY
    rho = result.sample(-1, 5)
    assert rho is not None and rho.r == X * 2 + 5
    assert check(ctx_x3, D, rho).is_member

    with pytest.raises(BoundsExceededError):
        describe(ctx_x3, D, IsotropyConfig(rdeg_bound=0))


def test_xt_plus_x(ctx_x2):
    result = describe(ctx_x2, inner({1: X, 0: X}))
    assert result.torsion == "G_2"
    rho = result.sample(-1)
    assert rho is not None and rho.r == Poly.constant(2)


@pytest.mark.parametrize(
    "terms, torsion",
    [({1: X}, "G_2"), ({1: X**2, 0: X}, "G_1")],
)
def test_zero_shift(ctx_x2, terms, torsion):
    result = describe(ctx_x2, inner(terms))
    assert result.torsion == torsion
    assert result.r_rule == RRule.ZERO


def test_polynomial_image(ctx_cubic):
    D = decompose_images(ctx_cubic, OreElement.zero(), OreElement.from_poly(X**2 + 1))
    result = describe(ctx_cubic, D)
    assert result.r_rule == RRule.FREE
    assert result.torsion == "G_1"


def test_quadratic_all_units(ctx_x, quadratic):
    assert check(ctx_x, quadratic, Automorphism(3, X * -2)).is_member
    result = describe(ctx_x, quadratic)
    assert result.torsion == "k*"
    assert result.order == 0
    assert str(result.symbolic_r) == "(1 - a)*x"
    assert result.sample(3) == Automorphism(3, X * -2)


def test_check_symbolic(ctx_x, ctx_x2, quadratic, joint):
    symbolic_r = describe(ctx_x, quadratic).symbolic_r
    assert check_symbolic(ctx_x, quadratic, symbolic_r).admits_all_units
    assert check_symbolic(ctx_x, quadratic).order == 1

    with pytest.raises(InvalidInputError):
        check_symbolic(ctx_x2, joint)


def test_check_symbolic_without_solutions(ctx_x):
    D = inner({2: Poly.one()})
    assert check_symbolic(ctx_x, D, Poly.one()).unsatisfiable
    assert check_symbolic(ctx_x, D).admits_all_units


def test_identity_only(ctx_x):
    result = describe(ctx_x, inner({2: X}))
    assert result.torsion == "G_1"
    assert [entry.r for entry in result.entries] == [Poly()]


def test_enumeration_bounds(ctx_x3):
    result = describe(ctx_x3, inner({1: Poly.one()}), IsotropyConfig(order_bound=1))
    assert result.torsion_kind == TorsionKind.ENUMERATED
    assert not result.certified
    assert result.order is None
    assert result.torsion == "{1}"
    assert result.notes


def test_concurrent_enumeration(ctx_x3):
    D = inner({1: Poly.one(), 0: X})
    sequential = describe(ctx_x3, D, IsotropyConfig(tasks_num=1))
    concurrent = describe(ctx_x3, D, IsotropyConfig(tasks_num=4))
    assert concurrent == sequential


def test_describe_needs_normalized_h(joint):
    with pytest.raises(InvalidInputError):
        describe(AlgebraContext(X**2 + X), joint)


@given(st.sampled_from([1, -1]), st.sampled_from([1, -1]), rationals(), rationals())
@settings(max_examples=20, deadline=None)
def test_affine_family_is_a_group(a1, a2, c1, c2):
    ctx = AlgebraContext(X**3)
    D = inner({1: Poly.one(), 0: X})
    result = describe(ctx, D)
    rho1, rho2 = result.sample(a1, c1), result.sample(a2, c2)
    assert check(ctx, D, compose(ctx, rho1, rho2)).is_member
    assert check(ctx, D, invert(ctx, rho1)).is_member


@given(units(), units())
@settings(max_examples=20, deadline=None)
def test_all_units_family_is_a_group(a1, a2):
    ctx = AlgebraContext(X)
    D = inner({2: Poly.one(), 1: X * 2, 0: X**2 + X})
    result = describe(ctx, D)
    rho1, rho2 = result.sample(a1), result.sample(a2)
    assert check(ctx, D, compose(ctx, rho1, rho2)).is_member
    assert check(ctx, D, invert(ctx, rho1)).is_member


@given(elements(), polys(2), st.sampled_from([1, -1]), polys(2))
@settings(max_examples=30, deadline=None)
def test_square_free_isotropy_is_an_intersection(w, s, a, r):
    ctx = AlgebraContext(X**3 + X)
    rho = Automorphism(a, r)
    joint = check(ctx, Derivation(w, None, s), rho).is_member
    inner_member = check(ctx, Derivation.inner(w), rho).is_member
    delta_member = check(ctx, Derivation.delta(s), rho).is_member
    assert joint == (inner_member and delta_member)


def test_square_free_intersection_cases():
    ctx = AlgebraContext(X**3 + X)
    rho = Automorphism(-1)
    w = OreElement.from_poly(X**2)
    assert check(ctx, Derivation(w, None, X**2 + 1), rho).is_member
    assert not check(ctx, Derivation(w, None, X), rho).is_member
    assert not check(ctx, Derivation.delta(X), rho).is_member
    assert check(ctx, Derivation.inner(w), rho).is_member


@given(st.integers(0, 2), elements(max_deg_t=2, max_degree=7))
@settings(max_examples=30, deadline=None)
def test_tau_members_fix_w(k, noise):
    ctx = AlgebraContext(X**4 + X)
    rho = Automorphism.tau(zeta(3, k))
    invariant = OreElement(
        {
            degree: Poly.from_dict({i: c for i, c in enumerate(p.coeffs) if i % 3 == 0})
            for degree, p in noise.terms.items()
        }
    )
    for w in (noise, invariant):
        D = Derivation.inner(w)
        if check(ctx, D, rho).is_member:
            assert apply(ctx, rho, D.w) == D.w
    assert check(ctx, Derivation.inner(invariant), rho).is_member


def test_determined_shift_solves_the_subleading_equation():
    ctx = AlgebraContext(X**3 + X)
    D = inner({2: Poly.one(), 1: X, 0: (X**3 + X) / 2})
    result = describe(ctx, D)
    assert result.r_rule == RRule.DETERMINED
    assert result.torsion == "G_2"
    assert result.sample(-1) == Automorphism(-1, X)

    ell = 2
    top, below = D.w.terms[ell], D.w.terms[ell - 1]
    for entry in result.entries:
        twisted = compose_affine(below, entry.a) * scalar_power(entry.a, (ell - 1) * (ctx.N - 1))
        assert top * entry.r * ell == below - twisted
