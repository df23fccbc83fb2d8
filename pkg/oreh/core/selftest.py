"""
# Selftest

Randomized and fixed checks of the library, run by `oh selftest`. Every suite draws from one
seeded `random.Random`, so a run is reproducible from the configured seed.
"""
from __future__ import annotations

import logging
import random
import typing as t
from math import comb, gcd

from oreh.core import sampling
from oreh.core.algebra import AlgebraContext, OreElement, commutator, ore_mul, ore_pow
from oreh.core.automorphism import Automorphism, aut_group, compose, invert, power, validate
from oreh.core.config import IsotropyConfig, SelftestConfig
from oreh.core.cyclotomic import zeta
from oreh.core.derivation import (
    Derivation,
    conjugate,
    decompose_images,
    evaluate,
    exp_lnd,
    images,
    is_lnd,
    lnd,
)
from oreh.core.isotropy import (
    RRule,
    TorsionKind,
    check,
    check_oracle,
    describe,
    lnd_isotropy,
)
from oreh.core.localization import (
    LocElement,
    SpecialPoly,
    commutator_decompose,
    d_S,
    is_constant_kernel,
    loc_commutator,
)
from oreh.core.poly import Poly
from oreh.utils.errors import BoundsExceededError, NotStableError
from oreh.utils.pydantic import PydanticModel

logger = logging.getLogger(__name__)

X = Poly.x()


class SuiteResult(PydanticModel):
    name: str
    samples: int
    failures: t.List[str] = []

    @property
    def passed(self) -> bool:
        return not self.failures


class Suite:
    """Collects failures of one suite; exceptions raised by a sample count as failures."""

    def __init__(self, name: str):
        self.name = name
        self.samples = 0
        self.failures: t.List[str] = []

    def expect(self, condition: bool, message: str) -> None:
        if not condition:
            self.failures.append(message)

    def run(self, sample: t.Callable[[], None], label: str) -> None:
        self.samples += 1
        try:
            sample()
        except Exception as ex:
            self.failures.append(f"{label}: {type(ex).__name__}: {ex}")

    def result(self) -> SuiteResult:
        return SuiteResult(name=self.name, samples=self.samples, failures=self.failures)


def run_selftest(config: t.Optional[SelftestConfig] = None) -> t.List[SuiteResult]:
    config = config or SelftestConfig()
    rng = random.Random(config.seed)
    suites: t.List[t.Tuple[str, t.Callable[[random.Random, int], Suite], int]] = [
        ("product", product_suite, config.product),
        ("aut", aut_suite, config.aut),
        ("power", power_suite, config.power),
        ("nowicki", nowicki_suite, config.nowicki),
        ("oracle", oracle_suite, config.oracle),
        ("fixtures", lambda rng, _: fixture_suite(), 1),
        ("lnd", lnd_suite, config.lnd),
        ("localization", localization_suite, config.localization),
    ]
    results = []
    for name, fn, count in suites:
        logger.info("Running the %s suite with %d samples", name, count)
        result = fn(rng, count).result()
        if not result.passed:
            logger.warning("Suite %s failed %d times", name, len(result.failures))
        results.append(result)
    return results


def _d_power(ctx: AlgebraContext, p: Poly, n: int) -> Poly:
    """(h∂x)^n applied to p."""
    for _ in range(n):
        p = p.derivative() * ctx.h
    return p


def product_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("product")
    x = OreElement.x()
    t_ = OreElement.t()

    def sample() -> None:
        ctx = AlgebraContext(sampling.nonzero_poly(rng, rng.randint(0, 5)))
        g = sampling.poly(rng, 6)
        r = sampling.poly(rng, 6)

        n = rng.randint(0, 20)
        expected = OreElement({1: X**n, 0: X ** (n - 1) * ctx.h * n if n else Poly()})
        suite.expect(
            ore_mul(ctx, t_, OreElement.from_poly(X**n)) == expected,
            f"t·x^{n} over h = {ctx.h}",
        )

        suite.expect(
            ore_mul(ctx, t_, OreElement.from_poly(g))
            == OreElement({1: g, 0: g.derivative() * ctx.h}),
            f"t·g for g = {g} over h = {ctx.h}",
        )

        i = rng.randint(1, 8)
        bracket = OreElement({i - j: _d_power(ctx, X, j) * comb(i, j) for j in range(1, i + 1)})
        suite.expect(
            commutator(ctx, ore_pow(ctx, t_, i), x) == bracket,
            f"[t^{i}, x] over h = {ctx.h}",
        )

        i = rng.randint(1, 6)
        shifted = ore_pow(ctx, t_ + r, i)
        suite.expect(
            shifted.deg_t == i
            and shifted.coefficient(i) == Poly.one()
            and shifted.coefficient(i - 1) == r * i,
            f"(t + {r})^{i} over h = {ctx.h}",
        )

    for index in range(count):
        suite.run(sample, f"sample {index}")
    return suite


def aut_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("aut")

    def monomial_case(degree: int) -> None:
        ctx = AlgebraContext(Poly.monomial(degree))
        suite.expect(aut_group(ctx).order == 0, f"Aut(A_x^{degree}) should have torsion k*")
        suite.expect(validate(ctx, 2) is True, f"τ_2 should be valid for h = x^{degree}")

    def random_case() -> None:
        h = sampling.symmetric_h(rng, rng.randint(2, 6), rng.randint(1, 3))
        ctx = AlgebraContext(h)
        info = aut_group(ctx)
        expected = 0
        for i in h.support():
            expected = gcd(expected, ctx.N - i)
        suite.expect(info.order == expected, f"aut_group({h}) = {info.order}, expected {expected}")
        if info.order:
            suite.expect(
                validate(ctx, zeta(info.order)) is True, f"τ_ζ{info.order} invalid for {h}"
            )
            suite.expect(
                validate(ctx, zeta(2 * info.order)) is False,
                f"τ_ζ{2 * info.order} valid for {h}",
            )

    for degree in range(1, 7):
        suite.run(lambda: monomial_case(degree), f"x^{degree}")
    for index in range(count):
        suite.run(random_case, f"sample {index}")
    return suite


def power_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("power")

    def sample() -> None:
        h = sampling.symmetric_h(rng, rng.randint(1, 4), rng.randint(1, 3))
        ctx = AlgebraContext(h)
        rho = sampling.automorphism(rng, ctx, 2)
        n = rng.randint(0, 8)
        iterated = Automorphism.identity()
        for _ in range(n):
            iterated = compose(ctx, iterated, rho)
        suite.expect(power(ctx, rho, n) == iterated, f"{rho}^{n} over h = {h}")

    for index in range(count):
        suite.run(sample, f"sample {index}")
    return suite


def _random_context(rng: random.Random, degrees: t.Sequence[int]) -> AlgebraContext:
    degree = rng.choice(degrees)
    singular = degree >= 2 and rng.random() < 0.5
    return AlgebraContext(sampling.normalized_h(rng, degree, singular))


def nowicki_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("nowicki")

    def sample() -> None:
        ctx = _random_context(rng, (2, 3, 4))
        D = sampling.derivation(rng, ctx, rng.randint(0, 3))
        Dx, Dt = images(ctx, D)
        suite.expect(decompose_images(ctx, Dx, Dt) == D, f"{D} over h = {ctx.h}")

    for index in range(count):
        suite.run(sample, f"sample {index}")
    return suite


def _symmetric_case(
    rng: random.Random,
) -> t.Tuple[AlgebraContext, Derivation, Automorphism]:
    """A singular h, a derivation with a nonzero special part and a member σ ∘ τ_a ∘ σ^-1, a ≠ 1.

    The derivation is averaged over the cyclic group generated by τ_a, and c·t/ψ is fixed by τ_a
    because ψ is a power of x, so the special part survives the averaging.
    """
    ctx = AlgebraContext(sampling.singular_symmetric_h(rng))
    order = aut_group(ctx).order
    tau = Automorphism.tau(zeta(order or rng.randint(2, sampling.MAX_CONDUCTOR), 1))
    D = Derivation(
        sampling.element(rng, rng.randint(0, 2), 2),
        SpecialPoly({1: Poly.constant(sampling.rational(rng, 3, nonzero=True))}),
        sampling.poly(rng, ctx.N - 1),
    )
    Dx, Dt = OreElement(), OreElement()
    rho = Automorphism.identity()
    while True:
        x_image, t_image = images(ctx, conjugate(ctx, rho, D))
        Dx, Dt = Dx + x_image, Dt + t_image
        rho = compose(ctx, tau, rho)
        if rho == Automorphism.identity():
            break
    sigma = Automorphism.sigma(sampling.poly(rng, 2))
    member = compose(ctx, sigma, compose(ctx, tau, invert(ctx, sigma)))
    return ctx, conjugate(ctx, sigma, decompose_images(ctx, Dx, Dt)), member


def _member_candidate(
    rng: random.Random, ctx: AlgebraContext, D: Derivation, fallback: Automorphism
) -> Automorphism:
    """A member with a ≠ 1 taken from the isotropy description of D, else `fallback`."""
    try:
        description = describe(ctx, D, IsotropyConfig(order_bound=6, rdeg_bound=8))
    except BoundsExceededError:
        return fallback
    rho: t.Optional[Automorphism] = None
    if description.torsion_kind == TorsionKind.ALL_UNITS or description.r_rule == RRule.FREE:
        a = sampling.unit(rng, ctx)
        if a != 1:
            rho = description.sample(a, sampling.rational(rng))
    else:
        entries = [entry for entry in description.entries if entry.a != 1]
        if entries:
            rho = rng.choice(entries).automorphism(sampling.rational(rng))
    return rho if rho is not None else fallback


def oracle_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("oracle")
    nontrivial: t.List[int] = []

    def sample(index: int) -> None:
        if index % 4 == 0:
            ctx, D, known = _symmetric_case(rng)
            rho = _member_candidate(rng, ctx, D, known)
        else:
            ctx = _random_context(rng, (1, 2, 3, 4))
            D = sampling.derivation(rng, ctx, rng.randint(0, 3), 2)
            rho = sampling.automorphism(rng, ctx, 2)
        member = check(ctx, D, rho).is_member
        if member and rho.a_value != 1:
            nontrivial.append(index)
        suite.expect(
            member == check_oracle(ctx, D, rho),
            f"check = {member} disagrees with the oracle for {D}, {rho} over h = {ctx.h}",
        )

    for index in range(count):
        suite.run(lambda: sample(index), f"sample {index}")
    expected = len(range(0, count, 4))
    suite.expect(
        len(nontrivial) >= expected,
        f"only {len(nontrivial)} of {count} samples commute with some τ_a, a ≠ 1; "
        f"expected at least {expected}",
    )
    return suite


def fixture_suite() -> Suite:
    suite = Suite("fixtures")
    for name, fixture in FIXTURES.items():
        suite.run(lambda: fixture(suite), name)
    return suite


def _inner(ctx: AlgebraContext, terms: t.Mapping[int, Poly]) -> Derivation:
    return Derivation.inner(OreElement(terms))


def _fixture_linear_t(suite: Suite) -> None:
    ctx = AlgebraContext(X**3)
    result = describe(ctx, _inner(ctx, {1: Poly.one()}))
    suite.expect(result.torsion == "G_2", f"w = t: torsion {result.torsion}")
    suite.expect(result.r_rule == RRule.CONSTANTS_ONLY, f"w = t: rule {result.r_rule}")


def _fixture_linear_t_plus_x(suite: Suite) -> None:
    ctx = AlgebraContext(X**3)
    result = describe(ctx, _inner(ctx, {1: Poly.one(), 0: X}))
    suite.expect(result.r_rule == RRule.AFFINE_FAMILY, f"w = t + x: rule {result.r_rule}")
    rho = result.sample(-1, 5)
    suite.expect(
        rho is not None and rho.r == X * 2 + 5, f"w = t + x: a = -1 gives {rho}"
    )


def _fixture_xt_plus_x(suite: Suite) -> None:
    ctx = AlgebraContext(X**2)
    result = describe(ctx, _inner(ctx, {1: X, 0: X}))
    suite.expect(result.torsion == "G_2", f"w = xt + x: torsion {result.torsion}")
    rho = result.sample(-1)
    suite.expect(rho is not None and rho.r == Poly.constant(2), f"w = xt + x: a = -1 gives {rho}")


def _fixture_xt(suite: Suite) -> None:
    ctx = AlgebraContext(X**2)
    result = describe(ctx, _inner(ctx, {1: X}))
    suite.expect(result.torsion == "G_2", f"w = xt: torsion {result.torsion}")
    suite.expect(result.r_rule == RRule.ZERO, f"w = xt: rule {result.r_rule}")


def _fixture_x2t_plus_x(suite: Suite) -> None:
    ctx = AlgebraContext(X**2)
    result = describe(ctx, _inner(ctx, {1: X**2, 0: X}))
    suite.expect(result.torsion == "G_1", f"w = x^2t + x: torsion {result.torsion}")
    suite.expect(result.r_rule == RRule.ZERO, f"w = x^2t + x: rule {result.r_rule}")


def _fixture_polynomial_image(suite: Suite) -> None:
    ctx = AlgebraContext(X**3 + X + 1)
    D = decompose_images(ctx, OreElement.zero(), OreElement.from_poly(X**2 + 1))
    result = describe(ctx, D)
    suite.expect(result.r_rule == RRule.FREE, f"D(x) = 0: rule {result.r_rule}")
    suite.expect(result.torsion == "G_1", f"D(x) = 0: torsion {result.torsion}")


def _fixture_quadratic_all_units(suite: Suite) -> None:
    ctx = AlgebraContext(X)
    w = OreElement({2: Poly.one(), 1: X * 2, 0: X**2 + X})
    D = Derivation.inner(w)
    suite.expect(
        check(ctx, D, Automorphism(3, X * -2)).is_member, "σ_{-2x}∘τ_3 should be a member"
    )
    result = describe(ctx, D)
    suite.expect(result.torsion == "k*", f"quadratic w: torsion {result.torsion}")
    suite.expect(str(result.symbolic_r) == "(1 - a)*x", f"quadratic w: r = {result.symbolic_r}")


def _fixture_identity_only(suite: Suite) -> None:
    ctx = AlgebraContext(X)
    result = describe(ctx, _inner(ctx, {2: X}))
    suite.expect(result.torsion == "G_1", f"w = xt^2: torsion {result.torsion}")
    suite.expect(
        [entry.r for entry in result.entries] == [Poly()], f"w = xt^2: entries {result.entries}"
    )


def _fixture_conjugate(suite: Suite) -> None:
    ctx = AlgebraContext(X**2)
    E_t = Derivation.special(SpecialPoly({1: Poly.one()}))
    result = conjugate(ctx, Automorphism(1, X * X + 2), E_t)
    expected = Derivation(OreElement.x(), SpecialPoly({1: Poly.one()}), Poly.constant(2))
    suite.expect(result == expected, f"conjugate of E_t is {result}")


def _fixture_joint_member(suite: Suite) -> None:
    ctx = AlgebraContext(X**2)
    H = SpecialPoly({1: Poly.one()})
    D = Derivation(OreElement.from_poly(-X), H)
    rho = Automorphism(2, X**2)
    report = check(ctx, D, rho)
    suite.expect(report.is_member and report.delta.is_zero, f"joint membership: {report.delta}")
    suite.expect(not check(ctx, Derivation.inner(D.w), rho).is_member, "ρ should not fix ad_w")
    suite.expect(not check(ctx, Derivation.special(H), rho).is_member, "ρ should not fix E_H")
    suite.expect(not check(ctx, D, Automorphism.tau(2)).is_member, "τ_2 alone should not fix D")


FIXTURES: t.Dict[str, t.Callable[[Suite], None]] = {
    "w = t": _fixture_linear_t,
    "w = t + x": _fixture_linear_t_plus_x,
    "w = xt + x": _fixture_xt_plus_x,
    "w = xt": _fixture_xt,
    "w = x^2t + x": _fixture_x2t_plus_x,
    "D(x) = 0": _fixture_polynomial_image,
    "quadratic w over h = x": _fixture_quadratic_all_units,
    "w = xt^2": _fixture_identity_only,
    "conjugate E_t": _fixture_conjugate,
    "joint membership": _fixture_joint_member,
}


def lnd_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("lnd")

    def sample() -> None:
        ctx = _random_context(rng, (1, 2, 3))
        g = sampling.poly(rng, 5)
        D = lnd(ctx, g)
        suite.expect(is_lnd(ctx, D), f"D_g is not locally nilpotent for g = {g}")
        suite.expect(
            images(ctx, D) == (OreElement.zero(), OreElement.from_poly(g)), f"images of D_{g}"
        )
        suite.expect(conjugate(ctx, exp_lnd(ctx, g), D) == D, f"exp(D_{g}) does not fix D_{g}")

        other = sampling.derivation(rng, ctx, rng.randint(1, 2))
        if other.w.deg_t >= 1 or not other.H.is_zero:
            suite.expect(not is_lnd(ctx, other), f"{other} reported locally nilpotent")

        description = lnd_isotropy(ctx, g)
        rho = sampling.automorphism(rng, ctx)
        sampled = description.sample(rho.a_value)
        member = check(ctx, D, rho).is_member
        suite.expect(member == (sampled is not None), f"lnd_isotropy disagrees on {rho}")

    for index in range(count):
        suite.run(sample, f"sample {index}")
    return suite


def localization_suite(rng: random.Random, count: int) -> Suite:
    suite = Suite("localization")
    t_element = OreElement.t()

    def sample() -> None:
        ctx = _random_context(rng, (2, 3, 4))
        f = sampling.fraction(rng, ctx)
        suite.expect(
            is_constant_kernel(ctx, f) == f.is_constant, f"kernel detection for {f} over {ctx.h}"
        )
        t_loc = LocElement.from_ore(ctx, t_element)
        suite.expect(
            loc_commutator(ctx, LocElement.from_fraction(f), t_loc)
            == LocElement.from_fraction(-d_S(ctx, f)),
            f"[f, t] = -d_S(f) for f = {f}",
        )
        try:
            g, r_rem = commutator_decompose(ctx, f)
        except NotStableError:
            return
        split = Derivation(w=OreElement.from_poly(g), s=-r_rem)
        for u in (OreElement.x(), t_element):
            left = loc_commutator(ctx, LocElement.from_fraction(f), LocElement.from_ore(ctx, u))
            right = LocElement.from_ore(ctx, evaluate(ctx, split, u))
            suite.expect(left == right, f"commutator_decompose contract for {f} on {u}")

    for index in range(count):
        suite.run(sample, f"sample {index}")
    return suite
