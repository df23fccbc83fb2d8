"""Seeded random generators for the selftest suites."""
from __future__ import annotations

import random
import typing as t
from fractions import Fraction

from oreh.core.algebra import AlgebraContext, OreElement
from oreh.core.automorphism import Automorphism, aut_group, normalize_h
from oreh.core.cyclotomic import zeta
from oreh.core.derivation import Derivation
from oreh.core.localization import PsiFraction, SpecialPoly
from oreh.core.poly import Poly
from oreh.core.scalar import Scalar
from oreh.utils.errors import InvalidInputError

MAX_CONDUCTOR = 6


def rational(rng: random.Random, bound: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        if value or not nonzero:
            return value


def poly(rng: random.Random, degree: int, bound: int = 4) -> Poly:
    """A polynomial of degree at most `degree` with sparse small rational coefficients."""
    if degree < 0:
        return Poly()
    return Poly(rational(rng, bound) if rng.random() < 0.7 else 0 for _ in range(degree + 1))


def nonzero_poly(rng: random.Random, degree: int, bound: int = 4) -> Poly:
    while True:
        result = poly(rng, degree, bound)
        if result:
            return result


def normalized_h(rng: random.Random, degree: int, singular: bool = False) -> Poly:
    """A monic h without an x^(degree-1) term; singular ones have a repeated root."""
    if degree < 1:
        raise InvalidInputError("normalized h needs degree >= 1")
    if singular and degree < 2:
        raise InvalidInputError("singular h needs degree >= 2")
    while True:
        if singular:
            root = Poly((-rational(rng, 2), 1))
            rest = poly(rng, degree - 3, 2) + Poly.monomial(degree - 2)
            h, _ = normalize_h(root * root * rest)
        else:
            h = poly(rng, degree - 2, 3) + Poly.monomial(degree)
        ctx = AlgebraContext(h)
        if ctx.is_square_free != singular:
            return h


def symmetric_h(rng: random.Random, degree: int, step: int) -> Poly:
    """A normalized h whose exponents N - i are all multiples of `step`."""
    terms = {degree: Fraction(1)}
    for i in range(degree - 2, -1, -1):
        if (degree - i) % step == 0 and rng.random() < 0.6:
            terms[i] = rational(rng, 3, nonzero=True)
    return Poly.from_dict(terms)


def singular_symmetric_h(rng: random.Random, max_degree: int = 5) -> Poly:
    """x^N or x^N + c·x^(N-k) with N - k >= 2, so that x^2 divides h and ψ is a power of x."""
    degree = rng.randint(2, max_degree)
    step = rng.randint(2, degree)
    if degree - step < 2 or rng.random() < 0.3:
        return Poly.monomial(degree)
    return Poly.monomial(degree) + Poly.monomial(degree - step, rational(rng, 3, nonzero=True))


def element(rng: random.Random, deg_t: int, degree: int) -> OreElement:
    return OreElement({i: poly(rng, degree) for i in range(deg_t + 1)})


def special(rng: random.Random, ctx: AlgebraContext, deg_t: int) -> SpecialPoly:
    bound = int(ctx.psi.degree) - 1
    if bound < 0 or deg_t < 1:
        return SpecialPoly.zero()
    return SpecialPoly({i: poly(rng, bound) for i in range(1, deg_t + 1)})


def derivation(rng: random.Random, ctx: AlgebraContext, deg_t: int, degree: int = 3) -> Derivation:
    return Derivation(
        element(rng, deg_t, degree),
        special(rng, ctx, rng.randint(0, deg_t)),
        poly(rng, ctx.N - 1),
    )


def unit(rng: random.Random, ctx: AlgebraContext) -> Scalar:
    """An a for which τ_a is an automorphism of the normalized A_h."""
    order = aut_group(ctx).order
    if order == 0:
        if rng.random() < 0.5:
            return rational(rng, 3, nonzero=True)
        m = rng.randint(1, MAX_CONDUCTOR)
        return zeta(m, rng.randrange(m))
    return zeta(order, rng.randrange(order))


def automorphism(rng: random.Random, ctx: AlgebraContext, degree: int = 3) -> Automorphism:
    return Automorphism(unit(rng, ctx), poly(rng, degree))


def fraction(rng: random.Random, ctx: AlgebraContext, degree: int = 3) -> PsiFraction:
    """num/ψ^k, built unreduced when ψ divides the numerator."""
    k = rng.randint(0, 2)
    numerator = poly(rng, degree)
    if rng.random() < 0.3:
        numerator = numerator * ctx.psi
        k += 1
    return PsiFraction(numerator, k, ctx.psi)
