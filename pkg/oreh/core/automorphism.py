"""
# Automorphisms

Automorphisms of A_h for deg h >= 1 are written ρ = σ_r ∘ τ_{a,b} with

    ρ(x) = ax + b,    ρ(t) = a^(N-1)·(t + r(x)),

and ρ is well defined exactly when h(ax + b) = a^N h(x). After normalizing h (monic, no
x^(N-1) term) the shift b is forced to 0, so most operations here expect a normalized context;
`IsoWitness` transports elements and automorphisms between A_h and A_{h*}.
"""
from __future__ import annotations

import logging
import typing as t
from fractions import Fraction

from oreh.core.algebra import AlgebraContext, OreElement, ore_mul
from oreh.core.localization import LocElement, PsiFraction, loc_mul
from oreh.core.poly import Poly, compose_affine
from oreh.core.scalar import ONE, Scalar, ScalarLike, scalar_power, to_scalar
from oreh.core.unit import LaurentUnit, UnitConstraint, UnitParam, resolve_constraint
from oreh.utils.errors import InvalidAutomorphismError, InvalidInputError
from oreh.utils.pydantic import PydanticModel, StringSerializable

logger = logging.getLogger(__name__)

Shift = t.Union[Poly, LaurentUnit]


class Automorphism(StringSerializable):
    """σ_r ∘ τ_{a,b}.

    Args:
        a: The unit parameter, concrete or symbolic.
        r: The shift of t. Symbolic automorphisms may carry a LaurentUnit.
        b: The translation of x, zero for normalized h.
    """

    __slots__ = ("a", "r", "b")

    def __init__(
        self,
        a: t.Union[UnitParam, ScalarLike],
        r: t.Optional[t.Union[Shift, ScalarLike]] = None,
        b: ScalarLike = 0,
    ):
        self.a = a if isinstance(a, UnitParam) else UnitParam.concrete(a)
        if r is None:
            r = Poly()
        elif not isinstance(r, (Poly, LaurentUnit)):
            r = Poly.constant(r)
        self.r: Shift = r
        self.b: Scalar = to_scalar(b)
        if self.b and self.a.is_symbolic:
            raise InvalidInputError("Symbolic automorphisms must have b = 0")

    @classmethod
    def identity(cls) -> Automorphism:
        return cls(1)

    @classmethod
    def sigma(cls, r: t.Union[Poly, ScalarLike]) -> Automorphism:
        return cls(1, r)

    @classmethod
    def tau(cls, a: t.Union[UnitParam, ScalarLike], b: ScalarLike = 0) -> Automorphism:
        return cls(a, None, b)

    @property
    def is_symbolic(self) -> bool:
        return self.a.is_symbolic

    @property
    def a_value(self) -> Scalar:
        return self.a.value

    @property
    def r_poly(self) -> Poly:
        if not isinstance(self.r, Poly):
            raise InvalidInputError(f"σ part {self.r} is symbolic")
        return self.r

    @property
    def is_identity(self) -> bool:
        return not self.is_symbolic and self.a_value == ONE and not self.b and not self.r

    def __eq__(self, other: t.Any) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (self.a, self.r, self.b) == (other.a, other.r, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.r, self.b))

    def __str__(self) -> str:
        tau = f"tau({self.a}, {self.b})" if self.b else f"tau({self.a})"
        return f"sigma({self.r});{tau}"

    def __repr__(self) -> str:
        return f"Automorphism({self})"


class AutGroupInfo(PydanticModel):
    """The torsion part G_n of Aut(A_h) = k[x] ⋊ G_n."""

    order: int
    generator: str
    exponents: t.List[int]

    @property
    def torsion(self) -> str:
        return "k*" if self.order == 0 else f"G_{self.order}"


class IsoWitness(PydanticModel):
    """The isomorphism A_h ≅ A_{h*} given by γ·h*(x) = h(αx + β).

    In A_h the elements X = (x - β)/α and T = (α/γ)·t satisfy TX - XT = h*(X).
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    h: Poly
    h_star: Poly

    @property
    def is_identity(self) -> bool:
        return self.alpha == 1 and self.beta == 0 and self.gamma == 1

    def to_normalized(self, u: OreElement) -> OreElement:
        """Rewrites an element of A_h in the generators of A_{h*}: x ↦ αx + β, t ↦ (γ/α)t."""
        scale = self.gamma / self.alpha
        return OreElement(
            {
                degree: compose_affine(c, self.alpha, self.beta) * scale**degree  # type: ignore
                for degree, c in u.terms.items()
            }
        )

    def from_normalized(self, u: OreElement) -> OreElement:
        """The inverse of `to_normalized`: x ↦ (x - β)/α, t ↦ (α/γ)t."""
        scale = self.alpha / self.gamma
        return OreElement(
            {
                degree: compose_affine(c, 1 / self.alpha, -self.beta / self.alpha)  # type: ignore
                * scale**degree
                for degree, c in u.terms.items()
            }
        )

    def pull_back(self, rho: Automorphism) -> Automorphism:
        """Maps an automorphism σ_r ∘ τ_a of A_{h*} to the matching automorphism of A_h."""
        if rho.is_symbolic or rho.b:
            raise InvalidInputError("Only concrete automorphisms with b = 0 can be pulled back")
        a = rho.a_value
        r = compose_affine(rho.r_poly, 1 / self.alpha, -self.beta / self.alpha) * (
            self.gamma / self.alpha
        )
        return Automorphism(a, r, (1 - a) * self.beta)


def is_normalized(h: Poly) -> bool:
    return AlgebraContext(h).is_normalized


def normalize_h(h: Poly) -> t.Tuple[Poly, IsoWitness]:
    """h* = (1/c_N)·h(x - c_{N-1}/(N·c_N)), monic without an x^(N-1) term."""
    if h.is_zero or h.degree < 1:
        raise InvalidInputError(f"normalize needs deg h >= 1, got h = {h}")
    n = int(h.degree)
    lead = h.leading_coefficient
    beta = -h[n - 1] / (n * lead)
    h_star = compose_affine(h, 1, beta) / lead
    logger.debug("Normalized %s to %s with β=%s, γ=%s", h, h_star, beta, lead)
    return h_star, IsoWitness(
        alpha=Fraction(1), beta=Fraction(beta), gamma=Fraction(lead), h=h, h_star=h_star
    )


def aut_exponents(ctx: AlgebraContext) -> UnitConstraint:
    """{N - i : i ∈ S_h}: a is admissible for τ_a iff a^e = 1 for each of them."""
    return UnitConstraint.of(ctx.N - i for i in ctx.support)


def aut_group(ctx: AlgebraContext) -> AutGroupInfo:
    ctx.ensure_normalized()
    exponents = sorted(e for e in aut_exponents(ctx).exponents if e)
    order = resolve_constraint(exponents)
    if order == 0:
        generator = "k*"
    elif order == 1:
        generator = "1"
    else:
        generator = f"zeta({order},1)"
    return AutGroupInfo(order=order, generator=generator, exponents=exponents)


def validate(
    ctx: AlgebraContext, a: t.Union[UnitParam, ScalarLike], r: t.Optional[Poly] = None
) -> t.Union[bool, UnitConstraint]:
    """Whether τ_a (and so σ_r ∘ τ_a for any r) is an automorphism of A_h.

    For symbolic a the answer is the UnitConstraint {N - i : i ∈ S_h}.
    """
    unit = a if isinstance(a, UnitParam) else UnitParam.concrete(a)
    if unit.is_symbolic:
        ctx.ensure_normalized()
        return aut_exponents(ctx)
    value = unit.value
    return compose_affine(ctx.h, value) == ctx.h * scalar_power(value, ctx.N)


def ensure_valid(ctx: AlgebraContext, rho: Automorphism) -> None:
    if rho.is_symbolic:
        return
    a = rho.a_value
    if compose_affine(ctx.h, a, rho.b) != ctx.h * scalar_power(a, ctx.N):
        raise InvalidAutomorphismError(f"{rho} is not an automorphism of A_h for h = {ctx.h}")


def _scaled_shift(ctx: AlgebraContext, rho: Automorphism) -> t.Tuple[t.Any, t.Any]:
    """(a^(N-1), a^(N-1)·r), the coefficients of t and 1 in ρ(t)."""
    if rho.is_symbolic:
        unit = LaurentUnit.a_power(ctx.N - 1)
        r = rho.r if isinstance(rho.r, LaurentUnit) else LaurentUnit.from_poly(rho.r)
        return unit, unit * r
    factor = scalar_power(rho.a_value, ctx.N - 1)
    return factor, rho.r * factor


def _map_coefficient(rho: Automorphism, c: t.Any) -> t.Any:
    if rho.is_symbolic:
        unit = c if isinstance(c, LaurentUnit) else LaurentUnit.from_poly(c)
        return unit.scale_variable(1)
    return compose_affine(c, rho.a_value, rho.b)


def image_of_t(ctx: AlgebraContext, rho: Automorphism) -> OreElement:
    lead, constant = _scaled_shift(ctx, rho)
    return OreElement({1: lead, 0: constant})


def apply(ctx: AlgebraContext, rho: Automorphism, u: OreElement) -> OreElement:
    """ρ(Σ f_i t^i) = Σ f_i(ax + b)·(a^(N-1)(t + r))^i.

    With symbolic a the coefficients of the result are LaurentUnits.
    """
    ensure_valid(ctx, rho)
    result = OreElement.zero()
    if u.is_zero:
        return result
    image = image_of_t(ctx, rho)
    power = OreElement.one()
    for degree in range(int(u.deg_t) + 1):
        if degree:
            power = ore_mul(ctx, power, image)
        if degree in u.terms:
            result = result + _map_coefficient(rho, u.terms[degree]) * power
    return result


def compose(ctx: AlgebraContext, rho1: Automorphism, rho2: Automorphism) -> Automorphism:
    """ρ1 ∘ ρ2 = σ_{r1 + a1^(1-N) r2(a1 x + b1)} ∘ τ_{a1 a2, a2 b1 + b2}."""
    if rho1.is_symbolic or rho2.is_symbolic:
        raise InvalidInputError("compose needs concrete automorphisms")
    a1, a2 = rho1.a_value, rho2.a_value
    r = rho1.r_poly + compose_affine(rho2.r_poly, a1, rho1.b) * scalar_power(a1, 1 - ctx.N)
    return Automorphism(a1 * a2, r, a2 * rho1.b + rho2.b)


def invert(ctx: AlgebraContext, rho: Automorphism) -> Automorphism:
    """ρ^-1 = σ_{-a^(N-1) r((x - b)/a)} ∘ τ_{1/a, -b/a}."""
    if rho.is_symbolic:
        raise InvalidInputError("invert needs a concrete automorphism")
    a = rho.a_value
    inverse_a = ONE / a
    r = compose_affine(rho.r_poly, inverse_a, -rho.b * inverse_a) * -scalar_power(a, ctx.N - 1)
    return Automorphism(inverse_a, r, -rho.b * inverse_a)


def power(ctx: AlgebraContext, rho: Automorphism, n: int) -> Automorphism:
    """ρ^n. For b = 0 this is σ_{R_n} ∘ τ_{a^n} with R_n = Σ_{i<n} a^(i(1-N)) r(a^i x)."""
    if rho.is_symbolic:
        raise InvalidInputError("power needs a concrete automorphism")
    if n < 0:
        return power(ctx, invert(ctx, rho), -n)
    if n == 0:
        return Automorphism.identity()
    if rho.b:
        result = rho
        for _ in range(n - 1):
            result = compose(ctx, result, rho)
        return result
    a = rho.a_value
    total = Poly()
    for i in range(n):
        a_i = scalar_power(a, i)
        total = total + rho.r_poly.scale_variable(a_i) * scalar_power(a_i, 1 - ctx.N)
    return Automorphism(scalar_power(a, n), total)


def a_psi(ctx: AlgebraContext, rho: Automorphism) -> Scalar:
    """The constant a_ψ with ρ(ψ) = a_ψ·ψ."""
    if ctx.psi.is_constant:
        return ONE
    quotient, remainder = divmod(compose_affine(ctx.psi, rho.a_value, rho.b), ctx.psi)
    if not remainder.is_zero or not quotient.is_constant:
        raise InvalidAutomorphismError(f"ρ(ψ) is not a multiple of ψ = {ctx.psi} for {rho}")
    return quotient.constant_term


def apply_to_fraction(ctx: AlgebraContext, rho: Automorphism, u: PsiFraction) -> PsiFraction:
    """ρ(num/ψ^k) = num(ax + b)·a_ψ^-k / ψ^k."""
    numerator = compose_affine(u.num, rho.a_value, rho.b)
    if u.k:
        numerator = numerator * scalar_power(a_psi(ctx, rho), -u.k)
    return PsiFraction(numerator, u.k, ctx.psi)


def apply_loc(ctx: AlgebraContext, rho: Automorphism, u: LocElement) -> LocElement:
    """The unique extension of ρ to B."""
    if rho.is_symbolic:
        raise InvalidInputError("apply_loc needs a concrete automorphism")
    ensure_valid(ctx, rho)
    result = LocElement()
    if u.is_zero:
        return result
    lead, constant = _scaled_shift(ctx, rho)
    image = LocElement.from_ore(ctx, OreElement({1: lead, 0: constant}))
    power_of_t = LocElement.from_fraction(PsiFraction.from_poly(Poly.one(), ctx.psi))
    for degree in range(int(u.deg_t) + 1):
        if degree:
            power_of_t = loc_mul(ctx, power_of_t, image)
        if degree in u.terms:
            result = result + apply_to_fraction(ctx, rho, u.terms[degree]) * power_of_t
    return result

