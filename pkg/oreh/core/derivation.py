"""
# Derivations

Every derivation of A_h decomposes uniquely as D = ad_w + E_H + Δ_s where

    - ad_w = [w, -] is inner, with w canonicalized to have no constant term,
    - E_H = [H/ψ, -] for a special polynomial H,
    - Δ_s fixes x and maps t to s(x) with deg s < deg h.

This module evaluates such triples, conjugates them by automorphisms and recovers the triple
from the images D(x) and D(t).
"""
from __future__ import annotations

import typing as t

from oreh.core.algebra import (
    AlgebraContext,
    ElementLike,
    OreElement,
    commutator,
    ore_mul,
    to_element,
)
from oreh.core.automorphism import Automorphism, apply_loc
from oreh.core.localization import (
    LocElement,
    PsiFraction,
    SpecialPoly,
    commutator_decompose,
    fraction,
    in_base_ring,
    loc_commutator,
    w_star,
)
from oreh.core.poly import Poly, compose_affine
from oreh.core.scalar import scalar_power
from oreh.utils.errors import (
    InvalidInputError,
    NotADerivationError,
    NotDecomposableError,
    NotStableError,
)
from oreh.utils.pydantic import StringSerializable


def canonical_inner(w: OreElement) -> OreElement:
    """w without the constant term of its t^0 coefficient (ad_w = ad_{w+c})."""
    constant = w.coefficient(0)
    if not isinstance(constant, Poly) or constant.is_zero:
        return w
    return w - constant.constant_term


class Derivation(StringSerializable):
    """ad_w + E_H + Δ_s."""

    __slots__ = ("w", "H", "s")

    def __init__(
        self,
        w: t.Optional[OreElement] = None,
        H: t.Optional[SpecialPoly] = None,
        s: t.Optional[Poly] = None,
    ):
        self.w = canonical_inner(w if w is not None else OreElement.zero())
        self.H = H if H is not None else SpecialPoly.zero()
        self.s = s if s is not None else Poly()

    @classmethod
    def create(
        cls,
        ctx: AlgebraContext,
        w: t.Optional[OreElement] = None,
        H: t.Optional[t.Union[SpecialPoly, OreElement]] = None,
        s: t.Optional[Poly] = None,
    ) -> Derivation:
        """Builds a derivation, checking deg s < deg h and the degree bound of H."""
        special = SpecialPoly.create(ctx, H) if H is not None else SpecialPoly.zero()
        derivation = cls(w, special, s)
        if derivation.s.degree >= ctx.N:
            raise InvalidInputError(f"deg s must be below deg h = {ctx.N}, got s = {derivation.s}")
        return derivation

    @classmethod
    def inner(cls, w: OreElement) -> Derivation:
        return cls(w=w)

    @classmethod
    def delta(cls, s: Poly) -> Derivation:
        return cls(s=s)

    @classmethod
    def special(cls, H: SpecialPoly) -> Derivation:
        return cls(H=H)

    @property
    def is_inner(self) -> bool:
        return self.H.is_zero and self.s.is_zero

    def __eq__(self, other: t.Any) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return (self.w, self.H, self.s) == (other.w, other.H, other.s)

    def __hash__(self) -> int:
        return hash((self.w, self.H, self.s))

    def __str__(self) -> str:
        return f"deriv(w={self.w}, H={self.H}, s={self.s})"

    def __repr__(self) -> str:
        return f"Derivation({self})"

    def to_json(self) -> t.Dict[str, t.Any]:
        return {"w": self.w.to_json(), "H": self.H.to_ore().to_json(), "s": str(self.s)}


def delta_of_t_power(ctx: AlgebraContext, s: Poly, n: int) -> OreElement:
    """Δ_s(t^n) = Σ_{j<n} t^j s t^(n-1-j)."""
    result = OreElement.zero()
    t_power = OreElement.one()
    s_element = OreElement.from_poly(s)
    for _ in range(n):
        # Δ(t^(j+1)) = Δ(t^j)·t + t^j·s
        result = ore_mul(ctx, result, OreElement.t()) + ore_mul(ctx, t_power, s_element)
        t_power = ore_mul(ctx, t_power, OreElement.t())
    return result


def evaluate(ctx: AlgebraContext, D: Derivation, u: OreElement) -> OreElement:
    """D(u) = [w, u] + [H/ψ, u] + Δ_s(u)."""
    result = commutator(ctx, D.w, u)
    if not D.H.is_zero:
        special = loc_commutator(ctx, w_star(ctx, OreElement.zero(), D.H), LocElement.from_ore(ctx, u))
        if not special.is_polynomial:
            raise InvalidInputError(f"E_H({u}) = {special} does not lie in A_h")
        result = result + special.to_ore()
    if not D.s.is_zero:
        for degree, coefficient in u.terms.items():
            if degree:
                result = result + coefficient * delta_of_t_power(ctx, D.s, degree)
    return result


def images(ctx: AlgebraContext, D: Derivation) -> t.Tuple[OreElement, OreElement]:
    """(D(x), D(t))."""
    return evaluate(ctx, D, OreElement.x()), evaluate(ctx, D, OreElement.t())


def derivation_check(ctx: AlgebraContext, Dx: ElementLike, Dt: ElementLike) -> bool:
    """Whether x ↦ Dx, t ↦ Dt extends to a derivation of A_h.

    Applies the Leibniz rule to tx - xt = h(x): Dt·x + t·Dx - Dx·t - x·Dt must equal
    D(h) = Σ_n c_n Σ_{j<n} x^j·Dx·x^(n-1-j).
    """
    Dx, Dt = to_element(Dx), to_element(Dt)
    x = OreElement.x()
    t_ = OreElement.t()
    left = ore_mul(ctx, Dt, x) + ore_mul(ctx, t_, Dx) - ore_mul(ctx, Dx, t_) - ore_mul(ctx, x, Dt)
    right = OreElement.zero()
    for n, c in enumerate(ctx.h.coeffs):
        for j in range(n):
            term = ore_mul(ctx, Dx, OreElement.monomial(0, Poly.monomial(n - 1 - j)))
            right = right + Poly.monomial(j, c) * term
    return left == right


def loc_decompose(
    ctx: AlgebraContext, v: LocElement
) -> t.Tuple[OreElement, SpecialPoly, Poly, Poly]:
    """Splits [v, -] into ad_{w + f} + E_H + Δ_{-r_rem}.

    Returns:
        (w, H, f, r_rem).

    Raises:
        NotDecomposableError: A coefficient of positive t-degree has a ψ-power of 2 or more, or
            the proper part of the t^0 coefficient has no polynomial commutator.
    """
    w_terms: t.Dict[int, Poly] = {}
    H_terms: t.Dict[int, Poly] = {}
    f = Poly()
    r_rem = Poly()
    for degree, coefficient in v.terms.items():
        polynomial, remainder = divmod(coefficient.num, coefficient.denominator())
        w_terms[degree] = polynomial
        if remainder.is_zero:
            continue
        if degree:
            if coefficient.k > 1:
                raise NotDecomposableError(
                    f"Coefficient {coefficient} of t^{degree} has ψ-exponent {coefficient.k}"
                )
            H_terms[degree] = remainder
        else:
            try:
                f, r_rem = commutator_decompose(ctx, PsiFraction(remainder, coefficient.k, ctx.psi))
            except NotStableError as ex:
                raise NotDecomposableError(str(ex)) from ex
    return canonical_inner(OreElement(w_terms)), SpecialPoly(H_terms), f, r_rem


def conjugate(ctx: AlgebraContext, rho: Automorphism, D: Derivation) -> Derivation:
    """ρ ∘ D ∘ ρ^-1 in (w, H, s) form."""
    if rho.is_symbolic:
        raise InvalidInputError("conjugate needs a concrete automorphism")
    a = rho.a_value
    image = apply_loc(ctx, rho, w_star(ctx, D.w, D.H))
    w, H, f, r_rem = loc_decompose(ctx, image)
    s = compose_affine(D.s, a, rho.b) * scalar_power(a, 1 - ctx.N) - r_rem
    return Derivation(w + f, H, s)


def decompose_images(ctx: AlgebraContext, Dx: ElementLike, Dt: ElementLike) -> Derivation:
    """Recovers the unique (w, H, s) with D(x) = Dx and D(t) = Dt."""
    Dx, Dt = to_element(Dx), to_element(Dt)
    if not derivation_check(ctx, Dx, Dt):
        raise NotADerivationError(f"x ↦ {Dx}, t ↦ {Dt} does not extend to a derivation")

    # solve [v, x] = Dx from the top t-degree down; [g t^(m+1), x] = (m+1)·g·h·t^m + lower
    x = LocElement.from_ore(ctx, OreElement.x())
    top = LocElement()
    residual = LocElement.from_ore(ctx, Dx)
    while not residual.is_zero:
        m = int(residual.deg_t)
        g = residual.terms[m].divide_by(ctx.h * (m + 1))
        term = LocElement.from_fraction(g, m + 1)
        top = top + term
        residual = residual - loc_commutator(ctx, term, x)

    rest = LocElement.from_ore(ctx, Dt) - loc_commutator(ctx, top, LocElement.from_ore(ctx, OreElement.t()))
    if not in_base_ring(rest) or not rest.is_polynomial:
        raise NotDecomposableError(f"D(t) - [v, t] = {rest} is not a polynomial in x")
    # rest = -w_0'·h + s
    quotient, s = divmod(rest.coefficient(0).num, ctx.h)
    w_0 = -quotient.antiderivative()
    w, H, f, r_rem = loc_decompose(ctx, top + LocElement.from_fraction(fraction(ctx, w_0)))
    return Derivation(w + f, H, s - r_rem)


def dp_decompose(ctx: AlgebraContext, p: Poly) -> t.Tuple[OreElement, Poly]:
    """D_p = ad_w + Δ_s with p = p_1·h + s and w = -∫p_1."""
    p_1, s = divmod(p, ctx.h)
    return OreElement.from_poly(-p_1.antiderivative()), s


def lnd(ctx: AlgebraContext, g: Poly) -> Derivation:
    """The locally nilpotent derivation D_g: x ↦ 0, t ↦ g."""
    w, s = dp_decompose(ctx, g)
    return Derivation(w, None, s)


def is_lnd(ctx: AlgebraContext, D: Derivation) -> bool:
    if ctx.N < 1:
        raise InvalidInputError("is_lnd needs deg h >= 1")
    return D.H.is_zero and D.w.deg_t <= 0


def exp_lnd(ctx: AlgebraContext, g: Poly) -> Automorphism:
    """exp(D_g) = σ_g, since D_g(x) = 0 and D_g^2(t) = 0."""
    return Automorphism.sigma(g)

