"""
# Localization

The Ore localization B = A_h[S^-1] at S = {ψ^n : n >= 0} with ψ = gcd(h, h'). Since d(ψ) = ψ'h
lies in ψ·k[x], the derivation d = h∂x extends to R_S = k[x][S^-1] and B ≅ R_S[t; d_S].
Each t-coefficient of a `LocElement` is a `PsiFraction` f/ψ^k carrying its own power of ψ.
"""
from __future__ import annotations

import typing as t

from oreh.core.algebra import AlgebraContext, OreElement, _accumulate, skew_multiply
from oreh.core.constants import DEGREE_OF_ZERO, DERIVATION_VARIABLE
from oreh.core.poly import Degree, Poly, join_signed, power_string
from oreh.core.scalar import ScalarLike, is_scalar
from oreh.utils.errors import InvalidInputError, NotDecomposableError, NotStableError
from oreh.utils.pydantic import StringSerializable


class PsiFraction(StringSerializable):
    """num/ψ^k, kept reduced: ψ does not divide num unless k = 0.

    Args:
        num: The numerator.
        k: The power of ψ in the denominator.
        psi: The denominator base ψ. It is irrelevant (and not compared) when k = 0.
    """

    __slots__ = ("num", "k", "psi")

    def __init__(self, num: Poly, k: int = 0, psi: t.Optional[Poly] = None):
        if k < 0:
            raise InvalidInputError(f"Negative ψ-exponent {k}")
        psi = psi if psi is not None else Poly.one()
        if num.is_zero or psi.is_constant:
            k = 0
        while k:
            quotient, remainder = divmod(num, psi)
            if not remainder.is_zero:
                break
            num = quotient
            k -= 1
        self.num = num
        self.k = k
        self.psi = psi

    @classmethod
    def from_poly(cls, poly: t.Union[Poly, ScalarLike], psi: t.Optional[Poly] = None) -> PsiFraction:
        return cls(poly if isinstance(poly, Poly) else Poly.constant(poly), 0, psi)

    @classmethod
    def zero(cls) -> PsiFraction:
        return cls(Poly())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.k == 0

    @property
    def is_constant(self) -> bool:
        return self.k == 0 and self.num.is_constant

    @property
    def degree(self) -> Degree:
        """Degree as a rational function: deg num - k·deg ψ."""
        if self.num.is_zero:
            return DEGREE_OF_ZERO
        return int(self.num.degree) - self.k * int(self.psi.degree)

    def as_poly(self) -> Poly:
        if self.k:
            raise InvalidInputError(f"{self} is not a polynomial")
        return self.num

    def denominator(self) -> Poly:
        return self.psi**self.k

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def _coerce(self, other: t.Any) -> t.Optional[PsiFraction]:
        if isinstance(other, PsiFraction):
            return other
        if isinstance(other, Poly) or is_scalar(other):
            return PsiFraction.from_poly(other, self.psi)
        return None

    def _common_psi(self, other: PsiFraction) -> Poly:
        if not self.k:
            return other.psi
        if not other.k or self.psi == other.psi:
            return self.psi
        raise InvalidInputError(f"Fractions over different denominators {self.psi} and {other.psi}")

    def __add__(self, other: t.Any) -> PsiFraction:
        other_fraction = self._coerce(other)
        if other_fraction is None:
            return NotImplemented
        psi = self._common_psi(other_fraction)
        k = max(self.k, other_fraction.k)
        num = self.num * psi ** (k - self.k) + other_fraction.num * psi ** (k - other_fraction.k)
        return PsiFraction(num, k, psi)

    __radd__ = __add__

    def __neg__(self) -> PsiFraction:
        return PsiFraction(-self.num, self.k, self.psi)

    def __sub__(self, other: t.Any) -> PsiFraction:
        other_fraction = self._coerce(other)
        if other_fraction is None:
            return NotImplemented
        return self + (-other_fraction)

    def __rsub__(self, other: t.Any) -> PsiFraction:
        other_fraction = self._coerce(other)
        if other_fraction is None:
            return NotImplemented
        return other_fraction - self

    def __mul__(self, other: t.Any) -> PsiFraction:
        other_fraction = self._coerce(other)
        if other_fraction is None:
            return NotImplemented
        psi = self._common_psi(other_fraction)
        return PsiFraction(self.num * other_fraction.num, self.k + other_fraction.k, psi)

    __rmul__ = __mul__

    def divide_by(self, divisor: Poly) -> PsiFraction:
        """self/divisor, which must again be a ψ-fraction."""
        if divisor.is_zero:
            raise InvalidInputError("Division by the zero polynomial")
        scaled = self.num
        for extra in range(int(divisor.degree) + 1):
            quotient, remainder = divmod(scaled, divisor)
            if remainder.is_zero:
                return PsiFraction(quotient, self.k + extra, self.psi)
            scaled = scaled * self.psi
        raise NotDecomposableError(f"({self})/({divisor}) has a denominator outside of S")

    def __eq__(self, other: t.Any) -> bool:
        other_fraction = self._coerce(other)
        if other_fraction is None:
            return NotImplemented
        if self.num != other_fraction.num or self.k != other_fraction.k:
            return False
        return not self.k or self.psi == other_fraction.psi

    def __hash__(self) -> int:
        if not self.k:
            return hash(self.num)
        return hash((self.num, self.k))

    def signed_terms(self, suffix: str = "") -> t.List[t.Tuple[bool, str]]:
        if not self.k:
            return self.num.signed_terms(suffix)
        body = f"{_wrap(str(self.num))}/{_wrap(str(self.psi), self.k > 1)}"
        if self.k > 1:
            body = f"{body}^{self.k}"
        return [(False, f"{body}*{suffix}" if suffix else body)]

    def __str__(self) -> str:
        return join_signed(self.signed_terms())

    def __repr__(self) -> str:
        return f"PsiFraction({self})"

    def to_json(self) -> t.Dict[str, t.Any]:
        return {"num": str(self.num), "psi_pow": self.k}


def _wrap(text: str, force: bool = False) -> str:
    if (force and "^" in text) or any(token in text for token in (" ", "*", "/")):
        return f"({text})"
    if text.startswith("-"):
        return f"({text})"
    return text


class LocElement(StringSerializable):
    """An element Σ c_i t^i of B with ψ-fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: t.Optional[t.Mapping[int, PsiFraction]] = None):
        self.terms: t.Dict[int, PsiFraction] = {
            degree: c for degree, c in (terms or {}).items() if c
        }

    @classmethod
    def from_ore(cls, ctx: AlgebraContext, u: OreElement) -> LocElement:
        return cls(
            {degree: PsiFraction.from_poly(c, ctx.psi) for degree, c in u.terms.items()}  # type: ignore
        )

    @classmethod
    def from_fraction(cls, fraction: PsiFraction, degree: int = 0) -> LocElement:
        return cls({degree: fraction})

    @property
    def deg_t(self) -> Degree:
        return max(self.terms) if self.terms else DEGREE_OF_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_polynomial(self) -> bool:
        """Whether every coefficient lies in k[x], i.e. the element comes from A_h."""
        return all(c.is_polynomial for c in self.terms.values())

    def coefficient(self, degree: int) -> PsiFraction:
        return self.terms.get(degree, PsiFraction.zero())

    def to_ore(self) -> OreElement:
        if not self.is_polynomial:
            raise InvalidInputError(f"{self} does not lie in A_h")
        return OreElement({degree: c.num for degree, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: LocElement) -> LocElement:
        if not isinstance(other, LocElement):
            return NotImplemented
        terms = dict(self.terms)
        for degree, value in other.terms.items():
            _accumulate(terms, degree, value)
        return LocElement(terms)

    def __neg__(self) -> LocElement:
        return LocElement({degree: -c for degree, c in self.terms.items()})

    def __sub__(self, other: LocElement) -> LocElement:
        if not isinstance(other, LocElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other: t.Any) -> LocElement:
        # left multiplication by an element of R_S
        if isinstance(other, (PsiFraction, Poly)) or is_scalar(other):
            return LocElement({degree: other * c for degree, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other: t.Any) -> bool:
        if not isinstance(other, LocElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        parts: t.List[t.Tuple[bool, str]] = []
        for degree in sorted(self.terms, reverse=True):
            parts.extend(
                self.terms[degree].signed_terms(power_string(DERIVATION_VARIABLE, degree))
            )
        return join_signed(parts)

    def __repr__(self) -> str:
        return f"LocElement({self})"

    def to_json(self) -> t.List[t.List[t.Any]]:
        return [[degree, self.terms[degree].to_json()] for degree in sorted(self.terms)]


class SpecialPoly(StringSerializable):
    """H = Σ_{i >= 1} h_i t^i with deg h_i < deg ψ; the zero polynomial is special."""

    __slots__ = ("terms",)

    def __init__(self, terms: t.Optional[t.Mapping[int, Poly]] = None):
        self.terms: t.Dict[int, Poly] = {
            degree: c for degree, c in (terms or {}).items() if not c.is_zero
        }
        if 0 in self.terms or any(degree < 0 for degree in self.terms):
            raise InvalidInputError("Special polynomials have no t-degree 0 term")

    @classmethod
    def zero(cls) -> SpecialPoly:
        return cls()

    @classmethod
    def from_element(cls, u: OreElement) -> SpecialPoly:
        return cls({degree: u.coefficient(degree) for degree in u.terms})  # type: ignore

    @classmethod
    def create(cls, ctx: AlgebraContext, u: t.Union[OreElement, SpecialPoly]) -> SpecialPoly:
        special = u if isinstance(u, SpecialPoly) else cls.from_element(u)
        special.validate(ctx)
        return special

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def validate(self, ctx: AlgebraContext) -> None:
        bound = ctx.psi.degree
        for degree, coefficient in self.terms.items():
            if coefficient.degree >= bound:
                raise InvalidInputError(
                    f"Invalid special polynomial: deg({coefficient}) at t^{degree} must be "
                    f"below deg ψ = {bound}"
                )

    def to_ore(self) -> OreElement:
        return OreElement(self.terms)

    def __eq__(self, other: t.Any) -> bool:
        if not isinstance(other, SpecialPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return str(self.to_ore())

    def __repr__(self) -> str:
        return f"SpecialPoly({self})"


def d_S(ctx: AlgebraContext, u: PsiFraction) -> PsiFraction:
    """The extension of h∂x to R_S: d_S(num/ψ^k) = (h·num' - k·num·ψ'·q)/ψ^k."""
    if not u.k:
        return PsiFraction(u.num.derivative() * ctx.h, 0, ctx.psi)
    numerator = ctx.h * u.num.derivative() - u.num * ctx.psi.derivative() * ctx.q * u.k
    return PsiFraction(numerator, u.k, ctx.psi)


def fraction(ctx: AlgebraContext, num: t.Union[Poly, ScalarLike], k: int = 0) -> PsiFraction:
    """num/ψ^k over the ψ of the given algebra."""
    return PsiFraction(num if isinstance(num, Poly) else Poly.constant(num), k, ctx.psi)


def loc_mul(ctx: AlgebraContext, u: LocElement, v: LocElement) -> LocElement:
    """The product in B, using t·f = f·t + d_S(f)."""
    return LocElement(skew_multiply(u.terms, v.terms, lambda c: d_S(ctx, c)))


def loc_commutator(ctx: AlgebraContext, u: LocElement, v: LocElement) -> LocElement:
    return loc_mul(ctx, u, v) - loc_mul(ctx, v, u)


def in_base_ring(u: LocElement) -> bool:
    """Whether u lies in R_S, i.e. has no positive powers of t."""
    return u.deg_t <= 0


def is_constant_kernel(ctx: AlgebraContext, u: PsiFraction) -> bool:
    """Whether d_S(u) = 0, which happens exactly for constants."""
    return d_S(ctx, u).is_zero


def w_star(ctx: AlgebraContext, w: OreElement, H: SpecialPoly) -> LocElement:
    """w + H/ψ."""
    H.validate(ctx)
    result = LocElement.from_ore(ctx, w)
    for degree, coefficient in H.terms.items():
        result = result + LocElement.from_fraction(fraction(ctx, coefficient, 1), degree)
    return result


def exact_quotient(u: PsiFraction, v: PsiFraction) -> t.Optional[Poly]:
    """u/v when it is a polynomial, otherwise None."""
    if v.is_zero:
        raise InvalidInputError("Division by zero")
    numerator = u.num * v.psi**v.k
    denominator = v.num * u.psi**u.k
    quotient, remainder = divmod(numerator, denominator)
    return quotient if remainder.is_zero else None


def commutator_decompose(ctx: AlgebraContext, u: PsiFraction) -> t.Tuple[Poly, Poly]:
    """Writes [u, -] = ad_f + Δ_{-r_rem} on A_h.

    Returns:
        (f, r_rem) where d_S(u) = f'·h + r_rem with deg r_rem < deg h and f(0) = 0.

    Raises:
        NotStableError: d_S(u) is not a polynomial, so [u, -] does not restrict to A_h.
    """
    image = d_S(ctx, u)
    if not image.is_polynomial:
        raise NotStableError(f"d_S({u}) = {image} is not a polynomial")
    quotient, r_rem = divmod(image.num, ctx.h)
    return quotient.antiderivative(), r_rem
