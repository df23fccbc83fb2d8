"""
# Ore algebra

Normal-form arithmetic in A_h = k[x][t; h∂x], the algebra generated by x and t subject to
tx - xt = h(x). Elements are written Σ f_i(x) t^i with coefficients on the left of the powers
of t, and products are normalized with the commutation rule t·f = f·t + f'·h.

The algebra itself is described by an `AlgebraContext` which is passed explicitly to every
operation: elements do not know which A_h they live in.
"""
from __future__ import annotations

import typing as t

from oreh.core.constants import DEGREE_OF_ZERO, DERIVATION_VARIABLE
from oreh.core.poly import Degree, Poly, join_signed, poly_gcd, power_string
from oreh.core.scalar import ScalarLike, is_scalar
from oreh.core.unit import LaurentUnit
from oreh.utils.errors import InvalidInputError
from oreh.utils.pydantic import StringSerializable

Coefficient = t.Union[Poly, LaurentUnit]
C = t.TypeVar("C")
ElementLike = t.Union["OreElement", Coefficient, ScalarLike]


class AlgebraContext:
    """The algebra A_h together with the polynomials derived from h.

    Args:
        h: The nonzero polynomial of the relation tx - xt = h(x).
    """

    def __init__(self, h: Poly):
        if h.is_zero:
            raise InvalidInputError("h must be a nonzero polynomial")
        self.h = h
        self.N = int(h.degree)
        self.h_prime = h.derivative()
        self.psi = poly_gcd(h, self.h_prime)
        self.q = h.exact_div(self.psi)
        self.support = h.support()

    @property
    def is_normalized(self) -> bool:
        """Monic of degree at least 1 with a vanishing x^(N-1) coefficient."""
        return self.N >= 1 and self.h.leading_coefficient == 1 and not self.h[self.N - 1]

    @property
    def is_square_free(self) -> bool:
        return self.psi.is_constant

    def ensure_normalized(self) -> None:
        if not self.is_normalized:
            raise InvalidInputError(
                f"h = {self.h} is not normalized; transport it with `normalize` first"
            )

    def __repr__(self) -> str:
        return f"AlgebraContext(h={self.h})"


def _as_coefficient(value: t.Any) -> Coefficient:
    if isinstance(value, (Poly, LaurentUnit)):
        return value
    if is_scalar(value):
        return Poly.constant(value)
    raise InvalidInputError(f"Unsupported coefficient {value!r}")


class OreElement(StringSerializable):
    """An element Σ f_i(x) t^i of A_h in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms: t.Optional[t.Mapping[int, t.Any]] = None):
        cleaned: t.Dict[int, Coefficient] = {}
        for degree, value in (terms or {}).items():
            if degree < 0:
                raise InvalidInputError(f"Negative t-degree {degree}")
            coefficient = _as_coefficient(value)
            if coefficient:
                cleaned[degree] = coefficient
        self.terms = cleaned

    @classmethod
    def zero(cls) -> OreElement:
        return cls()

    @classmethod
    def one(cls) -> OreElement:
        return cls({0: Poly.one()})

    @classmethod
    def x(cls) -> OreElement:
        return cls({0: Poly.x()})

    @classmethod
    def t(cls) -> OreElement:
        return cls({1: Poly.one()})

    @classmethod
    def from_poly(cls, poly: t.Union[Poly, ScalarLike]) -> OreElement:
        return cls({0: poly})

    @classmethod
    def monomial(cls, degree: int, coefficient: t.Any = 1) -> OreElement:
        return cls({degree: coefficient})

    @property
    def deg_t(self) -> Degree:
        return max(self.terms) if self.terms else DEGREE_OF_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(c, LaurentUnit) for c in self.terms.values())

    def coefficient(self, degree: int) -> Coefficient:
        return self.terms.get(degree, Poly())

    def leading_coefficient(self) -> Coefficient:
        return self.terms[max(self.terms)] if self.terms else Poly()

    def as_poly(self) -> Poly:
        """The element as a polynomial in x; it must have t-degree at most 0."""
        if self.deg_t > 0:
            raise InvalidInputError(f"{self} is not a polynomial in x")
        coefficient = self.coefficient(0)
        if not isinstance(coefficient, Poly):
            raise InvalidInputError(f"{self} has symbolic coefficients")
        return coefficient

    def map_coefficients(self, fn: t.Callable[[Coefficient], t.Any]) -> OreElement:
        return OreElement({i: fn(c) for i, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: t.Any) -> OreElement:
        other_element = _as_element(other)
        if other_element is None:
            return NotImplemented
        return OreElement(_add_terms(self.terms, other_element.terms))

    __radd__ = __add__

    def __neg__(self) -> OreElement:
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: t.Any) -> OreElement:
        other_element = _as_element(other)
        if other_element is None:
            return NotImplemented
        return self + (-other_element)

    def __rsub__(self, other: t.Any) -> OreElement:
        other_element = _as_element(other)
        if other_element is None:
            return NotImplemented
        return other_element - self

    def __mul__(self, other: t.Any) -> OreElement:
        if is_scalar(other):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other: t.Any) -> OreElement:
        # left multiplication by scalars and polynomials in x keeps the normal form
        if is_scalar(other) or isinstance(other, (Poly, LaurentUnit)):
            return self.map_coefficients(lambda c: other * c)
        return NotImplemented

    def __eq__(self, other: t.Any) -> bool:
        other_element = _as_element(other)
        if other_element is None:
            return NotImplemented
        return self.terms == other_element.terms

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
        return f"OreElement({self})"

    def to_json(self) -> t.List[t.List[t.Any]]:
        return [[degree, str(self.terms[degree])] for degree in sorted(self.terms)]


def _as_element(value: t.Any) -> t.Optional[OreElement]:
    if isinstance(value, OreElement):
        return value
    if is_scalar(value) or isinstance(value, (Poly, LaurentUnit)):
        return OreElement.from_poly(value)  # type: ignore
    return None


def to_element(value: ElementLike) -> OreElement:
    """Reads a scalar or a coefficient as an element of A_h."""
    element = _as_element(value)
    if element is None:
        raise InvalidInputError(f"Expected an element of A_h, got {type(value).__name__}")
    return element


def _add_terms(left: t.Mapping[int, C], right: t.Mapping[int, C]) -> t.Dict[int, C]:
    terms = dict(left)
    for degree, value in right.items():
        _accumulate(terms, degree, value)
    return terms


def _accumulate(terms: t.Dict[int, C], degree: int, value: C) -> None:
    if not value:
        return
    total = terms[degree] + value if degree in terms else value  # type: ignore
    if total:
        terms[degree] = total
    else:
        terms.pop(degree, None)


def skew_multiply(
    left: t.Mapping[int, C],
    right: t.Mapping[int, C],
    derive: t.Callable[[C], C],
) -> t.Dict[int, C]:
    """Multiplies two skew polynomials Σ c_i t^i with coefficients on the left.

    `derive` is the derivation δ of the coefficient ring with t·c = c·t + δ(c). The product
    Σ_i u_i (t^i · v) is built by pushing t through v one power at a time.
    """
    result: t.Dict[int, C] = {}
    if not left or not right:
        return result
    top = max(left)
    current: t.Dict[int, C] = dict(right)
    for power in range(top + 1):
        if power in left:
            coefficient = left[power]
            for degree, value in current.items():
                _accumulate(result, degree, coefficient * value)  # type: ignore
        if power < top:
            shifted: t.Dict[int, C] = {}
            for degree, value in current.items():
                _accumulate(shifted, degree + 1, value)
                _accumulate(shifted, degree, derive(value))
            current = shifted
    return result


def ore_mul(ctx: AlgebraContext, u: OreElement, v: OreElement) -> OreElement:
    """The normal form of u·v in A_h."""
    return OreElement(skew_multiply(u.terms, v.terms, lambda c: c.derivative() * ctx.h))


def commutator(ctx: AlgebraContext, u: OreElement, v: OreElement) -> OreElement:
    """[u, v] = uv - vu."""
    return ore_mul(ctx, u, v) - ore_mul(ctx, v, u)


def ore_pow(ctx: AlgebraContext, u: OreElement, n: int) -> OreElement:
    if n < 0:
        raise InvalidInputError(f"Negative exponent {n}")
    result = OreElement.one()
    base = u
    while n:
        if n & 1:
            result = ore_mul(ctx, result, base)
        n >>= 1
        if n:
            base = ore_mul(ctx, base, base)
    return result


def deg_t(u: OreElement) -> Degree:
    return u.deg_t
