"""
# Scalars

The active scalar field is ℚ, extended on demand by cyclotomic fields ℚ(ζ_m). Rationals are
`fractions.Fraction`; cyclotomic values are `oreh.core.cyclotomic.CyclotomicElement`. Both are
registered as `FieldScalar` so polynomial code can tell scalars apart from polynomials without
importing the cyclotomic module.

`SCALARS` exposes the field to sympy as a ground domain, so the dense polynomial and linear
algebra routines of `sympy.polys` run directly on these values.
"""
from __future__ import annotations

import abc
import typing as t
from fractions import Fraction

from sympy.polys.domains.characteristiczero import CharacteristicZero
from sympy.polys.domains.field import Field
from sympy.polys.domains.simpledomain import SimpleDomain

from oreh.utils.errors import InvalidInputError


class FieldScalar(abc.ABC):
    """Marker for elements of the active scalar field."""

    __slots__ = ()


FieldScalar.register(Fraction)

Scalar = t.Union[Fraction, FieldScalar]
ScalarLike = t.Union[int, str, Fraction, FieldScalar]

ZERO = Fraction(0)
ONE = Fraction(1)


def is_scalar(value: t.Any) -> bool:
    return not isinstance(value, bool) and isinstance(value, (int, FieldScalar))


def to_scalar(value: ScalarLike) -> Scalar:
    """Coerces ints, rational strings and field scalars into the scalar field."""
    if isinstance(value, bool):
        raise InvalidInputError(f"Boolean {value} is not a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"Invalid rational literal '{value}'")
    if isinstance(value, FieldScalar):
        return value
    raise InvalidInputError(f"Unsupported scalar {value!r} of type {type(value).__name__}")


def is_rational(value: Scalar) -> bool:
    return isinstance(value, Fraction)


def scalar_power(value: Scalar, exponent: int) -> Scalar:
    """value^exponent, negative exponents included."""
    if exponent == 0:
        return ONE
    if not value:
        if exponent < 0:
            raise InvalidInputError("Zero has no inverse")
        return ZERO
    return value**exponent  # type: ignore


class ScalarField(Field, CharacteristicZero, SimpleDomain):
    """ℚ together with its cyclotomic extensions, as a sympy ground domain."""

    dtype = Fraction
    zero = ZERO
    one = ONE
    rep = "QQ<zeta>"
    alias = "QQ_zeta"

    def __init__(self) -> None:
        pass

    def of_type(self, element: t.Any) -> bool:
        return is_scalar(element)

    def convert(self, element: t.Any, base: t.Any = None) -> Scalar:
        return to_scalar(element)


SCALARS = ScalarField()
