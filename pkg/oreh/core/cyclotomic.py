"""
# Cyclotomic fields

Exact arithmetic in ℚ(ζ_m). An element is a polynomial in ζ_m of degree below φ(m), reduced
modulo the m-th cyclotomic polynomial. Elements of different conductors are combined in
ℚ(ζ_lcm), and any result that turns out to be rational collapses back to `Fraction`.
"""
from __future__ import annotations

import typing as t
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import divisors as sympy_divisors
from sympy import ilcm
from sympy.functions.combinatorial.numbers import mobius as sympy_mobius
from sympy.functions.combinatorial.numbers import totient

from oreh.core.poly import Poly, cyclotomic_poly, format_terms, poly_xgcd
from oreh.core.scalar import ONE, FieldScalar, Scalar, is_scalar, to_scalar
from oreh.utils.errors import InvalidInputError
from oreh.utils.pydantic import StringSerializable


def lcm(a: int, b: int) -> int:
    return int(ilcm(a, b))


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise InvalidInputError(f"Euler's totient is defined for m >= 1, got {m}")
    return int(totient(m))


@lru_cache(maxsize=None)
def mobius(m: int) -> int:
    if m < 1:
        raise InvalidInputError(f"The Möbius function is defined for m >= 1, got {m}")
    return int(sympy_mobius(m))


def divisors(n: int) -> t.List[int]:
    return [int(d) for d in sympy_divisors(n)]


class CyclotomicElement(FieldScalar, StringSerializable):
    """An element Σ c_j ζ_m^j of the cyclotomic field ℚ(ζ_m).

    Args:
        conductor: The order m of the adjoined primitive root of unity.
        coeffs: Coefficients of 1, ζ_m, ζ_m^2, ... They are reduced modulo Φ_m.
    """

    __slots__ = ("conductor", "residue")

    def __init__(self, conductor: int, coeffs: t.Iterable[t.Any] = ()):
        if conductor < 1:
            raise InvalidInputError(f"Invalid conductor {conductor}")
        self.conductor = conductor
        self.residue: Poly = Poly(coeffs) % cyclotomic_poly(conductor)

    @property
    def coefficients(self) -> t.Tuple[Scalar, ...]:
        """The φ(m) coefficients, zero padded."""
        return tuple(self.residue[j] for j in range(euler_phi(self.conductor)))

    @property
    def is_rational(self) -> bool:
        return self.residue.is_constant

    def lift(self, conductor: int) -> Poly:
        """The residue of this element inside ℚ(ζ_M) where M is a multiple of the conductor."""
        if conductor % self.conductor:
            raise InvalidInputError(f"Cannot lift ℚ(ζ_{self.conductor}) into ℚ(ζ_{conductor})")
        step = conductor // self.conductor
        lifted = Poly.from_dict({j * step: c for j, c in enumerate(self.residue.coeffs)})
        return lifted % cyclotomic_poly(conductor)

    def _common(self, other: t.Any) -> t.Optional[t.Tuple[int, Poly, Poly]]:
        if isinstance(other, CyclotomicElement):
            conductor = lcm(self.conductor, other.conductor)
            return conductor, self.lift(conductor), other.lift(conductor)
        if is_scalar(other):
            return self.conductor, self.residue, Poly.constant(to_scalar(other))
        return None

    def __add__(self, other: t.Any) -> Scalar:
        common = self._common(other)
        if common is None:
            return NotImplemented
        conductor, left, right = common
        return make_cyclotomic(conductor, left + right)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return make_cyclotomic(self.conductor, -self.residue)

    def __sub__(self, other: t.Any) -> Scalar:
        common = self._common(other)
        if common is None:
            return NotImplemented
        conductor, left, right = common
        return make_cyclotomic(conductor, left - right)

    def __rsub__(self, other: t.Any) -> Scalar:
        common = self._common(other)
        if common is None:
            return NotImplemented
        conductor, left, right = common
        return make_cyclotomic(conductor, right - left)

    def __mul__(self, other: t.Any) -> Scalar:
        common = self._common(other)
        if common is None:
            return NotImplemented
        conductor, left, right = common
        return make_cyclotomic(conductor, (left * right) % cyclotomic_poly(conductor))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.residue.is_zero:
            raise InvalidInputError("Zero has no inverse")
        _, inverse, _ = poly_xgcd(self.residue, cyclotomic_poly(self.conductor))
        return make_cyclotomic(self.conductor, inverse)

    def __truediv__(self, other: t.Any) -> Scalar:
        if isinstance(other, CyclotomicElement):
            return self * other.inverse()
        if is_scalar(other):
            divisor = to_scalar(other)
            if not divisor:
                raise InvalidInputError("Division by zero")
            return self * (ONE / divisor)
        return NotImplemented

    def __rtruediv__(self, other: t.Any) -> Scalar:
        if not is_scalar(other):
            return NotImplemented
        return self.inverse() * to_scalar(other)

    def __pow__(self, exponent: int) -> Scalar:
        base: Scalar = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result: Scalar = ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return not self.residue.is_zero

    def __eq__(self, other: t.Any) -> bool:
        common = self._common(other)
        if common is None:
            return NotImplemented
        _, left, right = common
        return left == right

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        """Tr(z) / φ(m). It does not depend on the field z is viewed in, so equal values agree."""
        total = Fraction(0)
        for j, c in enumerate(self.residue.coeffs):
            if not c:
                continue
            order = self.conductor // gcd(self.conductor, j)
            total += Fraction(c) * Fraction(mobius(order), euler_phi(order))
        return total

    def __str__(self) -> str:
        return format_terms(
            (c, f"zeta({self.conductor},{j})" if j else "")
            for j, c in enumerate(self.residue.coeffs)
        )

    def __repr__(self) -> str:
        return f"CyclotomicElement({self})"


def make_cyclotomic(conductor: int, residue: Poly) -> Scalar:
    """Builds an element of ℚ(ζ_m), collapsing rational values to `Fraction`."""
    reduced = residue % cyclotomic_poly(conductor)
    if reduced.is_constant:
        return Fraction(reduced.constant_term)
    return CyclotomicElement(conductor, reduced.coeffs)


def zeta(m: int, k: int = 1) -> Scalar:
    """ζ_m^k."""
    if m < 1:
        raise InvalidInputError(f"zeta({m},{k}) needs m >= 1")
    return make_cyclotomic(m, Poly.monomial(k % m))


def primitive_root_of_unity(m: int) -> Scalar:
    return zeta(m, 1)


def roots_of_unity(n: int) -> t.List[Scalar]:
    """All n-th roots of unity ζ_n^k for k = 0..n-1."""
    return [zeta(n, k) for k in range(n)]


def multiplicative_order(value: Scalar) -> t.Optional[int]:
    """The multiplicative order of a root of unity, None for anything else."""
    if isinstance(value, CyclotomicElement):
        # every root of unity in ℚ(ζ_m) has order dividing lcm(2, m)
        bound = lcm(2, value.conductor)
    else:
        bound = 2
    for n in divisors(bound):
        if value**n == ONE:  # type: ignore
            return n
    return None
