"""
# Unit parameters

The multiplicative parameter `a` of τ_a is either a concrete nonzero scalar or a formal
invertible symbol. Symbolic computations carry coefficients that are Laurent polynomials in `a`
with polynomial coefficients in x (`LaurentUnit`), and identities between them reduce to
root-of-unity conditions `a^e = 1` (`UnitConstraint`).
"""
from __future__ import annotations

import typing as t
from dataclasses import dataclass
from functools import reduce
from math import gcd

from oreh.core.constants import UNIT_SYMBOL, VARIABLE
from oreh.core.poly import Poly, format_term, join_monomials, join_signed, power_string
from oreh.core.scalar import ONE, Scalar, ScalarLike, is_scalar, scalar_power, to_scalar
from oreh.utils.errors import InvalidInputError
from oreh.utils.pydantic import StringSerializable


class UnitParam(StringSerializable):
    """Either a concrete nonzero scalar or the symbolic unit `a`."""

    __slots__ = ("_value",)

    def __init__(self, value: t.Optional[Scalar]):
        self._value = value

    @classmethod
    def concrete(cls, value: ScalarLike) -> UnitParam:
        scalar = to_scalar(value)
        if not scalar:
            raise InvalidInputError("The unit parameter a must be nonzero")
        return cls(scalar)

    @classmethod
    def symbolic(cls) -> UnitParam:
        return cls(None)

    @property
    def is_symbolic(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Scalar:
        if self._value is None:
            raise InvalidInputError("The symbolic unit has no concrete value")
        return self._value

    def __eq__(self, other: t.Any) -> bool:
        if not isinstance(other, UnitParam):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        return "sym" if self._value is None else str(self._value)

    def __repr__(self) -> str:
        return f"UnitParam({self})"


def resolve_constraint(constraint: t.Union[UnitConstraint, t.Iterable[int]]) -> int:
    """The order n of the group {a : a^e = 1 for all e}; 0 stands for every unit."""
    exponents = constraint.exponents if isinstance(constraint, UnitConstraint) else constraint
    return reduce(gcd, exponents, 0)


@dataclass(frozen=True)
class UnitConstraint:
    """The conditions a^e = 1 for every e in `exponents`; `unsatisfiable` admits no unit at all."""

    exponents: t.FrozenSet[int] = frozenset()
    unsatisfiable: bool = False

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise InvalidInputError(f"Negative exponent in {sorted(self.exponents)}")

    @classmethod
    def of(cls, exponents: t.Iterable[int]) -> UnitConstraint:
        return cls(frozenset(exponents))

    @classmethod
    def never(cls) -> UnitConstraint:
        return cls(unsatisfiable=True)

    @property
    def order(self) -> int:
        if self.unsatisfiable:
            raise InvalidInputError("An unsatisfiable constraint has no group of solutions")
        return resolve_constraint(self)

    @property
    def admits_all_units(self) -> bool:
        return not self.unsatisfiable and self.order == 0

    def admits(self, a: Scalar) -> bool:
        return not self.unsatisfiable and all(scalar_power(a, e) == ONE for e in self.exponents)

    def __or__(self, other: UnitConstraint) -> UnitConstraint:
        return UnitConstraint(
            self.exponents | other.exponents, self.unsatisfiable or other.unsatisfiable
        )

    def __str__(self) -> str:
        if self.unsatisfiable:
            return "never"
        exponents = sorted(e for e in self.exponents if e)
        if not exponents:
            return "none"
        return ", ".join(f"{UNIT_SYMBOL}^{e} = 1" for e in exponents)


class LaurentUnit(StringSerializable):
    """A finite sum Σ_e a^e p_e(x) with p_e polynomials and e ranging over the integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: t.Optional[t.Mapping[int, t.Union[Poly, ScalarLike]]] = None):
        cleaned: t.Dict[int, Poly] = {}
        for exponent, coefficient in (terms or {}).items():
            poly = coefficient if isinstance(coefficient, Poly) else Poly.constant(coefficient)
            if not poly.is_zero:
                cleaned[exponent] = poly
        self.terms = cleaned

    @classmethod
    def from_poly(cls, poly: Poly) -> LaurentUnit:
        return cls({0: poly})

    @classmethod
    def a_power(cls, exponent: int, coefficient: t.Union[Poly, ScalarLike] = 1) -> LaurentUnit:
        return cls({exponent: coefficient})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def x_degree(self) -> t.Union[int, float]:
        return max((p.degree for p in self.terms.values()), default=Poly().degree)

    def x_coefficient(self, degree: int) -> t.Dict[int, Scalar]:
        """The Laurent polynomial in a multiplying x^degree, as {exponent: scalar}."""
        return {e: p[degree] for e, p in self.terms.items() if p[degree]}

    def _coerce(self, other: t.Any) -> t.Optional[LaurentUnit]:
        if isinstance(other, LaurentUnit):
            return other
        if isinstance(other, Poly):
            return LaurentUnit.from_poly(other)
        if is_scalar(other):
            return LaurentUnit({0: Poly.constant(other)})
        return None

    def __add__(self, other: t.Any) -> LaurentUnit:
        other_unit = self._coerce(other)
        if other_unit is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, poly in other_unit.terms.items():
            terms[exponent] = terms.get(exponent, Poly()) + poly
        return LaurentUnit(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentUnit:
        return LaurentUnit({e: -p for e, p in self.terms.items()})

    def __sub__(self, other: t.Any) -> LaurentUnit:
        other_unit = self._coerce(other)
        if other_unit is None:
            return NotImplemented
        return self + (-other_unit)

    def __rsub__(self, other: t.Any) -> LaurentUnit:
        other_unit = self._coerce(other)
        if other_unit is None:
            return NotImplemented
        return other_unit - self

    def __mul__(self, other: t.Any) -> LaurentUnit:
        other_unit = self._coerce(other)
        if other_unit is None:
            return NotImplemented
        terms: t.Dict[int, Poly] = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other_unit.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, Poly()) + p1 * p2
        return LaurentUnit(terms)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> LaurentUnit:
        """Multiplies by a^exponent."""
        return LaurentUnit({e + exponent: p for e, p in self.terms.items()})

    def scale_variable(self, power: int = 1) -> LaurentUnit:
        """Substitutes x ↦ a^power x."""
        terms: t.Dict[int, Poly] = {}
        for exponent, poly in self.terms.items():
            for degree, c in enumerate(poly.coeffs):
                key = exponent + power * degree
                terms[key] = terms.get(key, Poly()) + Poly.monomial(degree, c)
        return LaurentUnit(terms)

    def derivative(self) -> LaurentUnit:
        """The x-derivative."""
        return LaurentUnit({e: p.derivative() for e, p in self.terms.items()})

    def evaluate(self, a: ScalarLike) -> Poly:
        value = to_scalar(a)
        result = Poly()
        for exponent, poly in self.terms.items():
            result = result + poly * scalar_power(value, exponent)
        return result

    def vanishing_constraint(self) -> t.Optional[UnitConstraint]:
        """Reduces the identity "self = 0" to a UnitConstraint.

        Every x-coefficient must be zero or a binomial c·(a^p - a^q), which vanishes exactly
        when a^|p-q| = 1. A single term c·a^p never vanishes and gives `UnitConstraint.never()`.
        Returns None when some coefficient has another shape.
        """
        exponents: t.Set[int] = set()
        if self.is_zero:
            return UnitConstraint()
        for degree in range(int(self.x_degree) + 1):
            coefficient = self.x_coefficient(degree)
            if not coefficient:
                continue
            if len(coefficient) == 1:
                return UnitConstraint.never()
            if len(coefficient) != 2:
                return None
            (p, c_p), (q, c_q) = coefficient.items()
            if c_p + c_q:
                return None
            exponents.add(abs(p - q))
        return UnitConstraint.of(exponents)

    def a_span(self, degree: int) -> int:
        """max - min exponent of a in the x^degree coefficient."""
        exponents = list(self.x_coefficient(degree))
        return max(exponents) - min(exponents) if exponents else 0

    def signed_terms(self, suffix: str = "") -> t.List[t.Tuple[bool, str]]:
        parts: t.List[t.Tuple[bool, str]] = []
        if self.is_zero:
            return parts
        for degree in range(int(self.x_degree), -1, -1):
            coefficient = self.x_coefficient(degree)
            if not coefficient:
                continue
            x_part = power_string(VARIABLE, degree)
            if len(coefficient) == 1:
                ((exponent, c),) = coefficient.items()
                parts.append(format_term(c, join_monomials(_a_power(exponent), x_part)))
            else:
                inner = join_signed(
                    [format_term(c, _a_power(e)) for e, c in sorted(coefficient.items())]
                )
                monomial = join_monomials(x_part)
                parts.append((False, f"({inner})*{monomial}" if monomial else f"({inner})"))
        if suffix:
            if len(parts) > 1:
                return [(False, f"({join_signed(parts)})*{suffix}")]
            ((negative, body),) = parts
            return [(negative, join_monomials(body, suffix))]
        return parts

    def __eq__(self, other: t.Any) -> bool:
        other_unit = self._coerce(other)
        if other_unit is None:
            return NotImplemented
        return self.terms == other_unit.terms

    def __hash__(self) -> int:
        if set(self.terms) <= {0}:
            return hash(self.terms.get(0, Poly()))
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        return join_signed(self.signed_terms())

    def __repr__(self) -> str:
        return f"LaurentUnit({self})"


def _a_power(exponent: int) -> str:
    if exponent < 0:
        return f"{UNIT_SYMBOL}^{exponent}"
    return power_string(UNIT_SYMBOL, exponent)
