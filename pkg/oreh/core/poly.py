"""
# Poly

Dense univariate polynomials over the active scalar field. Coefficients are stored from the
constant term upwards and trailing zeros are always trimmed, so the zero polynomial has an
empty coefficient tuple and the sentinel degree `DEGREE_OF_ZERO`.

Arithmetic runs through sympy's dense `dup_*` routines over the `SCALARS` ground domain. Those
routines list coefficients from the leading term down, which is what `Poly.rep` returns.
"""
from __future__ import annotations

import typing as t
from fractions import Fraction
from functools import lru_cache

from sympy import cyclotomic_poly as sympy_cyclotomic_poly
from sympy.polys.densearith import (
    dup_add,
    dup_div,
    dup_mul,
    dup_mul_ground,
    dup_neg,
    dup_pow,
    dup_quo_ground,
    dup_sub,
)
from sympy.polys.densetools import (
    dup_diff,
    dup_eval,
    dup_integrate,
    dup_monic,
    dup_scale,
    dup_shift,
)
from sympy.polys.euclidtools import dup_gcdex
from sympy.polys.matrices import DomainMatrix

from oreh.core.constants import DEGREE_OF_ZERO, VARIABLE
from oreh.core.scalar import ONE, SCALARS, ZERO, Scalar, ScalarLike, is_scalar, to_scalar
from oreh.utils.errors import InvalidInputError
from oreh.utils.pydantic import StringSerializable

Degree = t.Union[int, float]


class Poly(StringSerializable):
    """A polynomial f(x) = Σ c_i x^i.

    Args:
        coeffs: Coefficients ordered by degree, starting with the constant term.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: t.Iterable[ScalarLike] = ()):
        values = [to_scalar(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs: t.Tuple[Scalar, ...] = tuple(values)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((ONE,))

    @classmethod
    def x(cls) -> Poly:
        return cls((ZERO, ONE))

    @classmethod
    def constant(cls, value: ScalarLike) -> Poly:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: ScalarLike = 1) -> Poly:
        if degree < 0:
            raise InvalidInputError(f"Negative degree {degree}")
        return cls([ZERO] * degree + [to_scalar(coefficient)])

    @classmethod
    def from_dict(cls, terms: t.Mapping[int, ScalarLike]) -> Poly:
        if not terms:
            return cls()
        values: t.List[Scalar] = [ZERO] * (max(terms) + 1)
        for degree, coefficient in terms.items():
            if degree < 0:
                raise InvalidInputError(f"Negative degree {degree}")
            values[degree] = values[degree] + to_scalar(coefficient)
        return cls(values)

    @classmethod
    def from_rep(cls, rep: t.Sequence[Scalar]) -> Poly:
        """Builds a polynomial from a dense list ordered from the leading coefficient down."""
        return cls(reversed(rep))

    @property
    def rep(self) -> t.List[Scalar]:
        return list(reversed(self.coeffs))

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading_coefficient(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def constant_term(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else ZERO

    def __getitem__(self, degree: int) -> Scalar:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return ZERO

    def support(self) -> t.Set[int]:
        return {i for i, c in enumerate(self.coeffs) if c}

    def terms(self) -> t.Iterator[t.Tuple[int, Scalar]]:
        """Nonzero (degree, coefficient) pairs from the highest degree down."""
        for degree in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[degree]:
                yield degree, self.coeffs[degree]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: t.Any) -> Poly:
        other_poly = _as_poly(other)
        if other_poly is None:
            return NotImplemented
        return Poly.from_rep(dup_add(self.rep, other_poly.rep, SCALARS))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly.from_rep(dup_neg(self.rep, SCALARS))

    def __sub__(self, other: t.Any) -> Poly:
        other_poly = _as_poly(other)
        if other_poly is None:
            return NotImplemented
        return Poly.from_rep(dup_sub(self.rep, other_poly.rep, SCALARS))

    def __rsub__(self, other: t.Any) -> Poly:
        other_poly = _as_poly(other)
        if other_poly is None:
            return NotImplemented
        return other_poly - self

    def __mul__(self, other: t.Any) -> Poly:
        if is_scalar(other):
            return Poly.from_rep(dup_mul_ground(self.rep, to_scalar(other), SCALARS))
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly.from_rep(dup_mul(self.rep, other.rep, SCALARS))

    __rmul__ = __mul__

    def __truediv__(self, other: t.Any) -> Poly:
        if not is_scalar(other):
            return NotImplemented
        divisor = to_scalar(other)
        if not divisor:
            raise InvalidInputError("Division by zero")
        return Poly.from_rep(dup_quo_ground(self.rep, divisor, SCALARS))

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise InvalidInputError(f"Negative exponent {exponent}")
        return Poly.from_rep(dup_pow(self.rep, exponent, SCALARS))

    def __divmod__(self, other: Poly) -> t.Tuple[Poly, Poly]:
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise InvalidInputError("Division by the zero polynomial")
        quotient, remainder = dup_div(self.rep, other.rep, SCALARS)
        return Poly.from_rep(quotient), Poly.from_rep(remainder)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        """Divides by `other`, raising if the division leaves a remainder."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise InvalidInputError(f"{other} does not divide {self}")
        return quotient

    def divides(self, other: Poly) -> bool:
        """Whether self divides other."""
        return (other % self).is_zero

    def __call__(self, value: t.Any) -> t.Any:
        """Evaluates at a scalar or at any ring element by Horner's scheme."""
        if not is_scalar(value) and not value:
            # the zero of the target ring
            return value + self.constant_term
        return dup_eval(self.rep, value, SCALARS)

    def derivative(self) -> Poly:
        return Poly.from_rep(dup_diff(self.rep, 1, SCALARS))

    def antiderivative(self) -> Poly:
        """The antiderivative with zero constant term."""
        return Poly.from_rep(dup_integrate(self.rep, 1, SCALARS))

    def monic(self) -> Poly:
        return Poly.from_rep(dup_monic(self.rep, SCALARS))

    def scale_variable(self, a: ScalarLike) -> Poly:
        """f(ax)."""
        return Poly.from_rep(dup_scale(self.rep, to_scalar(a), SCALARS))

    def compose_affine(self, a: ScalarLike, b: ScalarLike = 0) -> Poly:
        """f(ax + b)."""
        return compose_affine(self, a, b)

    def signed_terms(self, suffix: str = "", variable: str = VARIABLE) -> t.List[t.Tuple[bool, str]]:
        """Signed display terms, each multiplied on the right by `suffix`."""
        terms = list(self.terms())
        if suffix and len(terms) > 1:
            return [(False, f"({self.to_string(variable)})*{suffix}")]
        return [format_term(c, join_monomials(power_string(variable, i), suffix)) for i, c in terms]

    def to_string(self, variable: str = VARIABLE) -> str:
        return join_signed(self.signed_terms(variable=variable))

    def __eq__(self, other: t.Any) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if is_scalar(other):
            return self.is_constant and self.constant_term == to_scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_term)
        return hash(self.coeffs)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self})"


def _as_poly(value: t.Any) -> t.Optional[Poly]:
    if isinstance(value, Poly):
        return value
    if is_scalar(value):
        return Poly.constant(value)
    return None


def join_monomials(*parts: str) -> str:
    return "*".join(part for part in parts if part)


def power_string(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


def format_terms(terms: t.Iterable[t.Tuple[t.Any, str]]) -> str:
    """Renders a sum of coefficient * monomial terms.

    Rational coefficients contribute their sign to the joining operator; any other coefficient
    is parenthesized. An empty sum renders as "0".
    """
    parts = [format_term(c, monomial) for c, monomial in terms if c]
    return join_signed(parts)


def format_term(coefficient: t.Any, monomial: str) -> t.Tuple[bool, str]:
    if isinstance(coefficient, (int, Fraction)):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if not monomial:
            return negative, str(magnitude)
        if magnitude == 1:
            return negative, monomial
        return negative, f"{magnitude}*{monomial}"
    text = f"({coefficient})"
    return False, f"{text}*{monomial}" if monomial else text


def join_signed(parts: t.Sequence[t.Tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    pieces = []
    for index, (negative, body) in enumerate(parts):
        if index == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def derivative(f: Poly) -> Poly:
    return f.derivative()


def support(f: Poly) -> t.Set[int]:
    return f.support()


def compose_affine(f: Poly, a: ScalarLike, b: ScalarLike = 0) -> Poly:
    """Returns f(ax + b) as the Taylor shift f(y + b) followed by y = ax."""
    a_value = to_scalar(a)
    b_value = to_scalar(b)
    if not a_value:
        raise InvalidInputError("compose_affine requires a nonzero scale")
    shifted = dup_shift(f.rep, b_value, SCALARS) if b_value else f.rep
    return Poly.from_rep(dup_scale(shifted, a_value, SCALARS))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """The monic greatest common divisor of f and g."""
    return poly_xgcd(f, g)[0]


def poly_xgcd(f: Poly, g: Poly) -> t.Tuple[Poly, Poly, Poly]:
    """Returns (d, u, v) with d = gcd(f, g) monic and u*f + v*g = d."""
    if f.is_zero and g.is_zero:
        raise InvalidInputError("gcd(0, 0) is undefined")
    u, v, d = dup_gcdex(f.rep, g.rep, SCALARS)
    return Poly.from_rep(d), Poly.from_rep(u), Poly.from_rep(v)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial Φ_m."""
    if m < 1:
        raise InvalidInputError(f"Cyclotomic polynomials are indexed by m >= 1, got {m}")
    return Poly.from_rep([int(c) for c in sympy_cyclotomic_poly(m, polys=True).all_coeffs()])


def solve_linear_system(
    rows: t.Sequence[t.Sequence[ScalarLike]],
    rhs: t.Sequence[ScalarLike],
    columns: int,
) -> t.Tuple[t.Optional[t.List[Scalar]], t.List[t.List[Scalar]]]:
    """Solves rows · v = rhs over the scalar field from the reduced row echelon form.

    Args:
        rows: The coefficient matrix, one sequence of `columns` scalars per equation.
        rhs: The right hand side, one scalar per equation.
        columns: The number of unknowns.

    Returns:
        A particular solution (None when the system is inconsistent) and a basis of the kernel.
    """
    entries: t.Dict[int, t.Dict[int, Scalar]] = {}
    for i, (row, b) in enumerate(zip(rows, rhs)):
        values = [to_scalar(v) for v in row] + [to_scalar(b)]
        nonzero = {j: value for j, value in enumerate(values) if value}
        if nonzero:
            entries[i] = nonzero
    augmented = DomainMatrix(entries, (len(rows), columns + 1), SCALARS)
    reduced, pivots = augmented.rref()
    echelon = list(zip(reduced.to_list(), pivots))

    kernel = []
    for free in (column for column in range(columns) if column not in pivots):
        vector = [ZERO] * columns
        vector[free] = ONE
        for row, pivot in echelon:
            if pivot < columns:
                vector[pivot] = -row[free]
        kernel.append(vector)

    if columns in pivots:
        return None, kernel
    solution = [ZERO] * columns
    for row, pivot in echelon:
        solution[pivot] = row[columns]
    return solution, kernel
