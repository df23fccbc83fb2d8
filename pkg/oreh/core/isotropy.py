"""
# Isotropy groups

The isotropy group of a derivation D is Aut_D(A_h) = {ρ : ρ∘D = D∘ρ}. Writing D through its
localized inner part w* = w + H/ψ and its Δ_s part, an automorphism ρ = σ_r ∘ τ_a belongs to
it exactly when

    δ = ρ(w*) - w*  lies in R_S   and   d_S(δ) = a^(1-N)·s(ax) - s(x).

`check` decides this for a concrete automorphism and `check_oracle` compares ρD and Dρ on the
generators directly. `describe` assembles the whole group: the necessary conditions on the
leading coefficient of w*, on s and on τ_a itself bound the admissible values of a, and for each
of them the shift r is solved for and verified with `check`.
"""
from __future__ import annotations

import logging
import typing as t
from enum import Enum
from math import gcd

from oreh.core.algebra import AlgebraContext, OreElement
from oreh.core.automorphism import (
    Automorphism,
    apply,
    apply_loc,
    apply_to_fraction,
    aut_exponents,
    ensure_valid,
    image_of_t,
    validate,
)
from oreh.core.config import IsotropyConfig
from oreh.core.constants import DEGREE_OF_ZERO
from oreh.core.cyclotomic import divisors, euler_phi, roots_of_unity, zeta
from oreh.core.derivation import Derivation, evaluate
from oreh.core.localization import (
    LocElement,
    PsiFraction,
    d_S,
    exact_quotient,
    in_base_ring,
    w_star,
)
from oreh.core.poly import Poly, compose_affine, solve_linear_system
from oreh.core.scalar import FieldScalar, Scalar, ScalarLike, scalar_power, to_scalar
from oreh.core.unit import LaurentUnit, UnitConstraint, UnitParam
from oreh.utils.concurrency import NodeExecutionFailedError, concurrent_apply_to_values
from oreh.utils.errors import BoundsExceededError, InvalidInputError, OreError
from oreh.utils.pydantic import PydanticModel

logger = logging.getLogger(__name__)

Shift = t.Union[Poly, LaurentUnit]


class TorsionKind(str, Enum):
    ALL_UNITS = "AllUnits"
    CYCLIC_ORDER = "CyclicOrder"
    ENUMERATED = "Enumerated"


class RRule(str, Enum):
    """How the shift r of σ_r ∘ τ_a depends on a."""

    FREE = "Free"
    ZERO = "Zero"
    CONSTANTS_ONLY = "ConstantsOnly"
    DETERMINED = "Determined"
    AFFINE_FAMILY = "AffineFamily"


class MembershipReport(PydanticModel):
    """The outcome of `check`.

    Args:
        is_member: Whether ρ commutes with D.
        delta: ρ(w*) - w*.
        dS_delta: d_S(delta), or None when delta has positive t-degree.
        required_rhs: a^(1-N)·s(ax) - s(x).
        constant: The constant term of delta when delta is a polynomial.
    """

    is_member: bool
    delta: LocElement
    dS_delta: t.Optional[PsiFraction] = None
    required_rhs: Poly
    constant: t.Optional[FieldScalar] = None


class IsotropyEntry(PydanticModel):
    """An admissible a with the shift r(x); direction spans the free constant of the family."""

    a: FieldScalar
    r: Poly
    direction: t.Optional[Poly] = None

    def automorphism(self, c: ScalarLike = 0) -> Automorphism:
        r = self.r + self.direction * to_scalar(c) if self.direction is not None else self.r
        return Automorphism(self.a, r)


class IsotropyDescription(PydanticModel):
    """Aut_D(A_h) = {σ_r ∘ τ_a} described by its admissible a and the rule producing r.

    Args:
        torsion_kind: All units, a cyclic group G_n, or an enumeration limited by bounds.
        order: n for G_n, 0 for all units and None for enumerations.
        r_rule: How r depends on a.
        entries: The admissible a with their r, for finite torsion.
        symbolic_r: r as a Laurent polynomial in a, when every unit is admissible.
        symbolic_direction: The free-constant direction of r for all-units families.
        exponents: The exponents e of the necessary conditions a^e = 1.
        certified: False when enumeration bounds limited the search.
        notes: Human readable remarks about how the description was obtained.
    """

    torsion_kind: TorsionKind
    order: t.Optional[int]
    r_rule: RRule
    entries: t.List[IsotropyEntry] = []
    symbolic_r: t.Optional[Shift] = None
    symbolic_direction: t.Optional[Poly] = None
    exponents: t.List[int] = []
    certified: bool = True
    notes: t.List[str] = []

    @property
    def torsion(self) -> str:
        if self.torsion_kind == TorsionKind.ALL_UNITS:
            return "k*"
        if self.torsion_kind == TorsionKind.CYCLIC_ORDER:
            return f"G_{self.order}"
        return "{" + ", ".join(str(entry.a) for entry in self.entries) + "}"

    def sample(self, a: ScalarLike, c: ScalarLike = 0) -> t.Optional[Automorphism]:
        """An element σ_r ∘ τ_a of the group, None when a is not admissible.

        Args:
            a: The unit parameter.
            c: The free constant of AffineFamily and ConstantsOnly rules.
        """
        value = to_scalar(a)
        if self.r_rule == RRule.FREE:
            if UnitConstraint.of(self.exponents).admits(value):
                return Automorphism(value)
            return None
        if self.torsion_kind == TorsionKind.ALL_UNITS:
            r = self.symbolic_r if self.symbolic_r is not None else Poly()
            base = r.evaluate(value) if isinstance(r, LaurentUnit) else r
            if self.symbolic_direction is not None:
                base = base + self.symbolic_direction * to_scalar(c)
            return Automorphism(value, base)
        for entry in self.entries:
            if entry.a == value:
                return entry.automorphism(c)
        return None


def required_rhs(ctx: AlgebraContext, s: Poly, a: ScalarLike, b: ScalarLike = 0) -> Poly:
    """a^(1-N)·s(ax + b) - s(x)."""
    return compose_affine(s, a, b) * scalar_power(to_scalar(a), 1 - ctx.N) - s


def check(ctx: AlgebraContext, D: Derivation, rho: Automorphism) -> MembershipReport:
    """Decides whether the concrete automorphism ρ commutes with D."""
    if rho.is_symbolic:
        raise InvalidInputError("check needs a concrete automorphism; use check_symbolic")
    ensure_valid(ctx, rho)
    star = w_star(ctx, D.w, D.H)
    delta = apply_loc(ctx, rho, star) - star
    rhs = required_rhs(ctx, D.s, rho.a_value, rho.b)
    if not in_base_ring(delta):
        return MembershipReport(is_member=False, delta=delta, required_rhs=rhs)

    base = delta.coefficient(0)
    dS_delta = d_S(ctx, base)
    return MembershipReport(
        is_member=dS_delta == PsiFraction.from_poly(rhs, ctx.psi),
        delta=delta,
        dS_delta=dS_delta,
        required_rhs=rhs,
        constant=base.num.constant_term if base.is_polynomial else None,
    )


def check_oracle(ctx: AlgebraContext, D: Derivation, rho: Automorphism) -> bool:
    """ρ(D(x)) = D(ρ(x)) and ρ(D(t)) = D(ρ(t)), compared in normal form."""
    if rho.is_symbolic:
        raise InvalidInputError("check_oracle needs a concrete automorphism")
    ensure_valid(ctx, rho)
    x = OreElement.x()
    image_x = apply(ctx, rho, x)
    if apply(ctx, rho, evaluate(ctx, D, x)) != evaluate(ctx, D, image_x):
        return False
    return apply(ctx, rho, evaluate(ctx, D, OreElement.t())) == evaluate(
        ctx, D, image_of_t(ctx, rho)
    )


def delta_torsion(ctx: AlgebraContext, s: Poly) -> UnitConstraint:
    """The conditions on a for s(ax) = a^(N-1)·s(x)."""
    if s.degree >= ctx.N:
        raise InvalidInputError(f"deg s must be below deg h = {ctx.N}, got s = {s}")
    return _homogeneity(s, ctx.N - 1)


def check_symbolic(
    ctx: AlgebraContext, D: Derivation, r: t.Optional[Shift] = None
) -> t.Optional[UnitConstraint]:
    """The conditions on the symbolic unit a for σ_{r(a)} ∘ τ_a to commute with D.

    Returns None when the identities left over cannot be written as conditions a^e = 1, and an
    unsatisfiable constraint when one of them holds for no unit.
    """
    ctx.ensure_normalized()
    if not D.H.is_zero:
        raise InvalidInputError("check_symbolic supports derivations without a special part")
    constraint = aut_exponents(ctx)
    for residual in _symbolic_residuals(ctx, D, r if r is not None else Poly()):
        condition = residual.vanishing_constraint()
        if condition is None:
            return None
        constraint = constraint | condition
    return constraint


def lnd_isotropy(ctx: AlgebraContext, p: Poly) -> IsotropyDescription:
    """Aut of the locally nilpotent derivation D_p: r is free, a satisfies p(ax) = a^(N-1)·p(x)."""
    constraint = aut_exponents(ctx) | _homogeneity(p, ctx.N - 1)
    return _free_description(constraint)


def describe(
    ctx: AlgebraContext, D: Derivation, bounds: t.Optional[IsotropyConfig] = None
) -> IsotropyDescription:
    """Describes Aut_D(A_h) for a normalized h.

    Raises:
        BoundsExceededError: The linear solve for r or the enumeration of roots of unity needs
            more than `bounds` allows.
    """
    ctx.ensure_normalized()
    bounds = bounds or IsotropyConfig()
    star = w_star(ctx, D.w, D.H)
    ell = max(int(star.deg_t), 0) if not star.is_zero else 0

    constraint = aut_exponents(ctx) | _leading_exponents(ctx, star, ell)
    if ell == 0 or ctx.is_square_free:
        # d_S(δ) has degree >= N unless it vanishes, so both sides must be zero
        constraint = constraint | delta_torsion(ctx, D.s)
    logger.debug("Torsion candidate for %s: %s", D, constraint)

    if ell == 0:
        return _free_description(constraint)
    if constraint.admits_all_units:
        return _describe_all_units(ctx, D, star, ell, bounds)
    return _describe_finite(ctx, D, constraint, bounds)


def _homogeneity(p: Poly, weight: int) -> UnitConstraint:
    return UnitConstraint.of(abs(i - weight) for i in p.support())


def _leading_exponents(ctx: AlgebraContext, star: LocElement, ell: int) -> UnitConstraint:
    """Conditions for a^(ℓ(N-1))·τ_a(c_ℓ) = c_ℓ where c_ℓ = f/ψ^k is the top coefficient of w*."""
    if star.is_zero:
        return UnitConstraint()
    top = star.coefficient(ell)
    shift = ell * (ctx.N - 1) - top.k * int(ctx.psi.degree)
    return UnitConstraint.of(abs(shift + i) for i in top.num.support())


def _free_description(constraint: UnitConstraint) -> IsotropyDescription:
    order = constraint.order
    return IsotropyDescription(
        torsion_kind=TorsionKind.ALL_UNITS if order == 0 else TorsionKind.CYCLIC_ORDER,
        order=order,
        r_rule=RRule.FREE,
        exponents=sorted(e for e in constraint.exponents if e),
        notes=["D(x) = 0, so r is unconstrained"],
    )


def _describe_finite(
    ctx: AlgebraContext,
    D: Derivation,
    constraint: UnitConstraint,
    bounds: IsotropyConfig,
    notes: t.Optional[t.List[str]] = None,
) -> IsotropyDescription:
    n = constraint.order
    notes = list(notes or [])
    if n <= bounds.order_bound:
        candidates = roots_of_unity(n)
        certified = True
    else:
        candidates = [
            a for d in divisors(n) if d <= bounds.order_bound for a in _primitive_roots(d)
        ]
        certified = False
        notes.append(f"only roots of unity of order at most {bounds.order_bound} were tested")
    logger.info("Testing %d candidate values of a", len(candidates))

    entries = [
        entry
        for entry in _map_candidates(lambda a: _resolve(ctx, D, a, bounds), candidates, bounds)
        if entry is not None
    ]
    return IsotropyDescription(
        torsion_kind=TorsionKind.CYCLIC_ORDER if certified else TorsionKind.ENUMERATED,
        order=len(entries) if certified else None,
        r_rule=_r_rule([entry.r for entry in entries], [entry.direction for entry in entries]),
        entries=entries,
        exponents=sorted(e for e in constraint.exponents if e),
        certified=certified,
        notes=notes,
    )


def _map_candidates(
    fn: t.Callable[[Scalar], t.Optional[IsotropyEntry]],
    candidates: t.Sequence[Scalar],
    bounds: IsotropyConfig,
) -> t.List[t.Optional[IsotropyEntry]]:
    try:
        return concurrent_apply_to_values(candidates, fn, bounds.tasks_num)
    except NodeExecutionFailedError as ex:
        cause = ex.__cause__
        if isinstance(cause, OreError):
            raise cause
        raise


def _primitive_roots(m: int) -> t.List[Scalar]:
    return [zeta(m, k) for k in range(m) if gcd(k, m) == 1]


def _tau(ctx: AlgebraContext, a: Scalar, u: PsiFraction) -> PsiFraction:
    return apply_to_fraction(ctx, Automorphism.tau(a), u)


def _resolve(
    ctx: AlgebraContext, D: Derivation, a: Scalar, bounds: IsotropyConfig
) -> t.Optional[IsotropyEntry]:
    """Solves for r given a and verifies σ_r ∘ τ_a with `check`; None when a is not admissible."""
    if not validate(ctx, a):
        return None
    star = w_star(ctx, D.w, D.H)
    ell = max(int(star.deg_t), 0) if not star.is_zero else 0
    top = star.coefficient(ell)
    if _tau(ctx, a, top) * scalar_power(a, ell * (ctx.N - 1)) != top:
        return None

    direction: t.Optional[Poly] = None
    r: t.Optional[Poly]
    if ell == 0:
        r = Poly()
    elif ell == 1:
        c0 = star.coefficient(0)
        target = PsiFraction.from_poly(required_rhs(ctx, D.s, a), ctx.psi) - d_S(
            ctx, _tau(ctx, a, c0) - c0
        )
        images = _shift_images(ctx, top, _shift_degree_bound(ctx, top, target.degree, bounds))
        matrix, (rhs,) = _shift_rows(ctx, images, [target])
        solution, kernel = solve_linear_system(matrix, rhs, len(images))
        if solution is None:
            return None
        r = Poly(solution)
        direction = Poly(kernel[0]) if kernel else None
    else:
        # the t^(ℓ-1) coefficients: ℓ·c_ℓ·r = c_{ℓ-1} - a^((ℓ-1)(N-1))·τ_a(c_{ℓ-1})
        below = star.coefficient(ell - 1)
        difference = below - _tau(ctx, a, below) * scalar_power(a, (ell - 1) * (ctx.N - 1))
        r = exact_quotient(difference, top * ell)
        if r is None:
            return None

    if not check(ctx, D, Automorphism(a, r)).is_member:
        return None
    if direction is not None and not check(ctx, D, Automorphism(a, r + direction)).is_member:
        direction = None
    return IsotropyEntry(a=a, r=r, direction=direction)


def _shift_degree_bound(
    ctx: AlgebraContext, c1: PsiFraction, target_degree: t.Union[int, float], bounds: IsotropyConfig
) -> int:
    """A bound on deg r for d_S(c1·r) = target.

    d_S raises the degree of a ψ-fraction by N - 1 unless that degree is 0.
    """
    lead = int(c1.degree)
    bound = max(0, -lead)
    if target_degree != DEGREE_OF_ZERO:
        bound = max(bound, int(target_degree) - ctx.N + 1 - lead)
    if bound > bounds.rdeg_bound:
        raise BoundsExceededError(
            f"Solving for r needs degree {bound}, above the bound of {bounds.rdeg_bound}"
        )
    return bound


def _shift_images(ctx: AlgebraContext, c1: PsiFraction, degree: int) -> t.List[PsiFraction]:
    return [d_S(ctx, c1 * Poly.monomial(j)) for j in range(degree + 1)]


def _shift_rows(
    ctx: AlgebraContext, images: t.Sequence[PsiFraction], targets: t.Sequence[PsiFraction]
) -> t.Tuple[t.List[t.List[Scalar]], t.List[t.List[Scalar]]]:
    """The coefficient matrix of r ↦ d_S(c1·r) and the right hand sides, over ψ^K."""
    power = max((f.k for f in [*images, *targets]), default=0)
    numerators = [f.num * ctx.psi ** (power - f.k) for f in images]
    rhs_numerators = [f.num * ctx.psi ** (power - f.k) for f in targets]
    size = max((len(p.coeffs) for p in [*numerators, *rhs_numerators]), default=0)
    matrix = [[p[m] for p in numerators] for m in range(size)]
    rhs = [[p[m] for m in range(size)] for p in rhs_numerators]
    return matrix, rhs


def _describe_all_units(
    ctx: AlgebraContext, D: Derivation, star: LocElement, ell: int, bounds: IsotropyConfig
) -> IsotropyDescription:
    """The necessary conditions admit every unit; decide symbolically in a."""
    direction: t.Optional[Poly] = None
    if ell == 1:
        r_sym, direction, residuals = _symbolic_linear_shift(ctx, D, star, bounds)
    elif ctx.N == 1:
        # h = x and c_ℓ = γ is constant: ℓ·γ·r = w_{ℓ-1}(x) - w_{ℓ-1}(ax)
        gamma = star.coefficient(ell).as_poly().constant_term
        below = LaurentUnit.from_poly(star.coefficient(ell - 1).as_poly())
        r_sym = (below - below.scale_variable(1)) * (1 / (gamma * ell))
        residuals = _symbolic_residuals(ctx, D, r_sym)
    else:
        raise BoundsExceededError(f"No symbolic resolution of r for {D}")

    constraint: t.Optional[UnitConstraint] = UnitConstraint()
    for residual in residuals:
        condition = residual.vanishing_constraint()
        if condition is None:
            constraint = None
            break
        constraint = constraint | condition  # type: ignore

    if constraint is None:
        return _describe_bounded(ctx, D, residuals, bounds)
    if constraint.unsatisfiable:
        return IsotropyDescription(
            torsion_kind=TorsionKind.ENUMERATED,
            order=None,
            r_rule=RRule.ZERO,
            notes=["no unit a satisfies the residual identities"],
        )
    if not constraint.admits_all_units:
        logger.debug("Symbolic residuals restrict a to %s", constraint)
        return _describe_finite(ctx, D, constraint, bounds)

    r_value: Shift = r_sym
    if isinstance(r_sym, LaurentUnit) and set(r_sym.terms) <= {0}:
        r_value = r_sym.terms.get(0, Poly())
    return IsotropyDescription(
        torsion_kind=TorsionKind.ALL_UNITS,
        order=0,
        r_rule=_r_rule([r_value], [direction]),
        symbolic_r=r_value,
        symbolic_direction=direction,
        notes=["every unit a is admissible"],
    )


def _symbolic_linear_shift(
    ctx: AlgebraContext, D: Derivation, star: LocElement, bounds: IsotropyConfig
) -> t.Tuple[LaurentUnit, t.Optional[Poly], t.List[LaurentUnit]]:
    """Solves d_S(c1·r) = a^(1-N)s(ax) - s - d_S(c0(ax) - c0) one power of a at a time.

    The matrix does not depend on a, so the system is consistent for a given a exactly when
    every left null vector annihilates the right hand side; those pairings are the residuals.
    """
    c1 = star.coefficient(1)
    c0 = LaurentUnit.from_poly(star.coefficient(0).as_poly())
    s = LaurentUnit.from_poly(D.s)
    target = s.scale_variable(1).shift(1 - ctx.N) - s - (c0.scale_variable(1) - c0).derivative() * ctx.h

    images = _shift_images(ctx, c1, _shift_degree_bound(ctx, c1, target.x_degree, bounds))
    exponents = sorted(target.terms)
    matrix, rhs = _shift_rows(
        ctx, images, [PsiFraction.from_poly(target.terms[e], ctx.psi) for e in exponents]
    )
    columns = len(images)

    r_terms: t.Dict[int, Poly] = {}
    kernel: t.List[t.List[Scalar]] = []
    residuals: t.List[LaurentUnit] = []
    consistent = True
    for exponent, vector in zip(exponents, rhs):
        solution, kernel = solve_linear_system(matrix, vector, columns)
        if solution is None:
            consistent = False
            continue
        r_terms[exponent] = Poly(solution)
    if not exponents:
        _, kernel = solve_linear_system(matrix, [0] * len(matrix), columns)

    if not consistent:
        transposed = [[row[j] for row in matrix] for j in range(columns)]
        _, left_kernel = solve_linear_system(transposed, [0] * columns, len(matrix))
        for null_vector in left_kernel:
            residuals.append(
                LaurentUnit(
                    {
                        e: sum((u * v for u, v in zip(null_vector, vector)), Poly())
                        for e, vector in zip(exponents, rhs)
                    }
                )
            )
    direction = Poly(kernel[0]) if kernel else None
    return LaurentUnit(r_terms), direction, residuals


def _symbolic_residuals(ctx: AlgebraContext, D: Derivation, r: Shift) -> t.List[LaurentUnit]:
    """The Laurent identities in a that σ_{r(a)} ∘ τ_a needs to commute with D (H = 0)."""
    rho = Automorphism(UnitParam.symbolic(), r)
    delta = apply(ctx, rho, D.w) - D.w
    residuals = [
        _as_unit(coefficient) for degree, coefficient in delta.terms.items() if degree > 0
    ]
    s = LaurentUnit.from_poly(D.s)
    rhs = s.scale_variable(1).shift(1 - ctx.N) - s
    residuals.append(_as_unit(delta.coefficient(0)).derivative() * ctx.h - rhs)
    return [residual for residual in residuals if not residual.is_zero]


def _as_unit(value: Shift) -> LaurentUnit:
    return value if isinstance(value, LaurentUnit) else LaurentUnit.from_poly(value)


def _describe_bounded(
    ctx: AlgebraContext, D: Derivation, residuals: t.Sequence[LaurentUnit], bounds: IsotropyConfig
) -> IsotropyDescription:
    """Some residual is not a binomial, so a is a root of unity annihilating it.

    A root of unity of order m is a root of a nonzero Laurent polynomial of a-span d only if
    φ(m) <= d, which bounds the orders to enumerate.
    """
    span = min(
        residual.a_span(degree)
        for residual in residuals
        for degree in range(int(residual.x_degree) + 1)
        if residual.x_coefficient(degree)
    )
    highest = _max_order(span)
    if highest > bounds.order_bound:
        raise BoundsExceededError(
            f"Roots of unity up to order {highest} would have to be tested, "
            f"above the bound of {bounds.order_bound}"
        )
    candidates = [a for m in range(1, highest + 1) for a in _primitive_roots(m)]
    entries = [
        entry
        for entry in _map_candidates(lambda a: _resolve(ctx, D, a, bounds), candidates, bounds)
        if entry is not None
    ]
    return IsotropyDescription(
        torsion_kind=TorsionKind.CYCLIC_ORDER,
        order=len(entries),
        r_rule=_r_rule([entry.r for entry in entries], [entry.direction for entry in entries]),
        entries=entries,
        certified=False,
        notes=[f"symbolic verification inconclusive; tested roots of unity up to order {highest}"],
    )


def _max_order(span: int) -> int:
    """The largest m with φ(m) <= span (φ(m) >= sqrt(m/2) bounds the search)."""
    return max([1] + [m for m in range(1, 2 * span * span + 3) if euler_phi(m) <= span])


def _r_rule(bases: t.Sequence[Shift], directions: t.Sequence[t.Optional[Poly]]) -> RRule:
    all_zero = all(not base for base in bases)
    if all(direction is None for direction in directions):
        return RRule.ZERO if all_zero else RRule.DETERMINED
    if all_zero and all(direction is not None and direction.is_constant for direction in directions):
        return RRule.CONSTANTS_ONLY
    return RRule.AFFINE_FAMILY
