from __future__ import annotations

import json
import logging
import typing as t
from pathlib import Path

import click

from oreh import enable_logging
from oreh.cli import USAGE_EXIT_CODE, CommandError, error_handler
from oreh.cli import options as opt
from oreh.core.algebra import AlgebraContext, OreElement, commutator, ore_mul
from oreh.core.automorphism import Automorphism, apply, aut_group, normalize_h, power
from oreh.core.config import Config, default_config_paths, load_config_from_paths
from oreh.core.console import CommandOutput, TerminalConsole, get_console
from oreh.core.derivation import Derivation, conjugate, decompose_images, exp_lnd, lnd
from oreh.core.expression import (
    parse_automorphism,
    parse_derivation,
    parse_element,
    parse_poly,
)
from oreh.core.isotropy import (
    IsotropyDescription,
    check,
    check_symbolic,
    describe,
    lnd_isotropy,
)
from oreh.core.poly import Poly
from oreh.core.schema import (
    COMMAND_RESULTS,
    AutomorphismResult,
    AutResult,
    CheckResult,
    DerivationResult,
    DescriptionResult,
    ElementResult,
    LndExpResult,
    NormalizeResult,
    SymbolicCheckResult,
    output_model,
)
from oreh.core.selftest import run_selftest
from oreh.utils.errors import OreError

T = t.TypeVar("T")


class CliState:
    """Shared state of a command line invocation: console, config and the algebra A_h."""

    def __init__(self, console: TerminalConsole, config: Config, h: t.Optional[str]):
        self.console = console
        self.config = config
        self._h_source = h
        self._algebra: t.Optional[AlgebraContext] = None

    @property
    def algebra(self) -> AlgebraContext:
        if self._algebra is None:
            if self._h_source is None:
                raise CommandError("Missing option '--h'", USAGE_EXIT_CODE)
            h = self.read("--h", self._h_source, parse_poly)
            try:
                self._algebra = AlgebraContext(h)
            except OreError as ex:
                raise CommandError(f"Invalid value for '--h': {ex}", USAGE_EXIT_CODE)
        return self._algebra

    def read(self, name: str, source: str, reader: t.Callable[[str], T]) -> T:
        """Evaluates an argument; any failure is a usage error naming the argument."""
        try:
            return reader(source)
        except OreError as ex:
            raise CommandError(f"Invalid value for '{name}': {ex}", USAGE_EXIT_CODE)

    def element(self, name: str, source: str) -> OreElement:
        return self.read(name, source, lambda text: parse_element(self.algebra, text))

    def automorphism(self, name: str, source: str) -> Automorphism:
        return self.read(name, source, lambda text: parse_automorphism(self.algebra, text))

    def derivation(self, name: str, source: str) -> Derivation:
        return self.read(name, source, lambda text: parse_derivation(self.algebra, text))

    def poly(self, name: str, source: str) -> Poly:
        return self.read(name, source, parse_poly)

    def show(self, output: CommandOutput) -> None:
        self.console.show_result(output)
        if not output.ok:
            raise click.exceptions.Exit(1)


def _element_output(u: OreElement) -> CommandOutput:
    return CommandOutput(lines=[str(u)], result=ElementResult(element=u.to_json()).payload())


def _automorphism_fields(rho: Automorphism) -> t.Dict[str, str]:
    return {"automorphism": str(rho), "a": str(rho.a), "r": str(rho.r), "b": str(rho.b)}


def _automorphism_output(rho: Automorphism) -> CommandOutput:
    return CommandOutput(
        lines=[str(rho)], result=AutomorphismResult(**_automorphism_fields(rho)).payload()
    )


def _derivation_output(D: Derivation) -> CommandOutput:
    return CommandOutput(
        lines=[str(D)], result=DerivationResult.parse_obj({"derivation": D.to_json()}).payload()
    )


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _description_output(description: IsotropyDescription) -> CommandOutput:
    lines = [
        f"torsion={description.torsion}",
        f"kind={description.torsion_kind.value}",
    ]
    if description.order is not None:
        lines.append(f"order={description.order}")
    lines.append(f"r_rule={description.r_rule.value}")
    if description.symbolic_r is not None:
        lines.append(f"r={description.symbolic_r}")
    if description.symbolic_direction is not None:
        lines.append(f"direction={description.symbolic_direction}")
    for entry in description.entries:
        line = f"entry a={entry.a} r={entry.r}"
        if entry.direction is not None:
            line += f" direction={entry.direction}"
        lines.append(line)
    lines.append(f"exponents={description.exponents}")
    lines.append(f"certified={_bool(description.certified)}")
    lines.extend(f"note={note}" for note in description.notes)
    return CommandOutput(
        lines=lines,
        result=DescriptionResult.parse_obj(
            {"torsion": description.torsion, **json.loads(description.json())}
        ).payload(),
    )


@click.group(no_args_is_help=True)
@opt.h
@opt.json
@opt.config
@opt.verbose
@click.pass_context
def cli(
    ctx: click.Context,
    h: t.Optional[str] = None,
    json_output: bool = False,
    config: t.Optional[str] = None,
    verbose: bool = False,
) -> None:
    """Exact computations in A_h = k[x][t; h d/dx]."""
    console = get_console(json=json_output)
    if verbose:
        enable_logging(logging.DEBUG)
    if ctx.invoked_subcommand == "version":
        return

    try:
        settings = load_config_from_paths(*default_config_paths(Path(config) if config else None))
    except OreError as ex:
        console.show_error(str(ex))
        raise click.exceptions.Exit(USAGE_EXIT_CODE)

    ctx.obj = CliState(console, settings, h)


@cli.command("version")
def version() -> None:
    """Print the version."""
    from oreh import __version__

    click.echo(__version__)


@cli.command("normalize")
@click.pass_obj
@error_handler
def normalize(state: CliState) -> None:
    """Transport h to a monic polynomial without an x^(N-1) term."""
    h_star, witness = normalize_h(state.algebra.h)
    state.show(
        CommandOutput(
            lines=[
                f"h*={h_star}",
                f"alpha={witness.alpha}",
                f"beta={witness.beta}",
                f"gamma={witness.gamma}",
            ],
            result=NormalizeResult(
                h_star=str(h_star),
                alpha=str(witness.alpha),
                beta=str(witness.beta),
                gamma=str(witness.gamma),
            ).payload(),
        )
    )


@cli.command("aut")
@click.pass_obj
@error_handler
def aut(state: CliState) -> None:
    """Show the torsion part G_n of Aut(A_h) = k[x] x G_n."""
    info = aut_group(state.algebra)
    state.show(
        CommandOutput(
            lines=[
                f"torsion={info.torsion}",
                f"order={info.order}",
                f"generator={info.generator}",
                f"exponents={info.exponents}",
            ],
            result=AutResult(torsion=info.torsion, **info.dict()).payload(),
        )
    )


@cli.command("mul")
@click.argument("left")
@click.argument("right")
@click.pass_obj
@error_handler
def mul(state: CliState, left: str, right: str) -> None:
    """Multiply two elements and print the normal form."""
    u, v = state.element("LEFT", left), state.element("RIGHT", right)
    state.show(_element_output(ore_mul(state.algebra, u, v)))


@cli.command("comm")
@click.argument("left")
@click.argument("right")
@click.pass_obj
@error_handler
def comm(state: CliState, left: str, right: str) -> None:
    """Print the commutator [LEFT, RIGHT]."""
    u, v = state.element("LEFT", left), state.element("RIGHT", right)
    state.show(_element_output(commutator(state.algebra, u, v)))


@cli.command("apply")
@opt.rho
@click.argument("element")
@click.pass_obj
@error_handler
def apply_command(state: CliState, rho: str, element: str) -> None:
    """Apply an automorphism to an element."""
    automorphism = state.automorphism("--rho", rho)
    u = state.element("ELEMENT", element)
    state.show(_element_output(apply(state.algebra, automorphism, u)))


@cli.command("power")
@opt.rho
@click.argument("n", type=int)
@click.pass_obj
@error_handler
def power_command(state: CliState, rho: str, n: int) -> None:
    """Print the n-th power of an automorphism."""
    automorphism = state.automorphism("--rho", rho)
    state.show(_automorphism_output(power(state.algebra, automorphism, n)))


@cli.command("conjugate")
@opt.rho
@opt.derivation
@click.pass_obj
@error_handler
def conjugate_command(state: CliState, rho: str, derivation: str) -> None:
    """Print ρ ∘ D ∘ ρ^-1 as deriv(w=..., H=..., s=...)."""
    automorphism = state.automorphism("--rho", rho)
    D = state.derivation("--D", derivation)
    state.show(_derivation_output(conjugate(state.algebra, automorphism, D)))


@cli.command("decompose")
@click.option("--Dx", "dx", required=True, help="The image D(x).")
@click.option("--Dt", "dt", required=True, help="The image D(t).")
@click.pass_obj
@error_handler
def decompose(state: CliState, dx: str, dt: str) -> None:
    """Recover deriv(w=..., H=..., s=...) from the images of x and t."""
    Dx, Dt = state.element("--Dx", dx), state.element("--Dt", dt)
    state.show(_derivation_output(decompose_images(state.algebra, Dx, Dt)))


@cli.group("isotropy")
def isotropy() -> None:
    """Isotropy groups Aut_D(A_h)."""


@isotropy.command("check")
@opt.derivation
@opt.rho
@click.pass_obj
@error_handler
def isotropy_check(state: CliState, derivation: str, rho: str) -> None:
    """Decide whether an automorphism commutes with a derivation.

    With tau(sym) the answer is the set of conditions on the unit a.
    """
    D = state.derivation("--D", derivation)
    automorphism = state.automorphism("--rho", rho)
    if automorphism.is_symbolic:
        constraint = check_symbolic(state.algebra, D, automorphism.r)
        if constraint is None:
            state.show(
                CommandOutput(
                    lines=["member=unknown"],
                    result=SymbolicCheckResult().payload(),
                    diagnostics=["The residual identities are not conditions of the form a^e = 1"],
                )
            )
            return
        if constraint.unsatisfiable:
            state.show(
                CommandOutput(
                    ok=False,
                    lines=["member=false"],
                    result=SymbolicCheckResult(member=False).payload(),
                    diagnostics=[f"{automorphism} commutes with {D} for no unit a"],
                )
            )
            return
        state.show(
            CommandOutput(
                lines=[
                    f"member=when {constraint}",
                    f"order={constraint.order}",
                ],
                result=SymbolicCheckResult(
                    constraint=sorted(e for e in constraint.exponents if e),
                    order=constraint.order,
                ).payload(),
            )
        )
        return

    report = check(state.algebra, D, automorphism)
    lines = [
        f"member={_bool(report.is_member)}",
        f"delta={report.delta}",
        f"dS_delta={report.dS_delta if report.dS_delta is not None else 'undefined'}",
        f"required_rhs={report.required_rhs}",
    ]
    if report.constant is not None:
        lines.append(f"constant={report.constant}")
    state.show(
        CommandOutput(
            ok=report.is_member,
            lines=lines,
            result=CheckResult.parse_obj(
                {
                    "member": report.is_member,
                    "delta": report.delta.to_json(),
                    "dS_delta": report.dS_delta.to_json() if report.dS_delta is not None else None,
                    "required_rhs": str(report.required_rhs),
                    "constant": str(report.constant) if report.constant is not None else None,
                }
            ).payload(),
            diagnostics=[] if report.is_member else [f"{automorphism} does not commute with {D}"],
        )
    )


@isotropy.command("describe")
@opt.derivation
@opt.order_bound
@opt.rdeg_bound
@opt.tasks
@click.pass_obj
@error_handler
def isotropy_describe(
    state: CliState,
    derivation: str,
    order_bound: t.Optional[int] = None,
    rdeg_bound: t.Optional[int] = None,
    tasks: t.Optional[int] = None,
) -> None:
    """Describe Aut_D(A_h) by its torsion part and the rule for the shift r."""
    D = state.derivation("--D", derivation)
    overrides = {
        key: value
        for key, value in (
            ("order_bound", order_bound),
            ("rdeg_bound", rdeg_bound),
            ("tasks_num", tasks),
        )
        if value is not None
    }
    bounds = state.config.isotropy.copy(update=overrides)
    state.show(_description_output(describe(state.algebra, D, bounds)))


@cli.group("lnd")
def lnd_group() -> None:
    """Locally nilpotent derivations D_g: x ↦ 0, t ↦ g."""


@lnd_group.command("exp")
@click.argument("g")
@click.pass_obj
@error_handler
def lnd_exp(state: CliState, g: str) -> None:
    """Print exp(D_g) = sigma(g)."""
    p = state.poly("G", g)
    rho = exp_lnd(state.algebra, p)
    result = LndExpResult.parse_obj(
        {**_automorphism_fields(rho), "derivation": lnd(state.algebra, p).to_json()}
    )
    state.show(CommandOutput(lines=[str(rho)], result=result.payload()))


@lnd_group.command("isotropy")
@click.argument("g")
@click.pass_obj
@error_handler
def lnd_isotropy_command(state: CliState, g: str) -> None:
    """Describe the isotropy group of D_g."""
    p = state.poly("G", g)
    state.show(_description_output(lnd_isotropy(state.algebra, p)))


@cli.command("schema")
@click.argument("command", type=click.Choice(sorted(COMMAND_RESULTS)))
def schema(command: str) -> None:
    """Print the JSON schema of the --json output of COMMAND."""
    click.echo(output_model(command).schema_json(indent=2))


@cli.command("selftest")
@opt.seed
@click.pass_obj
@error_handler
def selftest(state: CliState, seed: t.Optional[int] = None) -> None:
    """Run the randomized and fixture suites; exit 0 when all of them pass."""
    config = state.config.selftest
    if seed is not None:
        config = config.copy(update={"seed": seed})
    results = run_selftest(config)
    state.console.show_selftest(results)
    if not all(result.passed for result in results):
        raise click.exceptions.Exit(1)


if __name__ == "__main__":
    cli()
