"""
# JSON output

Every command run with `--json` prints one `JsonDocument`. The `result` payload of each command
has its own model, listed in `COMMAND_RESULTS`; `output_model` combines the two into the
published schema of that command, which `oh schema COMMAND` prints.
"""
from __future__ import annotations

import json
import typing as t
from functools import lru_cache

from pydantic import create_model

from oreh.core.isotropy import RRule, TorsionKind
from oreh.utils.errors import InvalidInputError
from oreh.utils.pydantic import PydanticModel

Terms = t.List[t.Tuple[int, str]]


class JsonDocument(PydanticModel):
    ok: bool
    result: t.Dict[str, t.Any] = {}
    diagnostics: t.List[str] = []

    def render(self) -> str:
        return self.json(exclude_none=False, ensure_ascii=False)


class CommandResult(PydanticModel):
    """Base class of the `result` payloads."""

    def payload(self) -> t.Dict[str, t.Any]:
        """The JSON-native form, with unset optional fields kept as null."""
        return json.loads(self.json(exclude_none=False))


class ElementResult(CommandResult):
    element: Terms


class AutomorphismResult(CommandResult):
    automorphism: str
    a: str
    r: str
    b: str


class DerivationTerms(PydanticModel):
    w: Terms
    H: Terms
    s: str


class DerivationResult(CommandResult):
    derivation: DerivationTerms


class LndExpResult(AutomorphismResult):
    derivation: DerivationTerms


class NormalizeResult(CommandResult):
    h_star: str
    alpha: str
    beta: str
    gamma: str


class AutResult(CommandResult):
    torsion: str
    order: int
    generator: str
    exponents: t.List[int]


class FractionTerm(PydanticModel):
    num: str
    psi_pow: int


class CheckResult(CommandResult):
    member: bool
    delta: t.List[t.Tuple[int, FractionTerm]]
    dS_delta: t.Optional[FractionTerm] = None
    required_rhs: str
    constant: t.Optional[str] = None


class SymbolicCheckResult(CommandResult):
    """The answer for tau(sym): conditions a^e = 1, or null when none could be derived."""

    member: t.Optional[bool] = None
    constraint: t.Optional[t.List[int]] = None
    order: t.Optional[int] = None


class EntryResult(PydanticModel):
    a: str
    r: str
    direction: t.Optional[str] = None


class DescriptionResult(CommandResult):
    torsion: str
    torsion_kind: TorsionKind
    order: t.Optional[int] = None
    r_rule: RRule
    entries: t.List[EntryResult] = []
    symbolic_r: t.Optional[str] = None
    symbolic_direction: t.Optional[str] = None
    exponents: t.List[int] = []
    certified: bool
    notes: t.List[str] = []


class SuiteEntry(PydanticModel):
    name: str
    samples: int
    passed: bool
    failures: t.List[str] = []


class SelftestResult(CommandResult):
    suites: t.List[SuiteEntry]


COMMAND_RESULTS: t.Dict[str, t.Tuple[t.Type[CommandResult], ...]] = {
    "normalize": (NormalizeResult,),
    "aut": (AutResult,),
    "mul": (ElementResult,),
    "comm": (ElementResult,),
    "apply": (ElementResult,),
    "power": (AutomorphismResult,),
    "conjugate": (DerivationResult,),
    "decompose": (DerivationResult,),
    "isotropy check": (CheckResult, SymbolicCheckResult),
    "isotropy describe": (DescriptionResult,),
    "lnd exp": (LndExpResult,),
    "lnd isotropy": (DescriptionResult,),
    "selftest": (SelftestResult,),
}


@lru_cache(maxsize=None)
def output_model(command: str) -> t.Type[JsonDocument]:
    """The document printed by `command` with `--json` when it produces a result."""
    try:
        results = COMMAND_RESULTS[command]
    except KeyError:
        raise InvalidInputError(f"Unknown command '{command}'")
    name = "".join(part.title() for part in command.split()) + "Output"
    return create_model(  # type: ignore
        name, __base__=JsonDocument, result=(t.Union[results], ...)  # type: ignore
    )
