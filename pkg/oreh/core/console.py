from __future__ import annotations

import abc
import typing as t

from rich.console import Console as RichConsole

from oreh.core.schema import JsonDocument, SelftestResult, SuiteEntry
from oreh.utils import rich as orich
from oreh.utils.pydantic import PydanticModel

if t.TYPE_CHECKING:
    from oreh.core.selftest import SuiteResult


class CommandOutput(PydanticModel):
    """The outcome of a command in both renderings.

    Args:
        ok: False for negative answers and failures.
        lines: The plain text rendering.
        result: The JSON payload.
        diagnostics: Messages explaining a negative answer or a failure.
    """

    ok: bool = True
    lines: t.List[str] = []
    result: t.Dict[str, t.Any] = {}
    diagnostics: t.List[str] = []


class Console(abc.ABC):
    """Abstract base class for defining a console used by the command line."""

    @abc.abstractmethod
    def show_result(self, output: CommandOutput) -> None:
        """Display the outcome of a command."""

    @abc.abstractmethod
    def show_error(self, message: str) -> None:
        """Display a failure that produced no result."""

    @abc.abstractmethod
    def show_selftest(self, results: t.Sequence[SuiteResult]) -> None:
        """Display the outcome of the selftest suites."""


class TerminalConsole(Console):
    """A rich based implementation of the console that writes plain, unwrapped text."""

    def __init__(
        self,
        console: t.Optional[RichConsole] = None,
        error_console: t.Optional[RichConsole] = None,
    ) -> None:
        self.console: RichConsole = console or orich.console
        self.error_console: RichConsole = error_console or orich.error_console

    def _print(
        self,
        value: str,
        console: t.Optional[RichConsole] = None,
        style: t.Optional[str] = None,
    ) -> None:
        (console or self.console).print(
            value, style=style, markup=False, highlight=False, emoji=False, soft_wrap=True
        )

    def show_result(self, output: CommandOutput) -> None:
        for line in output.lines:
            self._print(line)
        for message in output.diagnostics:
            self._print(message, self.error_console)

    def show_error(self, message: str) -> None:
        self._print(f"Error: {message}", self.error_console)

    def show_selftest(self, results: t.Sequence[SuiteResult]) -> None:
        output = selftest_output(results)
        for suite, line in zip(results, output.lines):
            self._print(line, style="passed" if suite.passed else "failed")
        for message in output.diagnostics:
            self._print(message, self.error_console)


class JsonConsole(TerminalConsole):
    """Prints a single {"ok", "result", "diagnostics"} document per command."""

    def _dump(self, ok: bool, result: t.Dict[str, t.Any], diagnostics: t.List[str]) -> None:
        self._print(JsonDocument(ok=ok, result=result, diagnostics=diagnostics).render())

    def show_result(self, output: CommandOutput) -> None:
        self._dump(output.ok, output.result, output.diagnostics)

    def show_error(self, message: str) -> None:
        self._dump(False, {}, [message])

    def show_selftest(self, results: t.Sequence[SuiteResult]) -> None:
        self.show_result(selftest_output(results))


def selftest_output(results: t.Sequence[SuiteResult]) -> CommandOutput:
    lines = []
    diagnostics = []
    for suite in results:
        status = "passed" if suite.passed else f"failed ({len(suite.failures)} failures)"
        lines.append(f"{suite.name}: {status} [{suite.samples} samples]")
        diagnostics.extend(f"{suite.name}: {failure}" for failure in suite.failures)
    return CommandOutput(
        ok=all(suite.passed for suite in results),
        lines=lines,
        result=SelftestResult(
            suites=[
                SuiteEntry(
                    name=suite.name,
                    samples=suite.samples,
                    passed=suite.passed,
                    failures=suite.failures,
                )
                for suite in results
            ]
        ).payload(),
        diagnostics=diagnostics,
    )


def get_console(json: bool = False, **kwargs: t.Any) -> TerminalConsole:
    """Returns the JSON console when machine readable output was requested."""
    return JsonConsole(**kwargs) if json else TerminalConsole(**kwargs)
