import io
import json

import pytest
from rich.console import Console as RichConsole

from oreh.core.console import CommandOutput, JsonConsole, TerminalConsole, get_console
from oreh.core.selftest import SuiteResult
from oreh.utils.rich import theme


@pytest.fixture
def streams():
    return io.StringIO(), io.StringIO()


def make(cls, streams):
    out, err = streams
    return cls(
        RichConsole(file=out, width=20, theme=theme),
        RichConsole(file=err, width=20, theme=theme),
    )


def test_terminal_console(streams):
    console = make(TerminalConsole, streams)
    # long lines and brackets are printed verbatim
    console.show_result(
        CommandOutput(
            lines=["element=x^2*t + 2*x^3 + [bold]x[/bold]", "order=2"],
            diagnostics=["note"],
        )
    )
    console.show_error("boom")
    out, err = streams
    assert out.getvalue() == "element=x^2*t + 2*x^3 + [bold]x[/bold]\norder=2\n"
    assert err.getvalue() == "note\nError: boom\n"


def test_json_console(streams):
    console = make(JsonConsole, streams)
    console.show_result(CommandOutput(ok=False, lines=["ignored"], result={"a": "ζ"}))
    console.show_error("boom")
    out, err = streams
    first, second = out.getvalue().splitlines()
    assert json.loads(first) == {"ok": False, "result": {"a": "ζ"}, "diagnostics": []}
    assert "ζ" in first
    assert json.loads(second) == {"ok": False, "result": {}, "diagnostics": ["boom"]}
    assert err.getvalue() == ""


def test_show_selftest(streams):
    console = make(TerminalConsole, streams)
    console.show_selftest(
        [
            SuiteResult(name="product", samples=3),
            SuiteResult(name="oracle", samples=4, failures=["bad sample"]),
        ]
    )
    out, err = streams
    assert out.getvalue() == (
        "product: passed [3 samples]\noracle: failed (1 failures) [4 samples]\n"
    )
    assert err.getvalue() == "oracle: bad sample\n"


def test_get_console():
    assert type(get_console()) is TerminalConsole
    assert type(get_console(json=True)) is JsonConsole


def test_json_show_selftest(streams):
    console = make(JsonConsole, streams)
    console.show_selftest([SuiteResult(name="oracle", samples=4, failures=["bad sample"])])
    out, _ = streams
    assert json.loads(out.getvalue()) == {
        "ok": False,
        "result": {
            "suites": [
                {"name": "oracle", "samples": 4, "passed": False, "failures": ["bad sample"]}
            ]
        },
        "diagnostics": ["oracle: bad sample"],
    }
