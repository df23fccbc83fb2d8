import typing as t
from functools import wraps

import click

from oreh.core.console import Console, get_console
from oreh.utils.concurrency import NodeExecutionFailedError
from oreh.utils.errors import ExpressionError, OreError

DECORATOR_RETURN_TYPE = t.TypeVar("DECORATOR_RETURN_TYPE")

DOMAIN_EXIT_CODE = 1
USAGE_EXIT_CODE = 2


class CommandError(click.ClickException):
    """A failure reported through the active console instead of click's default formatting."""

    def __init__(self, message: str, exit_code: int = DOMAIN_EXIT_CODE):
        super().__init__(message)
        self.exit_code = exit_code
        # click shows the error after the command context has been popped
        self.console = _active_console()

    def show(self, file: t.Optional[t.IO] = None) -> None:
        self.console.show_error(self.format_message())


def _active_console() -> Console:
    ctx = click.get_current_context(silent=True)
    while ctx is not None:
        console = getattr(ctx.obj, "console", None)
        if console is not None:
            return console
        ctx = ctx.parent
    return get_console()


def error_handler(
    func: t.Callable[..., DECORATOR_RETURN_TYPE]
) -> t.Callable[..., DECORATOR_RETURN_TYPE]:
    @wraps(func)
    def wrapper(*args: t.Any, **kwargs: t.Any) -> DECORATOR_RETURN_TYPE:
        try:
            return func(*args, **kwargs)
        except NodeExecutionFailedError as ex:
            cause = ex.__cause__
            raise CommandError(f"Failed processing {ex.node}. {cause}")
        except ExpressionError as ex:
            raise CommandError(str(ex), USAGE_EXIT_CODE)
        except OreError as ex:
            raise CommandError(str(ex))

    return wrapper
