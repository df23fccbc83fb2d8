from __future__ import annotations

import typing as t
from pathlib import Path


class OreError(Exception):
    pass


class ConfigError(OreError):
    pass


class InvalidInputError(OreError):
    """An operation was called with arguments outside of its domain."""


class InvalidAutomorphismError(InvalidInputError):
    """The pair (a, r) does not define an automorphism of A_h."""


class NotStableError(OreError):
    """The commutator with a localized element does not restrict to A_h."""


class NotDecomposableError(OreError):
    pass


class NotADerivationError(OreError):
    pass


class BoundsExceededError(OreError):
    pass


class ExpressionError(OreError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class ExpressionSyntaxError(ExpressionError):
    pass


class UnknownSymbolError(ExpressionError):
    def __init__(self, name: str, offset: int):
        self.name = name
        super().__init__(f"Unknown symbol '{name}'", offset)


def raise_config_error(
    msg: str,
    location: t.Optional[str | Path] = None,
    error_type: t.Type[ConfigError] = ConfigError,
) -> None:
    if location:
        raise error_type(f"{msg} at '{location}'")
    raise error_type(msg)
