from __future__ import annotations

import typing as t
from enum import Enum, auto

from oreh.utils.errors import ConfigError
from oreh.utils.pydantic import PydanticModel

T = t.TypeVar("T", bound="BaseConfig")


class UpdateStrategy(Enum):
    """How a section read from a later source is merged into the one read before it."""

    REPLACE = auto()
    NESTED_UPDATE = auto()


def update_field(
    old: t.Optional[t.Any],
    new: t.Any,
    update_strategy: t.Optional[UpdateStrategy] = None,
) -> t.Any:
    """Merges the value `new` from a later config source into `old`.

    REPLACE is the default. NESTED_UPDATE merges two sections of the same config class field
    by field, so a file setting only `isotropy.rdeg_bound` keeps the other bounds.
    """
    strategy = update_strategy or UpdateStrategy.REPLACE
    if old is None or strategy == UpdateStrategy.REPLACE:
        return new
    if strategy != UpdateStrategy.NESTED_UPDATE:
        raise ConfigError(f"Unknown update strategy {strategy}.")

    if not isinstance(old, BaseConfig):
        raise ConfigError(f"Merging sections requires a config object, got {type(old).__name__}.")
    if type(new) is not type(old):
        raise ConfigError(
            f"Merging sections requires values of the same type, got {type(old).__name__} "
            f"and {type(new).__name__}."
        )
    return old.update_with(new)


class BaseConfig(PydanticModel):
    """A config section that can be layered: defaults, files, then environment variables."""

    _FIELD_UPDATE_STRATEGY: t.ClassVar[t.Dict[str, UpdateStrategy]] = {}

    def update_with(self: T, other: t.Union[t.Dict[str, t.Any], T]) -> T:
        """A copy of this section with the fields set explicitly on `other` merged in."""
        if isinstance(other, dict):
            other = self.__class__.parse_obj(other)

        merged = self.copy()
        for name in other.__fields_set__:
            value = update_field(
                getattr(self, name), getattr(other, name), self._FIELD_UPDATE_STRATEGY.get(name)
            )
            setattr(merged, name, value)
            merged.__fields_set__.add(name)
        return merged
