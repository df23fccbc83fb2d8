from __future__ import annotations

import typing as t
from fractions import Fraction

from pydantic import BaseModel

DEFAULT_ARGS = {"exclude_none": True, "by_alias": True}


class StringSerializable:
    """Values whose JSON form is their string rendering."""

    __slots__ = ()


def _encode_value(value: t.Any) -> str:
    return str(value)


class PydanticModel(BaseModel):
    class Config:
        arbitrary_types_allowed = True
        extra = "forbid"
        json_encoders = {Fraction: _encode_value, StringSerializable: _encode_value}
        underscore_attrs_are_private = True
        smart_union = True

    def dict(
        self,
        **kwargs: t.Any,
    ) -> t.Dict[str, t.Any]:
        return super().dict(**{**DEFAULT_ARGS, **kwargs})  # type: ignore

    def json(
        self,
        **kwargs: t.Any,
    ) -> str:
        return super().json(**{**DEFAULT_ARGS, **kwargs})  # type: ignore
