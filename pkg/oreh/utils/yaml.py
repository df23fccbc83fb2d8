from __future__ import annotations

import typing as t
from collections import OrderedDict
from pathlib import Path

from ruamel.yaml import YAML

from oreh.utils.errors import ConfigError


def load(source: str | Path, raise_if_empty: bool = True) -> t.OrderedDict:
    """Loads a YAML mapping from either a raw string or a file."""
    path: t.Optional[Path] = None

    if isinstance(source, Path):
        path = source
        with open(source, "r", encoding="utf-8") as file:
            source = file.read()

    contents = YAML(typ="safe").load(source)
    if contents is None:
        if raise_if_empty:
            error_path = f" '{path}'" if path else ""
            raise ConfigError(f"YAML source{error_path} can't be empty.")
        return OrderedDict()

    if not isinstance(contents, dict):
        raise ConfigError(f"YAML source{' ' + repr(str(path)) if path else ''} must be a mapping.")

    return OrderedDict(contents)
