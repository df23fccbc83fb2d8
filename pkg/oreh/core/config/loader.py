from __future__ import annotations

import logging
import os
import typing as t
from pathlib import Path

from pydantic import ValidationError

from oreh.core import constants as c
from oreh.core.config.root import Config
from oreh.utils.errors import ConfigError, raise_config_error
from oreh.utils.yaml import load as yaml_load

logger = logging.getLogger(__name__)


def default_config_paths(config_path: t.Optional[Path] = None) -> t.List[Path]:
    """The user config, the project config in the working directory and an explicit path."""
    paths = [c.USER_CONFIG_PATH, Path.cwd() / c.CONFIG_FILE_NAME]
    if config_path is not None:
        paths.append(config_path)
    return paths


def load_config_from_paths(*paths: Path, load_from_env: bool = True) -> Config:
    """Layers the YAML files that exist, in order, over the defaults and then the environment."""
    config = Config()
    for path in filter(Path.exists, paths):
        if not path.is_file():
            raise_config_error("Path must be a file", path)
        extension = path.suffix.lstrip(".").lower()
        if extension not in c.CONFIG_EXTENSIONS:
            raise ConfigError(
                f"Unsupported config file extension '{extension}' in config file '{path}'."
            )
        logger.debug("Loading config from '%s'", path)
        config = config.update_with(load_config_from_yaml(path))

    return config.update_with(load_config_from_env()) if load_from_env else config


def load_config_from_yaml(path: Path) -> Config:
    return _parse(yaml_load(path), str(path))


def load_config_from_env() -> Config:
    """Reads variables such as OREH__ISOTROPY__ORDER_BOUND=12, case insensitively."""
    sections: t.Dict[str, t.Any] = {}
    prefix = f"{c.OREH}__"
    for name, value in os.environ.items():
        if not name.lower().startswith(prefix):
            continue
        *parents, leaf = name.lower()[len(prefix) :].split("__")
        if not leaf:
            raise ConfigError(f"Invalid oreh configuration variable '{name.lower()}'.")
        section = sections
        for parent in parents:
            section = section.setdefault(parent, {})
        section[leaf] = value

    return _parse(sections, "environment")


def _parse(config_dict: t.Dict[str, t.Any], source: str) -> Config:
    try:
        return Config.parse_obj(config_dict)
    except ValidationError as ex:
        raise ConfigError(f"Invalid configuration in {source}: {ex}") from ex
