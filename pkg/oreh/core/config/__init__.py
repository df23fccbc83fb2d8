from oreh.core.config.base import BaseConfig, UpdateStrategy
from oreh.core.config.isotropy import IsotropyConfig
from oreh.core.config.loader import (
    default_config_paths,
    load_config_from_env,
    load_config_from_paths,
    load_config_from_yaml,
)
from oreh.core.config.root import Config
from oreh.core.config.selftest import SelftestConfig
