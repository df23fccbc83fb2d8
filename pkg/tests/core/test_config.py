import os
from pathlib import Path
from unittest import mock

import pytest

from oreh.core.config import (
    Config,
    IsotropyConfig,
    SelftestConfig,
    default_config_paths,
    load_config_from_env,
    load_config_from_paths,
    load_config_from_yaml,
)
from oreh.core.config.base import UpdateStrategy, update_field
from oreh.utils.errors import ConfigError


@pytest.fixture
def yaml_config_path(tmp_path) -> Path:
    config_path = tmp_path / "oreh.yaml"
    config_path.write_text(
        """
isotropy:
    order_bound: 8
selftest:
    seed: 7
    oracle: 10
"""
    )
    return config_path


def test_defaults():
    config = Config()
    assert config.isotropy == IsotropyConfig(order_bound=24, rdeg_bound=16, tasks_num=1)
    assert config.selftest.seed == 0
    assert config.selftest.oracle == 500


def test_update_with_nested():
    config = Config(isotropy=IsotropyConfig(order_bound=8, rdeg_bound=2))
    updated = config.update_with(Config(isotropy=IsotropyConfig(rdeg_bound=5)))
    assert updated.isotropy == IsotropyConfig(order_bound=8, rdeg_bound=5)
    assert config.isotropy.rdeg_bound == 2

    assert Config().update_with({"selftest": {"seed": 3}}).selftest == SelftestConfig(seed=3)


def test_update_field():
    assert update_field(None, 1) == 1
    assert update_field(1, 2, UpdateStrategy.REPLACE) == 2

    with pytest.raises(ConfigError, match="requires a config object"):
        update_field(1, 2, UpdateStrategy.NESTED_UPDATE)
    with pytest.raises(ConfigError, match="same type"):
        update_field(IsotropyConfig(), SelftestConfig(), UpdateStrategy.NESTED_UPDATE)


def test_validation():
    with pytest.raises(ValueError):
        IsotropyConfig(order_bound=0)
    with pytest.raises(ValueError):
        SelftestConfig(oracle=-1)
    with pytest.raises(ValueError):
        Config(unknown=1)


def test_load_config_from_yaml(yaml_config_path):
    config = load_config_from_yaml(yaml_config_path)
    assert config.isotropy.order_bound == 8
    assert config.selftest == SelftestConfig(seed=7, oracle=10)


def test_load_config_from_paths(yaml_config_path, tmp_path):
    override = tmp_path / "override.yml"
    override.write_text("selftest:\n    oracle: 3\n")

    config = load_config_from_paths(
        tmp_path / "missing.yaml", yaml_config_path, override, load_from_env=False
    )
    assert config.isotropy.order_bound == 8
    assert config.selftest.seed == 7
    assert config.selftest.oracle == 3


def test_load_config_unsupported_extension(tmp_path):
    config_path = tmp_path / "config.txt"
    config_path.touch()

    with pytest.raises(ConfigError, match=r"^Unsupported config file extension 'txt'.*"):
        load_config_from_paths(config_path)


def test_load_config_directory(tmp_path):
    with pytest.raises(ConfigError, match="must be a file"):
        load_config_from_paths(tmp_path)


def test_load_config_invalid_yaml(tmp_path):
    config_path = tmp_path / "oreh.yaml"
    config_path.write_text("isotropy:\n    order_bound: zero\n")

    with pytest.raises(ConfigError, match="Invalid configuration in"):
        load_config_from_yaml(config_path)


def test_load_config_from_env():
    with mock.patch.dict(
        os.environ,
        {
            "OREH__ISOTROPY__ORDER_BOUND": "6",
            "OREH__SELFTEST__SEED": "42",
        },
    ):
        config = load_config_from_env()
        assert config.isotropy.order_bound == 6
        assert config.selftest.seed == 42


def test_env_overrides_files(yaml_config_path):
    with mock.patch.dict(os.environ, {"OREH__ISOTROPY__ORDER_BOUND": "3"}):
        config = load_config_from_paths(yaml_config_path)
    assert config.isotropy.order_bound == 3
    assert config.selftest.seed == 7


def test_load_config_from_env_invalid_variable_name():
    with mock.patch.dict(os.environ, {"OREH__": ""}):
        with pytest.raises(
            ConfigError,
            match="Invalid oreh configuration variable 'oreh__'.",
        ):
            load_config_from_env()


def test_default_config_paths(tmp_path):
    paths = default_config_paths(tmp_path / "extra.yaml")
    assert paths[-1] == tmp_path / "extra.yaml"
    assert paths[1] == Path.cwd() / "oreh.yaml"
    assert len(default_config_paths()) == 2
