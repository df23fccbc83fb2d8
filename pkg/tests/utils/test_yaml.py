import pytest

import oreh.utils.yaml as yaml
from oreh.utils.errors import ConfigError


def test_load(tmp_path) -> None:
    contents = """isotropy:
  order_bound: 12
  # comments are ignored
  rdeg_bound: 4
"""
    expected = {"isotropy": {"order_bound": 12, "rdeg_bound": 4}}
    assert yaml.load(contents) == expected

    path = tmp_path / "oreh.yaml"
    path.write_text(contents)
    assert yaml.load(path) == expected


def test_load_empty(tmp_path) -> None:
    with pytest.raises(ConfigError) as ex:
        yaml.load("")
    assert "YAML source can't be empty." in str(ex.value)

    path = tmp_path / "empty.yaml"
    path.write_text("")
    with pytest.raises(ConfigError, match="empty.yaml' can't be empty"):
        yaml.load(path)

    assert yaml.load("", raise_if_empty=False) == {}


def test_load_not_a_mapping() -> None:
    with pytest.raises(ConfigError, match="must be a mapping"):
        yaml.load("- 1\n- 2\n")
