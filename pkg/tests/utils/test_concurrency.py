import pytest
from pytest_mock.plugin import MockerFixture

from oreh.utils.concurrency import NodeExecutionFailedError, concurrent_apply_to_values
from oreh.utils.errors import ConfigError


@pytest.mark.parametrize("tasks_num", [1, 2, 4])
def test_concurrent_apply_to_values(mocker: MockerFixture, tasks_num: int):
    fn = mocker.Mock(side_effect=lambda value: value * 2)

    assert concurrent_apply_to_values([1, 2, 3, 4, 5], fn, tasks_num) == [2, 4, 6, 8, 10]
    assert fn.call_count == 5
    assert sorted(call.args[0] for call in fn.call_args_list) == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("tasks_num", [1, 2])
def test_concurrent_apply_to_values_exception(mocker: MockerFixture, tasks_num: int):
    cause = ValueError("boom")

    def fn(value: int) -> int:
        if value == 3:
            raise cause
        return value

    with pytest.raises(NodeExecutionFailedError) as ex:
        concurrent_apply_to_values([1, 2, 3, 4], fn, tasks_num)

    assert ex.value.node == 3
    assert ex.value.__cause__ is cause
    assert str(ex.value) == "Execution failed for node 3"


def test_concurrent_apply_to_values_empty(mocker: MockerFixture):
    fn = mocker.Mock()
    assert concurrent_apply_to_values([], fn, 2) == []
    fn.assert_not_called()


def test_invalid_tasks_num():
    with pytest.raises(ConfigError, match="Invalid number of concurrent tasks 0"):
        concurrent_apply_to_values([1], lambda value: value, 0)
