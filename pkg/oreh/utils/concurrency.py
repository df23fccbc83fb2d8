from __future__ import annotations

import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor

from oreh.utils.errors import ConfigError, OreError

logger = logging.getLogger(__name__)

H = t.TypeVar("H")
R = t.TypeVar("R")


class NodeExecutionFailedError(t.Generic[H], OreError):
    def __init__(self, node: H):
        self.node = node
        super().__init__(f"Execution failed for node {node}")


def concurrent_apply_to_values(
    values: t.Sequence[H],
    fn: t.Callable[[H], R],
    tasks_num: int,
) -> t.List[R]:
    """Applies a function to the given values, possibly concurrently.

    The results are returned in the order of `values` regardless of the order in which
    the tasks complete.

    Args:
        values: Target values.
        fn: The function that will be applied to each value.
        tasks_num: The number of concurrent tasks. A value of 1 evaluates sequentially.

    Raises:
        NodeExecutionFailedError if `fn` fails for any of the values. The original exception
        is attached as the cause.

    Returns:
        The list of results.
    """
    if tasks_num <= 0:
        raise ConfigError(f"Invalid number of concurrent tasks {tasks_num}")

    if tasks_num == 1 or len(values) <= 1:
        return [_apply(fn, value) for value in values]

    logger.debug("Applying %s to %d values with %d tasks", fn, len(values), tasks_num)
    with ThreadPoolExecutor(max_workers=tasks_num) as pool:
        futures = [pool.submit(_apply, fn, value) for value in values]
        return [future.result() for future in futures]


def _apply(fn: t.Callable[[H], R], value: H) -> R:
    try:
        return fn(value)
    except Exception as ex:
        error: NodeExecutionFailedError[H] = NodeExecutionFailedError(value)
        raise error from ex
