from __future__ import annotations

from pydantic import conint

from oreh.core import constants as c
from oreh.core.config.base import BaseConfig


class IsotropyConfig(BaseConfig):
    """Limits of the isotropy group descriptions.

    Args:
        order_bound: The largest order n for which the n-th roots of unity are enumerated.
        rdeg_bound: The largest degree of r(x) the linear solve for r is allowed to set up.
        tasks_num: The number of worker threads checking candidate values of a.
    """

    order_bound: conint(ge=1) = c.DEFAULT_ORDER_BOUND  # type: ignore
    rdeg_bound: conint(ge=0) = c.DEFAULT_RDEG_BOUND  # type: ignore
    tasks_num: conint(ge=1) = c.DEFAULT_TASKS_NUM  # type: ignore
