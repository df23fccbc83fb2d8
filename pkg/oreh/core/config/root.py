from __future__ import annotations

import typing as t

from oreh.core.config.base import BaseConfig, UpdateStrategy
from oreh.core.config.isotropy import IsotropyConfig
from oreh.core.config.selftest import SelftestConfig


class Config(BaseConfig):
    """Runtime configuration of the `oh` command line and the library defaults.

    Args:
        isotropy: Enumeration bounds of isotropy descriptions.
        selftest: Seed and sample sizes of the selftest suites.
    """

    isotropy: IsotropyConfig = IsotropyConfig()
    selftest: SelftestConfig = SelftestConfig()

    _FIELD_UPDATE_STRATEGY: t.ClassVar[t.Dict[str, UpdateStrategy]] = {
        "isotropy": UpdateStrategy.NESTED_UPDATE,
        "selftest": UpdateStrategy.NESTED_UPDATE,
    }
