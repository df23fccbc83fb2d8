from __future__ import annotations

from pathlib import Path

OREH = "oreh"

CONFIG_FILE_NAME = "oreh.yaml"
"""Project-level config file looked up in the working directory"""
USER_CONFIG_PATH = Path.home() / ".oreh" / "config.yaml"
"""User-level config file"""
CONFIG_EXTENSIONS = ("yml", "yaml")

DEGREE_OF_ZERO = float("-inf")
"""Degree of the zero polynomial and t-degree of the zero element"""

DEFAULT_ORDER_BOUND = 24
"""Largest root-of-unity order enumerated by isotropy descriptions"""
DEFAULT_RDEG_BOUND = 16
"""Largest x-degree of r(x) solved for by isotropy descriptions"""
DEFAULT_TASKS_NUM = 1
"""Number of worker threads used when enumerating admissible parameters"""

DEFAULT_SEED = 0
"""Seed of the selftest random generator"""

VARIABLE = "x"
DERIVATION_VARIABLE = "t"
UNIT_SYMBOL = "a"
