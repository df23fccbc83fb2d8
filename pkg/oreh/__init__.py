"""
.. include:: ../README.md
"""
from __future__ import annotations

import logging
import sys

from oreh.core.algebra import AlgebraContext, OreElement, commutator, ore_mul, ore_pow
from oreh.core.automorphism import Automorphism, aut_group, normalize_h
from oreh.core.config import Config, IsotropyConfig, SelftestConfig
from oreh.core.derivation import Derivation, conjugate, decompose_images
from oreh.core.expression import parse
from oreh.core.isotropy import check, describe
from oreh.core.localization import LocElement, PsiFraction, SpecialPoly
from oreh.core.poly import Poly

try:
    from oreh._version import __version__, __version_tuple__  # type: ignore
except ImportError:
    __version__ = "0.0.0"


class CustomFormatter(logging.Formatter):
    """Colors each record by level; progress of long enumerations is logged at INFO."""

    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    COLORS = {
        logging.DEBUG: "\x1b[2m",
        logging.INFO: "\x1b[2m",
        logging.WARNING: "\x1b[33m",
        logging.ERROR: "\x1b[31m",
        logging.CRITICAL: "\x1b[1;31m",
    }
    RESET = "\x1b[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelno, "")
        return color + logging.Formatter(self.LOG_FORMAT).format(record) + self.RESET


def enable_logging(level: int = logging.INFO) -> None:
    """Sends colored log records to stderr; stdout is reserved for command output."""
    logger = logging.getLogger()
    logger.setLevel(level)
    if not logger.hasHandlers():
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(CustomFormatter())
        logger.addHandler(handler)
