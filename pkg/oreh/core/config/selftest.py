from __future__ import annotations

from pydantic import conint

from oreh.core import constants as c
from oreh.core.config.base import BaseConfig


class SelftestConfig(BaseConfig):
    """Sample sizes of the `oh selftest` suites.

    Args:
        seed: Seed of the random generator shared by all suites.
        product: Random (h, r, g) triples checked against the product formulas.
        aut: Random normalized h whose torsion group is cross-checked.
        power: Random automorphisms whose powers are compared to iterated composition.
        nowicki: Random derivations recovered from their images on x and t.
        oracle: Random (D, ρ) pairs on which the membership criterion meets the brute-force oracle.
        lnd: Random g for the locally nilpotent derivation checks.
        localization: Random ψ-fractions for the kernel and commutator checks.
    """

    seed: int = c.DEFAULT_SEED
    product: conint(ge=0) = 100  # type: ignore
    aut: conint(ge=0) = 50  # type: ignore
    power: conint(ge=0) = 50  # type: ignore
    nowicki: conint(ge=0) = 200  # type: ignore
    oracle: conint(ge=0) = 500  # type: ignore
    lnd: conint(ge=0) = 100  # type: ignore
    localization: conint(ge=0) = 100  # type: ignore
