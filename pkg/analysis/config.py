"""
Runtime settings for the CLI and the corpus pipeline.

Values come from the environment (and a ``.env`` file, if present). Library
code never reads them; callers pass them on as keyword arguments.
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from model.fincat.levels import DEFAULT_LEVEL_BUDGET
from model.presheaf.lattice import DEFAULT_LATTICE_BUDGET
from model.presheaf.omega import DEFAULT_SIEVE_BUDGET
from model.sites.registrations.delta import DELTA_MAX
from model.sites.registrations.finset import FINSET_MAX

logger = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return default


@dataclass(frozen=True)
class Settings:
    level_budget: int = DEFAULT_LEVEL_BUDGET
    lattice_budget: int = DEFAULT_LATTICE_BUDGET
    sieve_budget: int = DEFAULT_SIEVE_BUDGET
    delta_max: int = DELTA_MAX
    finset_max: int = FINSET_MAX
    workers: int = 4
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        level = os.getenv("TOPOS_LOG_LEVEL", "WARNING").upper()
        if level not in _LOG_LEVELS:
            logger.warning("ignoring TOPOS_LOG_LEVEL=%r", level)
            level = "WARNING"
        return cls(
            level_budget=_int_env("TOPOS_LEVEL_BUDGET", DEFAULT_LEVEL_BUDGET),
            lattice_budget=_int_env("TOPOS_LATTICE_BUDGET", DEFAULT_LATTICE_BUDGET),
            sieve_budget=_int_env("TOPOS_SIEVE_BUDGET", DEFAULT_SIEVE_BUDGET),
            delta_max=_int_env("TOPOS_DELTA_MAX", DELTA_MAX),
            finset_max=_int_env("TOPOS_FINSET_MAX", FINSET_MAX),
            workers=max(1, _int_env("TOPOS_WORKERS", 4)),
            log_level=level,
        )

    def size_limit(self, kind: str) -> int:
        return self.finset_max if kind == "finset" else self.delta_max
