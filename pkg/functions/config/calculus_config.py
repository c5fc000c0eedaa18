"""
Calculus Engine Configuration

Knobs for how far the engine is allowed to enumerate. The arity bound decides
which symmetric groups we are willing to tabulate, the check profile decides
how many instances a single law cell may enumerate before we fall back to a
seeded sample, and the witness cap keeps reports readable when a broken table
fails thousands of instances at once.

Values come from the environment (a .env file works too) and the CLI flags
override whatever the environment says.
"""

import logging
import os
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from ..core.errors import CapacityError

load_dotenv()

logger = logging.getLogger(__name__)

HARD_ARITY_CAP = 6


class CheckProfile(Enum):
    """How much of each law cell gets enumerated"""
    QUICK = "quick"              # small budget, fast feedback
    STANDARD = "standard"        # default budget
    EXHAUSTIVE = "exhaustive"    # no budget at all


@dataclass
class CalculusConfig:
    """Configuration for products, evaluations and law checks"""

    max_arity: int = 4
    arity_bound: int = 5
    max_witnesses: int = 5

    check_profile: CheckProfile = CheckProfile.STANDARD
    sample_seed: int = 1729

    # largest carrier a rule-backed functor may be evaluated at past max_arity
    rule_carrier_limit: int = 4096

    @property
    def law_instance_budget(self) -> Optional[int]:
        budgets = {
            CheckProfile.QUICK: 20_000,
            CheckProfile.STANDARD: 250_000,
            CheckProfile.EXHAUSTIVE: None,
        }
        return budgets[self.check_profile]

    def __post_init__(self):
        if self.arity_bound > HARD_ARITY_CAP:
            raise CapacityError(
                f"arity bound {self.arity_bound} exceeds the hard cap {HARD_ARITY_CAP}",
                details={"arity_bound": self.arity_bound, "hard_cap": HARD_ARITY_CAP},
            )
        if self.max_arity < 0:
            raise CapacityError("max_arity must be non-negative", details={"max_arity": self.max_arity})
        if self.max_arity > self.arity_bound:
            raise CapacityError(
                f"max_arity {self.max_arity} exceeds the arity bound {self.arity_bound}",
                details={"max_arity": self.max_arity, "arity_bound": self.arity_bound},
            )


class ConfigurationManager:
    """Builds configurations and holds the one the kernel currently reads"""

    _active: Optional[CalculusConfig] = None

    @staticmethod
    def from_environment(**overrides: Any) -> CalculusConfig:
        """Read VECTOID_* variables, then apply non-None overrides"""
        values: Dict[str, Any] = {}

        int_settings = {
            "max_arity": "VECTOID_MAX_ARITY",
            "arity_bound": "VECTOID_ARITY_BOUND",
            "max_witnesses": "VECTOID_MAX_WITNESSES",
            "sample_seed": "VECTOID_SAMPLE_SEED",
            "rule_carrier_limit": "VECTOID_RULE_CARRIER_LIMIT",
        }
        for field_name, env_name in int_settings.items():
            raw = os.getenv(env_name)
            if raw is None or raw == "":
                continue
            try:
                values[field_name] = int(raw)
            except ValueError:
                logger.warning(f"Ignoring non-integer {env_name}={raw!r}")

        profile = os.getenv("VECTOID_CHECK_PROFILE")
        if profile:
            values["check_profile"] = ConfigurationManager.profile_from_name(profile)

        for key, value in overrides.items():
            if value is None:
                continue
            if key == "check_profile" and isinstance(value, str):
                value = ConfigurationManager.profile_from_name(value)
            values[key] = value

        return CalculusConfig(**values)

    @staticmethod
    def profile_from_name(name: str) -> CheckProfile:
        profile_mapping = {
            "quick": CheckProfile.QUICK,
            "standard": CheckProfile.STANDARD,
            "exhaustive": CheckProfile.EXHAUSTIVE,
        }
        profile = profile_mapping.get(name.lower())
        if profile is None:
            logger.warning(f"Unknown check profile {name!r}, using standard")
            return CheckProfile.STANDARD
        return profile

    @staticmethod
    def activate(config: CalculusConfig) -> CalculusConfig:
        ConfigurationManager._active = config
        logger.debug(f"Active configuration: {config}")
        return config

    @staticmethod
    def active() -> CalculusConfig:
        if ConfigurationManager._active is None:
            return DEFAULT_CONFIG
        return ConfigurationManager._active

    @staticmethod
    def with_max_arity(max_arity: int, config: Optional[CalculusConfig] = None) -> CalculusConfig:
        return replace(config or ConfigurationManager.active(), max_arity=max_arity)


# Default configuration instances
DEFAULT_CONFIG = CalculusConfig()
QUICK_CONFIG = CalculusConfig(check_profile=CheckProfile.QUICK)
EXHAUSTIVE_CONFIG = CalculusConfig(check_profile=CheckProfile.EXHAUSTIVE)
