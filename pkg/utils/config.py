"""Configuration management for the toolkit."""
import json
import os
import logging
from pathlib import Path
from typing import Dict, Union

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_env(name: str, default: int, problems: list) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        problems.append(f"{name}={raw!r}")
        return default


class Config:
    """Toolkit configuration, read from DEGCX_* environment variables."""

    def __init__(self):
        problems = []

        # Verification harness
        self.seed = _int_env("DEGCX_SEED", 7, problems)
        self.instances = _int_env("DEGCX_INSTANCES", 200, problems)
        self.cohomology_instances = _int_env("DEGCX_COHOMOLOGY_INSTANCES", 100, problems)
        self.regularity_instances = _int_env("DEGCX_REGULARITY_INSTANCES", 50, problems)
        self.parity_instances = _int_env("DEGCX_PARITY_INSTANCES", 50, problems)

        # Random instance shape
        self.max_n = _int_env("DEGCX_MAX_N", 8, problems)
        self.max_s = _int_env("DEGCX_MAX_S", 3, problems)
        self.max_degree = _int_env("DEGCX_MAX_DEGREE", 3, problems)

        # Ring size for ideals built without an explicit n (e.g. the empty generator list)
        self.default_n = _int_env("DEGCX_DEFAULT_N", self.max_n, problems)

        # Cohomology scan guard
        self.max_lattice = _int_env("DEGCX_MAX_LATTICE", 50000, problems)

        self.log_level = os.getenv("DEGCX_LOG_LEVEL", "WARNING").upper()
        self.progress = os.getenv("DEGCX_PROGRESS", "off").lower() in ("1", "on", "true", "yes")

        self._validate(problems)

    def _validate(self, problems: list):
        """Validate configuration values."""
        invalid = list(problems)

        for name, value, low in (
            ("DEGCX_INSTANCES", self.instances, 0),
            ("DEGCX_COHOMOLOGY_INSTANCES", self.cohomology_instances, 0),
            ("DEGCX_REGULARITY_INSTANCES", self.regularity_instances, 0),
            ("DEGCX_PARITY_INSTANCES", self.parity_instances, 0),
            ("DEGCX_MAX_N", self.max_n, 2),
            ("DEGCX_MAX_S", self.max_s, 1),
            ("DEGCX_MAX_DEGREE", self.max_degree, 1),
            ("DEGCX_MAX_LATTICE", self.max_lattice, 1),
            ("DEGCX_DEFAULT_N", self.default_n, 0),
        ):
            if value < low:
                invalid.append(f"{name}={value} (minimum {low})")
        if self.max_n > 24:
            invalid.append(f"DEGCX_MAX_N={self.max_n} (maximum 24)")
        if self.default_n > 24:
            invalid.append(f"DEGCX_DEFAULT_N={self.default_n} (maximum 24)")
        if self.log_level not in LOG_LEVELS:
            invalid.append(f"DEGCX_LOG_LEVEL={self.log_level!r}")

        if invalid:
            error_msg = f"Invalid environment variables: {', '.join(invalid)}"
            logger.error(error_msg)
            raise ValueError(error_msg)

        if self.max_n > 10:
            logger.warning(
                f"DEGCX_MAX_N={self.max_n}: random instances enumerate 2^n faces, harness runs will be slow"
            )


def load_settings_file(path: Union[str, Path]) -> Dict[str, str]:
    """Export the "Values" object of a JSON settings file into the environment."""
    settings_file = Path(path)
    with open(settings_file, "r") as f:
        settings = json.load(f)
    values = settings.get("Values", {})
    for key, value in values.items():
        os.environ[key] = str(value)
    logger.info(f"Loaded {len(values)} settings from {settings_file}")
    reset_config()
    return values


# Global config instance
_config = None


def get_config() -> Config:
    """Get configuration singleton."""
    global _config
    if _config is None:
        _config = Config()
        logger.info("Configuration loaded")
    return _config


def reset_config() -> None:
    """Drop the singleton so the next get_config() rereads the environment."""
    global _config
    _config = None
