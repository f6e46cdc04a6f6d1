"""
Configuration management for laxcat.

This module provides centralized configuration with environment
variable support using dataclasses.
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class LimitsConfig:
    """Size guards and search bounds."""

    max_objects: int = 64
    max_morphisms: int = 512
    saturation_bound: int = 32  # composite depth for Cat-coequalizers
    enumeration_limit: int = 100_000

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.max_objects <= 0:
            raise ValueError("max_objects must be positive")
        if self.max_morphisms <= 0:
            raise ValueError("max_morphisms must be positive")
        if self.saturation_bound <= 0:
            raise ValueError("saturation_bound must be positive")
        if self.enumeration_limit <= 0:
            raise ValueError("enumeration_limit must be positive")


@dataclass
class OracleConfig:
    """Universal-property oracle configuration."""

    probes: int = 3
    workers: int = 1

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.probes < 0:
            raise ValueError("probes must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class LaxcatConfig:
    """
    Main configuration class for laxcat.

    Supports loading from:
    1. Environment variables (LAXCAT_* prefix)
    2. Direct instantiation

    Example:
        # From environment variables
        export LAXCAT_BOUND=64
        export LAXCAT_PROBES=4

        # Or in code
        config = LaxcatConfig(
            limits=LimitsConfig(saturation_bound=64),
            oracle=OracleConfig(probes=4),
        )
    """

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    log_level: str = "WARNING"
    debug_mode: bool = False

    def __post_init__(self):
        """Load from environment, then validate."""
        self._load_from_env()

        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.log_level.upper() not in valid_levels:
            raise ValueError(
                f"Invalid log level: {self.log_level}. "
                f"Must be one of: {', '.join(valid_levels)}"
            )
        self.log_level = self.log_level.upper()

    def _load_from_env(self):
        """Load configuration from environment variables."""
        self.limits.saturation_bound = _env_int(
            "LAXCAT_BOUND", self.limits.saturation_bound
        )
        self.limits.enumeration_limit = _env_int(
            "LAXCAT_ENUMERATION_LIMIT", self.limits.enumeration_limit
        )
        self.limits.max_objects = _env_int("LAXCAT_MAX_OBJECTS", self.limits.max_objects)
        self.limits.max_morphisms = _env_int(
            "LAXCAT_MAX_MORPHISMS", self.limits.max_morphisms
        )
        self.oracle.probes = _env_int("LAXCAT_PROBES", self.oracle.probes)
        self.oracle.workers = _env_int("LAXCAT_WORKERS", self.oracle.workers)

        log_level_env = os.getenv("LAXCAT_LOG_LEVEL")
        if log_level_env:
            self.log_level = log_level_env.upper()

        debug_mode_env = os.getenv("LAXCAT_DEBUG_MODE")
        if debug_mode_env:
            self.debug_mode = debug_mode_env.lower() in ("true", "1", "yes")

        # re-run section validation on overridden values
        self.limits.__post_init__()
        self.oracle.__post_init__()

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert config to dictionary.

        Returns:
            Dictionary representation
        """
        return {
            "limits": {
                "max_objects": self.limits.max_objects,
                "max_morphisms": self.limits.max_morphisms,
                "saturation_bound": self.limits.saturation_bound,
                "enumeration_limit": self.limits.enumeration_limit,
            },
            "oracle": {
                "probes": self.oracle.probes,
                "workers": self.oracle.workers,
            },
            "log_level": self.log_level,
            "debug_mode": self.debug_mode,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LaxcatConfig":
        """
        Create config from dictionary.

        Args:
            data: Configuration dictionary

        Returns:
            LaxcatConfig instance
        """
        return cls(
            limits=LimitsConfig(**data.get("limits", {})),
            oracle=OracleConfig(**data.get("oracle", {})),
            log_level=data.get("log_level", "WARNING"),
            debug_mode=data.get("debug_mode", False),
        )


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except (ValueError, TypeError):
        return default


# ============================================================================
# GLOBAL CONFIG INSTANCE
# ============================================================================

_global_config: Optional[LaxcatConfig] = None


def get_config() -> LaxcatConfig:
    """
    Get global config instance.

    Creates default config if not already initialized.

    Returns:
        LaxcatConfig instance
    """
    global _global_config
    if _global_config is None:
        _global_config = LaxcatConfig()
    return _global_config


def set_config(config: LaxcatConfig) -> None:
    """
    Set global config instance.

    Args:
        config: LaxcatConfig instance
    """
    global _global_config
    _global_config = config


def reset_config() -> None:
    """Reset global config to defaults (environment is re-read)."""
    global _global_config
    _global_config = LaxcatConfig()


def get_limits() -> LimitsConfig:
    """Shortcut for ``get_config().limits``."""
    return get_config().limits


def get_oracle_config() -> OracleConfig:
    """Shortcut for ``get_config().oracle``."""
    return get_config().oracle
