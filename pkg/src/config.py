# src/config.py

import os
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import InputError


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class ToolkitConfig:
    """
    Runtime limits and defaults, overridable through GRAPHPROD_* variables
    """

    max_exhaustive_vertices: int = 12
    max_ball_size: int = 200000
    default_radius: int = 2
    random_seed: int = 20240501
    selftest_workers: int = 4
    selftest_samples: int = 500
    log_level: str = "WARNING"
    output_dir: str = "."

    @classmethod
    def from_env(cls) -> "ToolkitConfig":
        """Build a configuration from the environment, falling back to defaults"""
        return cls(
            max_exhaustive_vertices=_int_env("GRAPHPROD_MAX_EXHAUSTIVE_VERTICES", 12),
            max_ball_size=_int_env("GRAPHPROD_MAX_BALL_SIZE", 200000),
            default_radius=_int_env("GRAPHPROD_DEFAULT_RADIUS", 2),
            random_seed=_int_env("GRAPHPROD_SEED", 20240501),
            selftest_workers=_int_env("GRAPHPROD_WORKERS", 4),
            selftest_samples=_int_env("GRAPHPROD_SAMPLES", 500),
            log_level=os.getenv("GRAPHPROD_LOG_LEVEL", "WARNING").upper(),
            output_dir=os.getenv("GRAPHPROD_OUTPUT_DIR", "."),
        )


@lru_cache(maxsize=1)
def get_config() -> ToolkitConfig:
    return ToolkitConfig.from_env()
