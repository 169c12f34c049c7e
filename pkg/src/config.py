"""
Runtime configuration.

Settings come from environment variables, optionally provided through a local
``.env`` file. The variables are re-read on every ``get_settings()`` call so
that tests and scripts can change them without reloading modules.

Recognised variables:
- GRAPHVAR_MAX_EDGES: lowers (never raises) the built-in edge-count guards.
- GRAPHVAR_N_JOBS: joblib worker count for the check suites (default 1).
- GRAPHVAR_LOG_LEVEL: logging level name (default WARNING).
- GRAPHVAR_PROGRESS: any of 1/true/yes enables tqdm progress bars on stderr.
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from src.errors import ParameterError, SizeLimitError

load_dotenv()

_TRUTHY = {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    """
    Snapshot of the environment-driven settings.

    Attributes:
        max_edges (int | None): Optional ceiling applied to every edge guard.
        n_jobs (int): Worker count handed to joblib.
        log_level (str): Logging level name.
        progress (bool): Whether exhaustive scans show tqdm progress bars.
    """

    max_edges: Optional[int] = None
    n_jobs: int = 1
    log_level: str = "WARNING"
    progress: bool = False


def _read_int(name: str, default: Optional[int], allow_negative: bool = False):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{name} must be an integer, got {raw!r}")
    if value == 0 or (value < 0 and not allow_negative):
        raise ParameterError(f"{name} must be positive, got {value}")
    return value


def get_settings() -> Settings:
    """
    Read the current settings from the environment.

    Returns:
        Settings: The parsed settings.

    Raises:
        ParameterError: If a numeric variable or the log level is malformed.
    """
    log_level = (os.getenv("GRAPHVAR_LOG_LEVEL") or "WARNING").strip().upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ParameterError(
            f"GRAPHVAR_LOG_LEVEL is not a logging level: {log_level!r}"
        )
    return Settings(
        max_edges=_read_int("GRAPHVAR_MAX_EDGES", None),
        # joblib accepts -1 for "all cores"
        n_jobs=_read_int("GRAPHVAR_N_JOBS", 1, allow_negative=True),
        log_level=log_level,
        progress=os.getenv("GRAPHVAR_PROGRESS", "").strip().lower() in _TRUTHY,
    )


def edge_limit(builtin: int) -> int:
    """
    Effective edge guard: the built-in value, lowered by GRAPHVAR_MAX_EDGES.

    Args:
        builtin (int): The guard compiled into the calling operation.

    Returns:
        int: ``min(builtin, GRAPHVAR_MAX_EDGES)`` when the variable is set.
    """
    ceiling = get_settings().max_edges
    return builtin if ceiling is None else min(builtin, ceiling)


def check_edge_limit(edge_count: int, builtin: int, operation: str) -> None:
    """
    Raise SizeLimitError when ``edge_count`` exceeds the effective edge guard.
    """
    limit = edge_limit(builtin)
    if edge_count > limit:
        raise SizeLimitError(
            f"{operation} supports at most {limit} edges, got {edge_count}"
        )


def check_vertex_limit(vertex_count: int, builtin: int, operation: str) -> None:
    """
    Raise SizeLimitError when ``vertex_count`` exceeds ``builtin``.
    """
    if vertex_count > builtin:
        raise SizeLimitError(
            f"{operation} supports at most {builtin} vertices, got {vertex_count}"
        )
