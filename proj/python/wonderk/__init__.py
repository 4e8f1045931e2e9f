"""Equivariant and ordinary K-rings of wonderful compactifications."""

from ._core import (
    DEFAULT_MAX_RANK,
    Error,
    InvariantViolation,
    System,
    TimeoutError,
    ValidationError,
    suite_names,
)

__all__ = [
    "DEFAULT_MAX_RANK",
    "Error",
    "InvariantViolation",
    "System",
    "TimeoutError",
    "ValidationError",
    "suite_names",
]
