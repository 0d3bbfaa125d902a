"""
Utilities package.

Error types, structured logging and configuration loading. The config
module is imported directly (src.utils.config) since it depends on the
domain packages.
"""

from .errors import (
    CoNomaError,
    ConfigError,
    ContractViolation,
    DomainError,
    ErrorCode,
    ResultsIOError,
    SearchRefused,
    create_error_context,
    exit_code_for,
)
from .logger import JsonLogger, configure_logging, get_logger

__all__ = [
    "CoNomaError",
    "ConfigError",
    "ContractViolation",
    "DomainError",
    "ErrorCode",
    "ResultsIOError",
    "SearchRefused",
    "create_error_context",
    "exit_code_for",
    "JsonLogger",
    "configure_logging",
    "get_logger",
]
