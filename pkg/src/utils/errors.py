"""
Error codes and exceptions for the Co-NOMA optimizer.

Every failure raised by the library is a CoNomaError carrying an
ErrorCode and a context dictionary, so the CLI can print a structured
error payload and pick the right exit code.
"""

from enum import Enum
from typing import Any


class ErrorCode(str, Enum):
    """
    Standard error codes.

    Config and I/O errors map to dedicated CLI exit codes.
    Other errors indicate misuse of the library or invalid inputs.
    """

    # Input outside the mathematical domain of an operation
    DOMAIN_ERROR = "E100"

    # Caller broke an operation's precondition
    CONTRACT_VIOLATION = "E200"

    # Configuration file or CLI flag problems
    CONFIG_ERROR = "E300"

    # Result persistence failures
    RESULTS_IO_ERROR = "E400"

    # Exhaustive search asked for too large an instance
    SEARCH_REFUSED = "E500"


# CLI exit codes per error code (anything else exits with 1)
EXIT_CODES = {
    ErrorCode.CONFIG_ERROR: 2,
    ErrorCode.RESULTS_IO_ERROR: 3,
}


class CoNomaError(Exception):
    """Base class for all library errors."""

    code: ErrorCode = ErrorCode.CONTRACT_VIOLATION

    def __init__(self, message: str, **context: Any):
        self.message = message
        self.context = context
        super().__init__(message)

    def to_dict(self) -> dict[str, Any]:
        """Structured error payload."""
        return create_error_context(self.code, message=self.message, **self.context)


class DomainError(CoNomaError, ValueError):
    """Argument outside the domain of a formula (e.g. a 90 degree half angle)."""

    code = ErrorCode.DOMAIN_ERROR


class ContractViolation(CoNomaError, ValueError):
    """Precondition of an operation does not hold."""

    code = ErrorCode.CONTRACT_VIOLATION


class ConfigError(CoNomaError):
    """Invalid configuration file, key or value."""

    code = ErrorCode.CONFIG_ERROR


class ResultsIOError(CoNomaError, OSError):
    """Results could not be read or written."""

    code = ErrorCode.RESULTS_IO_ERROR


class SearchRefused(CoNomaError):
    """Exhaustive search refused because the instance is too large."""

    code = ErrorCode.SEARCH_REFUSED


def exit_code_for(error: CoNomaError) -> int:
    """Map a library error to a CLI exit code."""
    return EXIT_CODES.get(error.code, 1)


def create_error_context(error_code: ErrorCode, **kwargs: Any) -> dict[str, Any]:
    """
    Create an error context dictionary.

    Args:
        error_code: The error code
        **kwargs: Additional context fields

    Returns:
        Dictionary with error details
    """
    error_info = {
        ErrorCode.DOMAIN_ERROR: {
            "name": "DOMAIN_ERROR",
            "description": "Argument outside the domain of the formula",
        },
        ErrorCode.CONTRACT_VIOLATION: {
            "name": "CONTRACT_VIOLATION",
            "description": "Operation precondition violated",
        },
        ErrorCode.CONFIG_ERROR: {
            "name": "CONFIG_ERROR",
            "description": "Invalid configuration",
        },
        ErrorCode.RESULTS_IO_ERROR: {
            "name": "RESULTS_IO_ERROR",
            "description": "Results could not be read or written",
        },
        ErrorCode.SEARCH_REFUSED: {
            "name": "SEARCH_REFUSED",
            "description": "Exhaustive search refused for this instance size",
        },
    }

    info = error_info.get(error_code, {"name": "UNKNOWN", "description": "Unknown error"})

    return {
        "error_code": error_code.value,
        "error_name": info["name"],
        "error_description": info["description"],
        **kwargs,
    }
