"""
JSON Lines logger for the Co-NOMA optimizer.

Writes structured logs in JSONL format for easy parsing and analysis.
Each log entry is a single JSON object on one line. Library modules
obtain a logger with get_logger(); the CLI points all of them at a log
directory with configure_logging().
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional


# Process-wide sink shared by every JsonLogger
_SINK: dict[str, Any] = {"directory": None, "level": logging.INFO, "run_id": "conoma"}
_LOGGERS: dict[str, "JsonLogger"] = {}


def _to_json_value(value: Any) -> Any:
    """Make numpy scalars and arrays JSON friendly."""
    if hasattr(value, "tolist"):
        return value.tolist()
    return value


class JsonLogger:
    """
    Logger that writes JSON Lines format logs.

    Each log entry includes:
    - timestamp (UTC)
    - level
    - component
    - event_type
    - message
    - Additional context fields
    """

    def __init__(self, component: str):
        """
        Initialize the JSON logger.

        Args:
            component: Library component name (channel, power, sweep, ...)
        """
        self.component = component
        self.console_logger = logging.getLogger(f"conoma.{component}")

    @property
    def level(self) -> int:
        return _SINK["level"]

    @property
    def log_file(self) -> Optional[Path]:
        directory = _SINK["directory"]
        if directory is None:
            return None
        return Path(directory) / f"{_SINK['run_id']}.log.jsonl"

    def _get_timestamp(self) -> str:
        """Get current UTC timestamp."""
        return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")

    def _write_log(
        self,
        level: str,
        event_type: str,
        message: str,
        **kwargs: Any,
    ) -> None:
        """Write a log entry to the JSONL file."""
        log_file = self.log_file
        if log_file is None:
            return

        entry = {
            "timestamp": self._get_timestamp(),
            "level": level,
            "component": self.component,
            "event_type": event_type,
            "message": message,
            **{key: _to_json_value(value) for key, value in kwargs.items()},
        }

        try:
            with open(log_file, "a", encoding="utf-8") as f:
                f.write(json.dumps(entry, default=str) + "\n")
        except IOError:
            # Never fail a computation because of logging
            pass

    def _log(self, level: int, name: str, event_type: str, message: str, **kwargs: Any) -> None:
        if self.level <= level:
            self._write_log(name, event_type, message, **kwargs)
            self.console_logger.log(level, f"[{event_type}] {message}")

    def debug(self, event_type: str, message: str, **kwargs: Any) -> None:
        """Log a debug message."""
        self._log(logging.DEBUG, "DEBUG", event_type, message, **kwargs)

    def info(self, event_type: str, message: str, **kwargs: Any) -> None:
        """Log an info message."""
        self._log(logging.INFO, "INFO", event_type, message, **kwargs)

    def warning(self, event_type: str, message: str, **kwargs: Any) -> None:
        """Log a warning message."""
        self._log(logging.WARNING, "WARNING", event_type, message, **kwargs)

    def error(self, event_type: str, message: str, **kwargs: Any) -> None:
        """Log an error message."""
        self._log(logging.ERROR, "ERROR", event_type, message, **kwargs)

    def log_solve(
        self,
        method: str,
        objective: float,
        iterations: int,
        converged: bool,
        **kwargs: Any,
    ) -> None:
        """Log the outcome of one solver run."""
        self.debug(
            "SOLVE_CONVERGED" if converged else "SOLVE_STOPPED",
            f"{method}: objective {objective:.6g} after {iterations} iterations",
            method=method,
            objective=objective,
            iterations=iterations,
            **kwargs,
        )

    def log_sweep_point(
        self,
        axis: str,
        value: float,
        method: str,
        mean_sum_rate: float,
        mean_jain: float,
        trials: int,
    ) -> None:
        """Log one aggregated sweep point."""
        self.info(
            "SWEEP_POINT_DONE",
            f"{axis}={value:g} {method}: sum-rate {mean_sum_rate:.4g} bit/s, "
            f"Jain {mean_jain:.4f} over {trials} trials",
            axis=axis,
            value=value,
            method=method,
            mean_sum_rate=mean_sum_rate,
            mean_jain=mean_jain,
            trials=trials,
        )


def configure_logging(
    directory: Optional[str] = None,
    level: str = "INFO",
    run_id: str = "conoma",
) -> None:
    """
    Point every JsonLogger at a log directory and level.

    Args:
        directory: Directory for the JSONL file (None for console only)
        level: Minimum log level (DEBUG, INFO, WARNING, ERROR)
        run_id: Log file stem
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    _SINK["level"] = numeric_level
    _SINK["run_id"] = run_id
    if directory is not None:
        Path(directory).mkdir(parents=True, exist_ok=True)
    _SINK["directory"] = directory

    root = logging.getLogger("conoma")
    root.setLevel(numeric_level)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")
        )
        root.addHandler(handler)


def get_logger(component: str) -> JsonLogger:
    """
    Get the JSON logger for a library component.

    Args:
        component: Component name

    Returns:
        Shared JsonLogger instance
    """
    if component not in _LOGGERS:
        _LOGGERS[component] = JsonLogger(component)
    return _LOGGERS[component]
