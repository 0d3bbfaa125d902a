"""
Output formatting and persistence for sweeps.
"""

import csv
from pathlib import Path
from typing import Any, Dict, List, Sequence

from pydantic import ValidationError

from src.utils.errors import ResultsIOError
from src.utils.logger import get_logger

from .sweep import SweepResult


logger = get_logger("sweep")

CSV_HEADER = [
    "axis",
    "method",
    "mean_sum_rate_bps",
    "mean_jain",
    "stderr_sum_rate",
    "stderr_jain",
    "trials",
]


def write_results(
    result: SweepResult,
    path: str | Path,
    formats: Sequence[str] = ("csv", "json"),
) -> List[Path]:
    """
    Write a sweep result as CSV and/or JSON.

    Args:
        result: Aggregated sweep
        path: Output stem; ".csv" / ".json" suffixes are added
        formats: Any of "csv", "json"

    Returns:
        Paths written

    Raises:
        ResultsIOError: a file could not be written
    """
    stem = Path(path)
    if stem.suffix in (".csv", ".json"):
        stem = stem.with_suffix("")
    written = []

    try:
        stem.parent.mkdir(parents=True, exist_ok=True)
        if "csv" in formats:
            csv_path = stem.with_suffix(".csv")
            with open(csv_path, "w", newline="", encoding="utf-8") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(CSV_HEADER)
                for p in result.points:
                    writer.writerow(
                        [
                            repr(p.axis_value),
                            p.method,
                            repr(p.mean_sum_rate),
                            repr(p.mean_jain),
                            repr(p.stderr_sum_rate),
                            repr(p.stderr_jain),
                            p.trials,
                        ]
                    )
            written.append(csv_path)
        if "json" in formats:
            json_path = stem.with_suffix(".json")
            json_path.write_text(result.model_dump_json(indent=2) + "\n", encoding="utf-8")
            written.append(json_path)
    except OSError as exc:
        raise ResultsIOError(f"cannot write results: {exc}", path=str(stem)) from exc

    logger.info(
        "RESULTS_WRITTEN",
        f"wrote {', '.join(str(p) for p in written)}",
        paths=[str(p) for p in written],
    )
    return written


def load_results_json(path: str | Path) -> SweepResult:
    """Read a JSON result written by write_results."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ResultsIOError(f"cannot read results: {exc}", path=str(path)) from exc
    try:
        return SweepResult.model_validate_json(text)
    except ValidationError as exc:
        raise ResultsIOError(f"malformed results file: {exc}", path=str(path)) from exc


def print_sweep_table(result: SweepResult, title: str = "Sweep Results") -> None:
    """Print one row per (axis value, method)."""
    print(f"\n{'='*86}")
    print(f"  {title} ({result.axis})")
    print(f"{'='*86}")
    print(f"  {'Value':<10}{'Method':<22}{'Sum-rate (Mbit/s)':>19}{'+/-':>9}{'Jain':>9}{'+/-':>8}{'N':>7}")
    print(f"  {'-'*82}")
    for p in result.points:
        print(
            f"  {p.axis_value:<10g}{p.method:<22}{p.mean_sum_rate / 1e6:>19.3f}"
            f"{p.stderr_sum_rate / 1e6:>9.3f}{p.mean_jain:>9.4f}{p.stderr_jain:>8.4f}{p.trials:>7}"
        )
    for notice in result.notices:
        print(f"  NOTE: {notice}")
    print(f"{'='*86}\n")


def print_activity_log(activity_log: List[Dict[str, Any]]) -> None:
    """Print activity log."""
    print(f"\n{'='*80}")
    print("  SWEEP ACTIVITY LOG")
    print(f"{'='*80}")
    print(f"  {'Event':<25}{'Details':<50}")
    print(f"  {'-'*75}")
    for entry in activity_log:
        print(f"  {entry['event']:<25}{entry['message']:<50}")
    print(f"{'='*80}\n")


def print_performance(stats: Dict[str, Any]) -> None:
    """Print timing statistics."""
    if stats:
        print(
            f"  PERFORMANCE: {stats['total_duration_ms']:.2f}ms total, "
            f"{stats['total_trials']} trials, {stats['avg_trial_ms']:.2f}ms/trial"
        )
