"""
Sweep metrics: Jain's fairness index and trial aggregation.
"""

import math
from typing import Sequence

import numpy as np

from src.utils.errors import ContractViolation
from src.utils.logger import get_logger


logger = get_logger("sweep")


def jain_index(rates: Sequence[float]) -> float:
    """
    Jain's fairness index (sum r)^2 / (n * sum r^2).

    Ranges from 1/n (one user gets everything) to 1 (all equal). All-zero
    rates give 0 and a JAIN_ALL_ZERO warning.
    """
    rates = np.asarray(rates, dtype=float)
    if rates.ndim != 1 or rates.size == 0:
        raise ContractViolation("Jain index needs a non-empty 1-D rate vector")
    if np.any(rates < 0):
        raise ContractViolation("rates cannot be negative")

    total_sq = math.fsum(rates**2)
    if total_sq == 0:
        logger.warning("JAIN_ALL_ZERO", "all rates are zero; Jain index set to 0", users=rates.size)
        return 0.0
    return math.fsum(rates) ** 2 / (rates.size * total_sq)


def mean_and_stderr(values: Sequence[float]) -> tuple[float, float]:
    """Mean and standard error of the mean (0 for a single value)."""
    values = [float(v) for v in values]
    n = len(values)
    if n == 0:
        raise ContractViolation("cannot aggregate an empty sample")
    mean = math.fsum(values) / n
    if n == 1:
        return mean, 0.0
    variance = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(variance / n)
