"""
Solver options, method tags and the solve report.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from ..links.selection import LinkSelection
from ..pairing.matrix import PairingMatrix
from ..power.allocator import PowerSolution
from ..rates.instance import NomaInstance
from ..rates.objective import RateReport
from ..utils.errors import DomainError


class Method(str, Enum):
    """Solver method tags."""

    CO_NOMA = "co-noma"
    NOMA = "noma"
    BASELINE2 = "baseline2"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class SolverOptions:
    """Stopping rules and fairness-update constants."""

    max_iterations: int = 50
    tolerance: float = 1e-6
    exhaustive_max_pairs: int = 6
    max_weight_updates: int = 100
    weight_tolerance: float = 1e-3
    ema_horizon: float = 10.0
    rate_floor: float = 1.0
    alpha: float = 0.999

    def __post_init__(self):
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1", value=self.max_iterations)
        if self.tolerance < 0 or self.weight_tolerance < 0:
            raise DomainError("tolerances must be non-negative")
        if not 1 <= self.max_weight_updates <= 100:
            raise DomainError(
                "max_weight_updates must lie in [1, 100]", value=self.max_weight_updates
            )
        if self.exhaustive_max_pairs < 1:
            raise DomainError("exhaustive_max_pairs must be >= 1", value=self.exhaustive_max_pairs)
        if self.ema_horizon < 1:
            raise DomainError("ema_horizon must be >= 1", value=self.ema_horizon)
        if self.rate_floor <= 0:
            raise DomainError("rate_floor must be positive", value=self.rate_floor)
        if not 0 < self.alpha < 1:
            raise DomainError("alpha must lie in (0, 1)", value=self.alpha)


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run on one instance."""

    method: Method
    pairing: PairingMatrix
    links: LinkSelection
    power: PowerSolution
    rates: RateReport
    trace: tuple[float, ...]
    iterations: int
    converged: bool
    idle: bool = False

    @property
    def objective(self) -> float:
        return self.rates.weighted

    @property
    def sum_rate(self) -> float:
        return self.rates.sum_rate

    def user_rates(self, instance: NomaInstance) -> np.ndarray:
        return self.rates.user_rates(instance)

    def to_dict(self, instance: NomaInstance) -> dict[str, Any]:
        """JSON-ready view keyed by user id."""
        rates = self.user_rates(instance)
        return {
            "method": self.method.value,
            "objective": self.objective,
            "sum_rate_bps": self.sum_rate,
            "user_rates_bps": {str(uid): float(r) for uid, r in enumerate(rates)},
            "pairing": {
                str(instance.weak[i]): instance.strong[j]
                for i, j in enumerate(self.pairing.sigma)
            },
            "relayed": {
                str(instance.weak[i]): bool(v) for i, v in enumerate(self.links.x)
            },
            "power": self.power.to_dict(),
            "trace": list(self.trace),
            "iterations": self.iterations,
            "converged": self.converged,
            "idle": self.idle,
        }
