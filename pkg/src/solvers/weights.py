"""
Proportional-fairness weights from long-term average rates.
"""

from dataclasses import dataclass, replace

import numpy as np

from ..rates.instance import NomaInstance
from ..rates.objective import PairWeights
from .report import SolveReport, SolverOptions


@dataclass(frozen=True)
class WeightSet:
    """Current weights plus the averaged rates they were derived from."""

    weights: PairWeights
    avg_weak: np.ndarray
    avg_strong: np.ndarray
    horizon: float = 10.0
    rate_floor: float = 1.0
    alpha: float = 0.999

    @classmethod
    def initial(cls, pair_count: int, options: SolverOptions | None = None) -> "WeightSet":
        """Unit weights with averages at 1 bit/s."""
        options = options or SolverOptions()
        return cls(
            weights=PairWeights.uniform(pair_count),
            avg_weak=np.ones(pair_count),
            avg_strong=np.ones(pair_count),
            horizon=options.ema_horizon,
            rate_floor=options.rate_floor,
            alpha=options.alpha,
        )

    def max_relative_change(self, other: "WeightSet") -> float:
        old = np.concatenate([self.weights.weak, self.weights.strong])
        new = np.concatenate([other.weights.weak, other.weights.strong])
        return float(np.max(np.abs(new - old) / old))


def update_weights(report: SolveReport, weight_set: WeightSet, instance: NomaInstance) -> WeightSet:
    """
    One outer fairness update.

    Averages move toward the reported rates with horizon T, weights become
    1 / max(average, floor), and within each pair the strong weight is
    pulled down to alpha * w_w when the strong average trails the weak one
    or when a direct pair breaks w_w / w_s < Psi_s / Psi_w.
    """
    step = 1.0 / weight_set.horizon
    avg_weak = (1.0 - step) * weight_set.avg_weak + step * report.rates.weak_rates
    avg_strong = (1.0 - step) * weight_set.avg_strong + step * report.rates.strong_rates

    w_weak = 1.0 / np.maximum(avg_weak, weight_set.rate_floor)
    w_strong = 1.0 / np.maximum(avg_strong, weight_set.rate_floor)

    for i, j in enumerate(report.pairing.sigma):
        trailing = avg_strong[j] < avg_weak[i]
        psi_w, psi_s = instance.psi_w[i], instance.psi_s[j]
        violates = (
            report.links.x[i] == 0
            and psi_w > 0
            and not w_weak[i] / w_strong[j] < psi_s / psi_w
        )
        if trailing or violates:
            w_strong[j] = weight_set.alpha * w_weak[i]

    return replace(
        weight_set,
        weights=PairWeights(weak=w_weak, strong=w_strong),
        avg_weak=avg_weak,
        avg_strong=avg_strong,
    )
