"""
Power allocation for a fixed pairing and link vector.

allocate() finds the pair budgets by waterfilling, then splits every
budget with the closed form matching the pair's link type.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..rates.instance import NomaInstance
from ..rates.objective import PairWeights, check_binary, check_permutation
from ..utils.errors import ContractViolation
from .splits import PairSplit, SplitCase, case1_split, case2_split
from .waterfilling import PairBudget, pair_weights_for, waterfill_budgets


@dataclass(frozen=True)
class PowerSolution:
    """
    Powers of one configuration, laid out by pair (weak index i).

    p_strong[i] is the power of strong user sigma[i]'s message.
    """

    sigma: tuple[int, ...]
    p_weak: np.ndarray
    p_strong: np.ndarray
    budgets: PairBudget
    cases: tuple[SplitCase, ...]

    def __post_init__(self):
        for name in ("p_weak", "p_strong"):
            array = np.array(getattr(self, name), dtype=float)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def lam(self) -> float:
        return self.budgets.lam

    @property
    def strong_user_power(self) -> np.ndarray:
        """Power of each strong user's message, by strong index."""
        powers = np.zeros_like(self.p_strong)
        powers[list(self.sigma)] = self.p_strong
        return powers

    @property
    def total_power(self) -> float:
        return math.fsum(self.p_weak) + math.fsum(self.p_strong)

    def repaired(self, sigma) -> "PowerSolution":
        """Same per-user powers under a different pairing."""
        sigma = tuple(int(j) for j in sigma)
        p_strong = self.strong_user_power[list(sigma)]
        return PowerSolution(
            sigma=sigma,
            p_weak=self.p_weak,
            p_strong=p_strong,
            budgets=PairBudget(q=self.p_weak + p_strong, lam=self.budgets.lam),
            cases=self.cases,
        )

    def to_dict(self) -> dict:
        return {
            "budgets": self.budgets.q.tolist(),
            "lambda": self.budgets.lam,
            "p_weak": self.p_weak.tolist(),
            "p_strong": self.p_strong.tolist(),
            "cases": [case.value for case in self.cases],
        }


def _zero_budget_split(relayed: bool, psi_w: float) -> PairSplit:
    if relayed:
        return PairSplit(0.0, 0.0, 0.0, SplitCase.RELAYED_ETA1)
    if psi_w <= 0:
        return PairSplit(0.0, 0.0, 0.0, SplitCase.BLOCKED_ALL_TO_STRONG)
    return PairSplit(0.0, 0.0, 0.0, SplitCase.DIRECT_BOUNDARY)


def allocate(
    sigma,
    x,
    weights: PairWeights,
    instance: NomaInstance,
) -> PowerSolution:
    """
    Allocate the LED power for a fixed pairing and link vector.

    Args:
        sigma: Strong index paired with each weak index
        x: Link vector (1 = weak user relayed over VLC/RF)
        weights: Current fairness weights
        instance: Channel quantities of the realization

    Returns:
        PowerSolution whose powers add up to P_max

    Raises:
        ContractViolation: invalid sigma or x, or no serviceable strong user
    """
    k = instance.pair_count
    sigma = check_permutation(sigma, k)
    x = check_binary(x, k)
    if weights.pair_count != k:
        raise ContractViolation("weights do not match the pair count", pairs=k)

    b = instance.bandwidth
    psi_s_pair = instance.psi_s[sigma]
    pair_w = pair_weights_for(sigma, x, weights.weak, weights.strong, instance.psi_w)
    budgets = waterfill_budgets(pair_w, psi_s_pair, b, k, instance.p_max)

    n_relayed = int(x.sum())
    rf_rates = instance.rf_rate_matrix(n_relayed) if n_relayed else None

    splits = []
    for i in range(k):
        j = sigma[i]
        q = float(budgets.q[i])
        if q <= 0:
            splits.append(_zero_budget_split(bool(x[i]), instance.psi_w[i]))
        elif x[i] == 1:
            splits.append(case1_split(q, psi_s_pair[i], float(rf_rates[i, j]), b, k))
        else:
            splits.append(
                case2_split(
                    q,
                    psi_s_pair[i],
                    instance.psi_w[i],
                    weights.strong[j],
                    weights.weak[i],
                    b,
                    k,
                )
            )

    return PowerSolution(
        sigma=tuple(int(j) for j in sigma),
        p_weak=np.array([s.p_weak for s in splits]),
        p_strong=np.array([s.p_strong for s in splits]),
        budgets=budgets,
        cases=tuple(s.case for s in splits),
    )


def idle_allocation(sigma, instance: NomaInstance) -> PowerSolution:
    """Equal budgets split equally; used when no strong user can be served."""
    k = instance.pair_count
    sigma = check_permutation(sigma, k)
    q = np.full(k, instance.p_max / k)
    return PowerSolution(
        sigma=tuple(int(j) for j in sigma),
        p_weak=q / 2.0,
        p_strong=q / 2.0,
        budgets=PairBudget(q=q, lam=0.0),
        cases=tuple(SplitCase.DIRECT_BOUNDARY for _ in range(k)),
    )
