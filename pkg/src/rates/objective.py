"""
Per-user rates and the weighted sum-rate objective for a configuration
(pairing sigma, link vector x, powers).

Pairs are indexed by weak index i; sigma[i] is the strong index paired
with weak user i.
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from ..utils.errors import ContractViolation
from .instance import NomaInstance
from .rates import rate_relayed, rate_strong, rate_weak_direct

if TYPE_CHECKING:
    from ..links.selection import LinkSelection
    from ..pairing.matrix import PairingMatrix
    from ..power.allocator import PowerSolution


@dataclass(frozen=True)
class PairWeights:
    """Proportional-fairness weights w_w[i] and w_s[j]."""

    weak: np.ndarray
    strong: np.ndarray

    def __post_init__(self):
        weak = np.array(self.weak, dtype=float)
        strong = np.array(self.strong, dtype=float)
        if weak.shape != strong.shape or weak.ndim != 1:
            raise ContractViolation("weight vectors must be 1-D and equally long")
        if not (np.all(np.isfinite(weak)) and np.all(np.isfinite(strong))):
            raise ContractViolation("weights must be finite")
        if np.any(weak <= 0) or np.any(strong <= 0):
            raise ContractViolation("weights must be positive")
        weak.setflags(write=False)
        strong.setflags(write=False)
        object.__setattr__(self, "weak", weak)
        object.__setattr__(self, "strong", strong)

    @classmethod
    def uniform(cls, pair_count: int) -> "PairWeights":
        return cls(weak=np.ones(pair_count), strong=np.ones(pair_count))

    @property
    def pair_count(self) -> int:
        return int(self.weak.size)


@dataclass(frozen=True)
class RateReport:
    """Rates of one configuration; strong_rates by j, weak_rates and pair_sums by i."""

    strong_rates: np.ndarray
    weak_rates: np.ndarray
    pair_sums: np.ndarray
    weighted: float

    @property
    def sum_rate(self) -> float:
        return math.fsum(self.strong_rates) + math.fsum(self.weak_rates)

    def user_rates(self, instance: NomaInstance) -> np.ndarray:
        """Rates laid out by user id."""
        rates = np.zeros(instance.num_users)
        rates[instance.user_ids()] = np.concatenate([self.strong_rates, self.weak_rates])
        return rates


def check_permutation(sigma: Sequence[int], pair_count: int) -> np.ndarray:
    """Validate sigma as a bijection on range(pair_count)."""
    sigma = np.asarray(sigma)
    if sigma.shape != (pair_count,) or sorted(sigma.tolist()) != list(range(pair_count)):
        raise ContractViolation(
            "pairing is not a permutation", sigma=sigma.tolist(), pairs=pair_count
        )
    return sigma.astype(int)


def check_binary(x: Sequence[int], pair_count: int) -> np.ndarray:
    """Validate x as a binary vector of length pair_count."""
    x = np.asarray(x)
    if x.shape != (pair_count,) or not np.all((x == 0) | (x == 1)):
        raise ContractViolation("link vector must be binary", x=x.tolist(), pairs=pair_count)
    return x.astype(int)


def pair_rates(
    sigma: np.ndarray,
    x: np.ndarray,
    p_weak: np.ndarray,
    p_strong_user: np.ndarray,
    instance: NomaInstance,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Rates for fixed per-user powers.

    Args:
        sigma: Strong index paired with each weak index
        x: Link vector (1 = relayed over VLC/RF)
        p_weak: Power of each weak user's message, by weak index
        p_strong_user: Power of each strong user's message, by strong index
        instance: Channel quantities

    Returns:
        (strong rates by strong index, weak rates by weak index)
    """
    b, k = instance.bandwidth, instance.pair_count
    p_s_pair = p_strong_user[sigma]
    psi_s_pair = instance.psi_s[sigma]

    strong_rates = rate_strong(p_strong_user, instance.psi_s, b, k)
    direct = rate_weak_direct(p_weak, p_s_pair, instance.psi_w, b, k)

    n_relayed = int(x.sum())
    if n_relayed == 0:
        return strong_rates, direct

    rf = instance.rf_rate_matrix(n_relayed)[np.arange(k), sigma]
    relayed = rate_relayed(p_weak, p_s_pair, psi_s_pair, rf, b, k)
    return strong_rates, np.where(x == 1, relayed, direct)


def objective_value(
    sigma: np.ndarray,
    x: np.ndarray,
    p_weak: np.ndarray,
    p_strong_user: np.ndarray,
    weights: PairWeights,
    instance: NomaInstance,
) -> float:
    """Weighted sum-rate for already validated inputs."""
    strong_rates, weak_rates = pair_rates(sigma, x, p_weak, p_strong_user, instance)
    return math.fsum(weights.strong * strong_rates) + math.fsum(weights.weak * weak_rates)


def weighted_objective(
    pairing: "PairingMatrix | Sequence[int]",
    links: "LinkSelection | Sequence[int]",
    power: "PowerSolution",
    weights: PairWeights,
    instance: NomaInstance,
) -> RateReport:
    """
    Weighted sum-rate of a configuration, with N_f = sum(x) in the RF rates.

    Raises:
        ContractViolation: pairing, link vector or weights do not fit the instance
    """
    k = instance.pair_count
    sigma = check_permutation(pairing, k)
    x = check_binary(links, k)
    if weights.pair_count != k:
        raise ContractViolation("weights do not match the pair count", pairs=k)

    p_weak = np.asarray(power.p_weak, dtype=float)
    p_strong_user = np.asarray(power.strong_user_power, dtype=float)
    strong_rates, weak_rates = pair_rates(sigma, x, p_weak, p_strong_user, instance)
    weighted = math.fsum(weights.strong * strong_rates) + math.fsum(weights.weak * weak_rates)
    return RateReport(
        strong_rates=strong_rates,
        weak_rates=weak_rates,
        pair_sums=strong_rates[sigma] + weak_rates,
        weighted=weighted,
    )
