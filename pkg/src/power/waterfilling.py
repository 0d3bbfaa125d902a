"""
Waterfilling of the LED power budget across NOMA pairs.

Each pair gets q = [c / lambda - 1/Psi_s]^+ with c = w * B_v / (2K), and
lambda is chosen so that the budgets add up to P_max. The active set is
found by sorting the cutoffs c * Psi_s; bisection on lambda is the
fallback when floating point defeats the sorted search.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..utils.errors import ContractViolation


BISECTION_STEPS = 200


@dataclass(frozen=True)
class PairBudget:
    """Per-pair budgets q (by weak index) and the dual value lambda."""

    q: np.ndarray
    lam: float

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    @property
    def total(self) -> float:
        return math.fsum(self.q)


def pair_weights_for(
    sigma: Sequence[int],
    x: Sequence[int],
    w_weak: np.ndarray,
    w_strong: np.ndarray,
    psi_w: np.ndarray,
) -> np.ndarray:
    """
    Weight that drives each pair's budget.

    w_s for relayed pairs and for direct pairs whose weak user has no VLC
    link (all power then goes to the strong user), w_w otherwise.
    """
    sigma = np.asarray(sigma, dtype=int)
    x = np.asarray(x, dtype=int)
    to_strong = (x == 1) | (np.asarray(psi_w) <= 0)
    return np.where(to_strong, np.asarray(w_strong)[sigma], np.asarray(w_weak))


def _budgets(coeffs: np.ndarray, inv_psi: np.ndarray, lam: float) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        q = coeffs / lam - inv_psi
    return np.where(np.isfinite(q) & (q > 0), q, 0.0)


def _active_set_lambda(coeffs: np.ndarray, inv_psi: np.ndarray, cutoffs: np.ndarray, p_max: float):
    """Closed-form lambda over growing active sets, or None."""
    order = np.argsort(-cutoffs, kind="stable")
    order = order[cutoffs[order] > 0]
    coeff_sum = 0.0
    inv_sum = 0.0
    for n, idx in enumerate(order):
        coeff_sum += coeffs[idx]
        inv_sum += inv_psi[idx]
        lam = coeff_sum / (p_max + inv_sum)
        next_cutoff = cutoffs[order[n + 1]] if n + 1 < order.size else 0.0
        if cutoffs[idx] > lam >= next_cutoff:
            return lam
    return None


def _bisect_lambda(coeffs: np.ndarray, inv_psi: np.ndarray, cutoffs: np.ndarray, p_max: float) -> float:
    positive = cutoffs > 0
    lo = coeffs[positive].sum() / (p_max + inv_psi[positive].sum())
    hi = float(cutoffs.max())
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if _budgets(coeffs, inv_psi, mid).sum() > p_max:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def waterfill_budgets(
    pair_weights: Sequence[float],
    psi_s: Sequence[float],
    bandwidth: float,
    pair_count: int,
    p_max: float,
) -> PairBudget:
    """
    Split P_max across pairs by waterfilling.

    Args:
        pair_weights: Weight w of each pair (see pair_weights_for)
        psi_s: SNR coefficient of each pair's strong user
        bandwidth: VLC bandwidth B_v
        pair_count: Number of pairs K
        p_max: Total LED power budget

    Returns:
        PairBudget with sum(q) == p_max

    Raises:
        ContractViolation: no pair has a serviceable strong user, or a weight is not positive
    """
    weights = np.asarray(pair_weights, dtype=float)
    psi = np.asarray(psi_s, dtype=float)
    if weights.shape != psi.shape:
        raise ContractViolation("weights and Psi_s must align", weights=weights.shape, psi=psi.shape)
    if np.any(weights <= 0):
        raise ContractViolation("pair weights must be positive")

    coeffs = weights * bandwidth / (2.0 * pair_count)
    cutoffs = coeffs * psi
    if not np.any(cutoffs > 0):
        raise ContractViolation("no serviceable strong users", psi_s=psi.tolist())

    if p_max <= 0:
        return PairBudget(q=np.zeros_like(psi), lam=float(cutoffs.max()))

    inv_psi = np.where(psi > 0, 1.0 / np.where(psi > 0, psi, 1.0), np.inf)

    lam = _active_set_lambda(coeffs, inv_psi, cutoffs, p_max)
    if lam is None:
        lam = _bisect_lambda(coeffs, inv_psi, cutoffs, p_max)

    q = _budgets(coeffs, inv_psi, lam)
    active = q > 0
    q[active] += (p_max - math.fsum(q)) / active.sum()
    return PairBudget(q=np.maximum(q, 0.0), lam=float(lam))
