"""
Closed-form power splits inside one NOMA pair.

Relayed pairs (case 1) use the equal-rate split eta_1, or eta_2 when the
RF hop caps the weak user's rate. Direct pairs (case 2) use the interior
root Omega of the pair objective when it is valid, and otherwise the best
of the boundary candidates.
"""

import math
from enum import Enum
from typing import NamedTuple

from ..rates.rates import rate_strong, rate_weak_at_strong, rate_weak_direct
from ..utils.errors import ContractViolation
from ..utils.logger import get_logger


logger = get_logger("power")


class SplitCase(str, Enum):
    """How a pair's budget was split."""

    RELAYED_ETA1 = "relayed-eta1"
    RELAYED_ETA2 = "relayed-eta2"
    DIRECT_OMEGA = "direct-omega"
    DIRECT_BOUNDARY = "direct-boundary"
    BLOCKED_ALL_TO_STRONG = "blocked-all-to-strong"


class PairSplit(NamedTuple):
    p_strong: float
    p_weak: float
    weak_rate: float
    case: SplitCase


def eta_one(q: float, psi_s: float) -> float:
    """Equal-rate strong power (-1 + sqrt(1 + q Psi_s)) / Psi_s."""
    # Rationalized form avoids cancellation for small q * Psi_s
    return q / (1.0 + math.sqrt(1.0 + q * psi_s))


def eta_two(q: float, psi_s: float, rf_rate: float, bandwidth: float, pair_count: int) -> float:
    """Strong power at which the first-hop weak rate equals rf_rate."""
    a = 2.0 ** (2.0 * rf_rate * pair_count / bandwidth)
    return (q * psi_s + 1.0 - a) / (a * psi_s)


def _clamp_to_sic(p_strong: float, q: float) -> float:
    """Clamp P_s into [0, q/2] so that P_s <= P_w."""
    clamped = min(max(p_strong, 0.0), q / 2.0)
    if clamped != p_strong:
        logger.warning(
            "SPLIT_CLAMPED",
            f"strong power {p_strong:.6g} clamped to {clamped:.6g} (budget {q:.6g})",
            p_strong=p_strong,
            budget=q,
        )
    return clamped


def case1_split(
    q: float,
    psi_s: float,
    rf_rate: float,
    bandwidth: float,
    pair_count: int,
) -> PairSplit:
    """
    Split a relayed pair's budget.

    Args:
        q: Pair budget
        psi_s: SNR coefficient of the strong (relaying) user, > 0
        rf_rate: RF hop rate R_RF of the weak user (may be inf)
        bandwidth: VLC bandwidth B_v
        pair_count: Number of pairs K

    Returns:
        PairSplit with the achieved relayed rate min(R_RF, R_{j->i})

    Raises:
        ContractViolation: psi_s == 0 (strong users always see the AP)
    """
    if psi_s <= 0:
        raise ContractViolation("relayed pair has a blocked strong user", psi_s=psi_s)
    if q <= 0:
        return PairSplit(0.0, 0.0, 0.0, SplitCase.RELAYED_ETA1)

    equal_rate = bandwidth / (4.0 * pair_count) * math.log2(1.0 + q * psi_s)
    if equal_rate <= rf_rate:
        p_strong = _clamp_to_sic(eta_one(q, psi_s), q)
        case = SplitCase.RELAYED_ETA1
    else:
        p_strong = _clamp_to_sic(eta_two(q, psi_s, rf_rate, bandwidth, pair_count), q)
        case = SplitCase.RELAYED_ETA2

    p_weak = q - p_strong
    first_hop = float(rate_weak_at_strong(p_weak, p_strong, psi_s, bandwidth, pair_count))
    return PairSplit(p_strong, p_weak, min(rf_rate, first_hop), case)


def omega_root(psi_s: float, psi_w: float, w_s: float, w_w: float) -> float:
    """Stationary point of the direct-pair objective; inf when w_s == w_w."""
    if w_s == w_w:
        return math.inf
    return (w_w * psi_w - w_s * psi_s) / (psi_s * psi_w * (w_s - w_w))


def direct_pair_objective(
    p_strong: float,
    q: float,
    psi_s: float,
    psi_w: float,
    w_s: float,
    w_w: float,
    bandwidth: float,
    pair_count: int,
) -> float:
    """w_s R_s + w_w R_DL of a direct pair at a given split."""
    r_s = rate_strong(p_strong, psi_s, bandwidth, pair_count)
    r_w = rate_weak_direct(q - p_strong, p_strong, psi_w, bandwidth, pair_count)
    return float(w_s * r_s + w_w * r_w)


def case2_split(
    q: float,
    psi_s: float,
    psi_w: float,
    w_s: float,
    w_w: float,
    bandwidth: float,
    pair_count: int,
) -> PairSplit:
    """
    Split a direct pair's budget.

    A weak user without a VLC link (psi_w == 0) gets nothing and the
    whole budget goes to the strong user.
    """
    if psi_w <= 0:
        return PairSplit(q, 0.0, 0.0, SplitCase.BLOCKED_ALL_TO_STRONG)
    if q <= 0:
        return PairSplit(0.0, 0.0, 0.0, SplitCase.DIRECT_BOUNDARY)
    if psi_s <= 0:
        raise ContractViolation("direct pair has a blocked strong user", psi_s=psi_s)

    omega = omega_root(psi_s, psi_w, w_s, w_w)
    valid = (
        math.isfinite(omega)
        and w_w / w_s < psi_s / psi_w
        and omega > 0
        and q > 2.0 * omega
    )
    if valid:
        p_strong = omega
        case = SplitCase.DIRECT_OMEGA
    else:
        candidates = [0.0, q / 2.0]
        if math.isfinite(omega):
            candidates.append(min(max(omega, 0.0), q / 2.0))
        values = [
            direct_pair_objective(p, q, psi_s, psi_w, w_s, w_w, bandwidth, pair_count)
            for p in candidates
        ]
        best = max(range(len(candidates)), key=lambda n: (values[n], -n))
        p_strong = candidates[best]
        case = SplitCase.DIRECT_BOUNDARY

    p_weak = q - p_strong
    weak_rate = float(rate_weak_direct(p_weak, p_strong, psi_w, bandwidth, pair_count))
    return PairSplit(p_strong, p_weak, weak_rate, case)
