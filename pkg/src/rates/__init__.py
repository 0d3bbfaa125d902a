"""
Rate model: SNR coefficients, harvested relay power, VLC/RF/relayed rates
and the weighted sum-rate objective.
"""

from .constants import PhyConstants
from .instance import NomaInstance
from .objective import (
    PairWeights,
    RateReport,
    check_binary,
    check_permutation,
    objective_value,
    pair_rates,
    weighted_objective,
)
from .rates import (
    harvested_power,
    p_max,
    rate_relayed,
    rate_rf,
    rate_strong,
    rate_weak_at_strong,
    rate_weak_direct,
    snr_coefficient,
)

__all__ = [
    "PhyConstants",
    "NomaInstance",
    "PairWeights",
    "RateReport",
    "check_binary",
    "check_permutation",
    "objective_value",
    "pair_rates",
    "weighted_objective",
    "harvested_power",
    "p_max",
    "rate_relayed",
    "rate_rf",
    "rate_strong",
    "rate_weak_at_strong",
    "rate_weak_direct",
    "snr_coefficient",
]
