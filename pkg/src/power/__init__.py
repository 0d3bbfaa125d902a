"""
Power allocation: closed-form pair splits, waterfilling and the
allocation routine that combines them.
"""

from .allocator import PowerSolution, allocate, idle_allocation
from .splits import (
    PairSplit,
    SplitCase,
    case1_split,
    case2_split,
    direct_pair_objective,
    eta_one,
    eta_two,
    omega_root,
)
from .waterfilling import PairBudget, pair_weights_for, waterfill_budgets

__all__ = [
    "PowerSolution",
    "allocate",
    "idle_allocation",
    "PairSplit",
    "SplitCase",
    "case1_split",
    "case2_split",
    "direct_pair_objective",
    "eta_one",
    "eta_two",
    "omega_root",
    "PairBudget",
    "pair_weights_for",
    "waterfill_budgets",
]
