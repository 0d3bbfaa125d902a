"""
Solvers: user classification, the cooperative NOMA iteration, the
NOMA and opposite-rank baselines, exhaustive search and fairness weights.
"""

from .algorithms import (
    SOLVERS,
    baseline2_pairing,
    baseline2_solve,
    co_noma_solve,
    exhaustive_solve,
    noma_solve,
    solve,
    solve_with_fairness,
)
from .classify import build_instance, classify_users
from .report import Method, SolveReport, SolverOptions
from .weights import WeightSet, update_weights

__all__ = [
    "SOLVERS",
    "baseline2_pairing",
    "baseline2_solve",
    "co_noma_solve",
    "exhaustive_solve",
    "noma_solve",
    "solve",
    "solve_with_fairness",
    "build_instance",
    "classify_users",
    "Method",
    "SolveReport",
    "SolverOptions",
    "WeightSet",
    "update_weights",
]
