"""
Simulation package for the Co-NOMA optimizer.

Monte-Carlo sweeps over FoV, user count, blockage rate and cell radius.
"""

from .metrics import jain_index, mean_and_stderr
from .seeds import trial_seed
from .sweep import (
    PointResult,
    SweepConfig,
    SweepResult,
    SweepSimulation,
    run_sweep,
    run_trial,
)
from .output import (
    load_results_json,
    print_activity_log,
    print_performance,
    print_sweep_table,
    write_results,
)

__all__ = [
    "jain_index",
    "mean_and_stderr",
    "trial_seed",
    "PointResult",
    "SweepConfig",
    "SweepResult",
    "SweepSimulation",
    "run_sweep",
    "run_trial",
    "load_results_json",
    "print_activity_log",
    "print_performance",
    "print_sweep_table",
    "write_results",
]
