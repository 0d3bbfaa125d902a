"""
Per-trial seed derivation.
"""

import numpy as np


def trial_seed(master_seed: int, axis_index: int, trial_index: int) -> int:
    """
    Stable 64-bit seed for one trial.

    Depends only on (master seed, axis index, trial index), so adding
    axis points or trials leaves existing trials untouched.
    """
    sequence = np.random.SeedSequence([int(master_seed), int(axis_index), int(trial_index)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
