"""
Strong/weak pairing for fixed powers and links.

Builds the pair-utility matrix and solves the linear assignment with
scipy's Hungarian-type solver. Among optimal permutations the
lexicographically smallest sigma is returned.
"""

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..power.allocator import PowerSolution
from ..rates.instance import NomaInstance
from ..rates.objective import PairWeights, check_binary
from ..rates.rates import rate_relayed, rate_strong, rate_weak_direct
from ..utils.errors import ContractViolation
from .matrix import PairingMatrix


def build_utility_matrix(
    power: PowerSolution,
    x,
    weights: PairWeights,
    instance: NomaInstance,
) -> np.ndarray:
    """
    U[i, j]: weighted rate contribution if weak i were paired with strong j.

    Args:
        power: Fixed per-user powers (the current pairing is ignored)
        x: Fixed link vector; N_f = sum(x)
        weights: Fairness weights
        instance: Channel quantities

    Returns:
        K x K utility matrix
    """
    k = instance.pair_count
    b = instance.bandwidth
    x = check_binary(x, k)
    p_strong_user = power.strong_user_power
    p_w = power.p_weak[:, np.newaxis]
    p_s = p_strong_user[np.newaxis, :]
    psi_s = instance.psi_s[np.newaxis, :]
    psi_w = instance.psi_w[:, np.newaxis]

    strong_term = weights.strong * rate_strong(p_strong_user, instance.psi_s, b, k)
    direct = rate_weak_direct(p_w, p_s, psi_w, b, k)

    n_relayed = int(x.sum())
    if n_relayed:
        relayed = rate_relayed(p_w, p_s, psi_s, instance.rf_rate_matrix(n_relayed), b, k)
        weak_rate = np.where(x[:, np.newaxis] == 1, relayed, direct)
    else:
        weak_rate = direct

    return strong_term[np.newaxis, :] + weights.weak[:, np.newaxis] * weak_rate


def _best_total(utility: np.ndarray) -> float:
    if utility.size == 0:
        return 0.0
    # Maximization as a cost problem: row maximum minus utility
    cost = utility.max(axis=1, keepdims=True) - utility
    rows, cols = linear_sum_assignment(cost)
    return float(utility[rows, cols].sum())


def hungarian_solve(utility) -> PairingMatrix:
    """
    Permutation maximizing sum_i U[i, sigma(i)].

    Raises:
        ContractViolation: U is not square or has non-finite entries
    """
    utility = np.asarray(utility, dtype=float)
    if utility.ndim != 2 or utility.shape[0] != utility.shape[1]:
        raise ContractViolation("utility matrix must be square", shape=utility.shape)
    if not np.all(np.isfinite(utility)):
        raise ContractViolation("utility matrix must be finite")

    k = utility.shape[0]
    optimum = _best_total(utility)
    tol = 1e-12 * max(1.0, float(np.abs(utility).sum()))

    # Fix rows one at a time to the smallest column that still reaches the optimum
    sigma: list[int] = []
    free_cols = list(range(k))
    fixed_total = 0.0
    for row in range(k):
        for col in free_cols:
            rest_cols = [c for c in free_cols if c != col]
            rest = utility[np.ix_(range(row + 1, k), rest_cols)]
            total = fixed_total + utility[row, col] + _best_total(rest)
            if total >= optimum - tol:
                sigma.append(col)
                fixed_total += utility[row, col]
                free_cols = rest_cols
                break
        else:
            # Rounding pushed every completion below the optimum; fall back to the solver's choice
            rows, cols = linear_sum_assignment(-utility)
            return PairingMatrix(tuple(int(c) for c in cols[np.argsort(rows)]))

    return PairingMatrix(tuple(sigma))
