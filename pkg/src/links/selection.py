"""
Link selection: which weak users are relayed over the strong user's
VLC/RF hop instead of their own direct VLC link.

For a fixed number of relayed users k, the weighted objective is the
all-direct objective plus the sum of the selected entries of row k of the
S matrix, so the top-k entries of row k give the best vector with k ones.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..power.allocator import PowerSolution, allocate
from ..rates.instance import NomaInstance
from ..rates.objective import PairWeights, check_binary, check_permutation, objective_value
from ..rates.rates import rate_relayed, rate_weak_direct
from ..utils.errors import ContractViolation


@dataclass(frozen=True)
class LinkSelection:
    """Binary vector x over weak users; 1 = relayed over VLC/RF."""

    x: tuple[int, ...]

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        if any(v not in (0, 1) for v in x):
            raise ContractViolation("link vector must be binary", x=list(x))
        object.__setattr__(self, "x", x)

    @classmethod
    def direct(cls, pair_count: int) -> "LinkSelection":
        return cls((0,) * pair_count)

    @property
    def n_relayed(self) -> int:
        return sum(self.x)

    def __len__(self) -> int:
        return len(self.x)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.x, dtype=dtype if dtype is not None else int)


def build_s_matrix(
    pairing: Sequence[int],
    power: PowerSolution,
    weights: PairWeights,
    instance: NomaInstance,
) -> np.ndarray:
    """
    Relayed-minus-direct weighted rate gains.

    Row k - 1 holds w_w[i] * (min(R_RF(i, sigma(i); N_f = k), R_{j->i}) - R_DL)
    for every weak user i.
    """
    k = instance.pair_count
    b = instance.bandwidth
    sigma = check_permutation(pairing, k)
    p_weak = power.p_weak
    p_s_pair = power.strong_user_power[sigma]

    psi_s_pair = instance.psi_s[sigma]
    direct = rate_weak_direct(p_weak, p_s_pair, instance.psi_w, b, k)

    rows = np.empty((k, k))
    for n_relayed in range(1, k + 1):
        rf = instance.rf_rate_matrix(n_relayed)[np.arange(k), sigma]
        relayed = rate_relayed(p_weak, p_s_pair, psi_s_pair, rf, b, k)
        rows[n_relayed - 1] = weights.weak * (relayed - direct)
    return rows


def candidate_vectors(s_matrix: np.ndarray) -> list[np.ndarray]:
    """All-direct vector, then the top-k entries of row k for k = 1..K."""
    k = s_matrix.shape[0]
    candidates = [np.zeros(k, dtype=int)]
    for n_relayed in range(1, k + 1):
        order = np.argsort(-s_matrix[n_relayed - 1], kind="stable")
        x = np.zeros(k, dtype=int)
        x[order[:n_relayed]] = 1
        candidates.append(x)
    return candidates


def select_links(
    s_matrix: np.ndarray,
    pairing: Sequence[int],
    power: PowerSolution,
    weights: PairWeights,
    instance: NomaInstance,
    reallocate: bool = False,
    extra: Iterable[Sequence[int]] = (),
) -> LinkSelection:
    """
    Best link vector among the S-matrix candidates.

    Each of the K + 1 candidates, plus any `extra` vectors, is scored with
    the full weighted objective; ties go to the candidate with fewer
    relayed links. With `reallocate`, every candidate is scored with its
    own closed-form power allocation instead of the fixed `power`, so a
    blocked weak user (zero power while direct) can still be switched to
    its relay.
    """
    k = instance.pair_count
    s_matrix = np.asarray(s_matrix, dtype=float)
    if s_matrix.shape != (k, k):
        raise ContractViolation("S matrix must be K x K", shape=s_matrix.shape, pairs=k)
    sigma = check_permutation(pairing, k)

    candidates: list[tuple[int, ...]] = []
    for x in [*candidate_vectors(s_matrix), *extra]:
        key = tuple(int(v) for v in check_binary(x, k))
        if key not in candidates:
            candidates.append(key)

    best_x, best_value = None, -np.inf
    for x in candidates:
        x_arr = np.array(x, dtype=int)
        scored = allocate(sigma, x_arr, weights, instance) if reallocate else power
        value = objective_value(
            sigma, x_arr, scored.p_weak, scored.strong_user_power, weights, instance
        )
        if value > best_value or (value == best_value and sum(x) < sum(best_x)):
            best_x, best_value = x, value
    return LinkSelection(best_x)
