"""
Per-realization NOMA instance: the classified users and every channel
quantity the optimizers need, indexed by weak index i and strong index j.
"""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..channel.params import ChannelState, RfParams
from ..utils.errors import ContractViolation
from .constants import PhyConstants
from .rates import harvested_power, p_max, rate_rf, snr_coefficient


def _readonly(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class NomaInstance:
    """
    K strong and K weak users of one realization.

    strong[j] and weak[i] are user ids into the ChannelState. g_rf[i, j]
    is the RF power gain between weak user i and strong user j, and
    rf_power[j] is what strong user j harvests for relaying.
    """

    strong: tuple[int, ...]
    weak: tuple[int, ...]
    h_strong: np.ndarray
    h_weak: np.ndarray
    psi_s: np.ndarray
    psi_w: np.ndarray
    rf_power: np.ndarray
    g_rf: np.ndarray
    consts: PhyConstants
    rf: RfParams
    _rf_rates: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        k = len(self.strong)
        if k == 0 or len(self.weak) != k:
            raise ContractViolation(
                "strong and weak sets must be non-empty and of equal size",
                strong=len(self.strong),
                weak=len(self.weak),
            )
        for name in ("h_strong", "h_weak", "psi_s", "psi_w", "rf_power", "g_rf"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))
        if self.g_rf.shape != (k, k):
            raise ContractViolation("g_rf must be K x K", shape=self.g_rf.shape, pairs=k)
        if self.consts.pair_count != k:
            raise ContractViolation(
                "constants carry a different pair count",
                pair_count=self.consts.pair_count,
                pairs=k,
            )

    @classmethod
    def from_channels(
        cls,
        channels: ChannelState,
        strong: Sequence[int],
        weak: Sequence[int],
        consts: PhyConstants,
        rf: RfParams,
    ) -> "NomaInstance":
        """Derive Psi, harvested power and the weak x strong RF gains."""
        strong = tuple(int(j) for j in strong)
        weak = tuple(int(i) for i in weak)
        consts = consts.with_pairs(len(strong))
        h_strong = channels.h[list(strong)]
        h_weak = channels.h[list(weak)]
        return cls(
            strong=strong,
            weak=weak,
            h_strong=h_strong,
            h_weak=h_weak,
            psi_s=snr_coefficient(h_strong, consts),
            psi_w=snr_coefficient(h_weak, consts),
            rf_power=harvested_power(h_strong, consts),
            g_rf=channels.g_rf[np.ix_(list(weak), list(strong))],
            consts=consts,
            rf=rf,
        )

    @property
    def pair_count(self) -> int:
        return len(self.strong)

    @property
    def num_users(self) -> int:
        return 2 * len(self.strong)

    @property
    def bandwidth(self) -> float:
        return self.consts.vlc_bandwidth

    @property
    def p_max(self) -> float:
        return p_max(self.consts.bias_high, self.consts.bias_low)

    @property
    def serviceable(self) -> bool:
        """True when at least one strong user has a usable VLC link."""
        return bool(np.any(self.psi_s > 0))

    def rf_rate_matrix(self, n_relayed: int) -> np.ndarray:
        """R_RF[i, j] for weak i relayed by strong j with N_f relayed users."""
        if n_relayed not in self._rf_rates:
            rates = rate_rf(
                self.g_rf,
                self.rf_power[np.newaxis, :],
                self.rf.bandwidth,
                self.rf.noise_psd,
                n_relayed,
            )
            rates.setflags(write=False)
            self._rf_rates[n_relayed] = rates
        return self._rf_rates[n_relayed]

    def user_ids(self) -> np.ndarray:
        """User ids ordered as strong 0..K-1 followed by weak 0..K-1."""
        return np.array(self.strong + self.weak, dtype=int)
