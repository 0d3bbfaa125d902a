"""
Achievable-rate expressions for Co-NOMA over hybrid VLC/RF links.

All rate functions accept scalars or numpy arrays and broadcast. Powers
are electrical drive powers (A^2); the SNR coefficient Psi absorbs every
conversion constant, so the VLC SINR of a message with power P is
Psi * P (over 1 + Psi * interference).
"""

import numpy as np

from ..utils.errors import ContractViolation
from .constants import PhyConstants


def p_max(bias_high: float, bias_low: float) -> float:
    """Maximum LED drive power ((I_H - I_L) / 2)^2 at the mid-range DC bias."""
    return ((bias_high - bias_low) / 2.0) ** 2


def harvested_power(h, consts: PhyConstants):
    """
    Power harvested from the received DC component.

    f * rho * nu * V_t * h * b * ln(1 + rho * h * nu * b / I_0). With equal
    charge and discharge slots this is also the RF relaying power.
    """
    h = np.asarray(h, dtype=float)
    b = consts.dc_bias
    current = consts.responsivity * h * consts.conversion_factor * b
    return (
        consts.fill_factor
        * consts.thermal_voltage
        * current
        * np.log1p(current / consts.dark_current)
    )


def snr_coefficient(h, consts: PhyConstants):
    """Psi = nu^2 rho^2 h^2 K / (B_v N_v)."""
    h = np.asarray(h, dtype=float)
    scale = (consts.conversion_factor * consts.responsivity) ** 2 * consts.pair_count
    return scale * h**2 / (consts.vlc_bandwidth * consts.vlc_noise_psd)


def _prelog(bandwidth: float, pair_count: int) -> float:
    return bandwidth / (2.0 * pair_count)


def rate_strong(p_s, psi_s, bandwidth: float, pair_count: int):
    """Strong user's own message after SIC: (B_v/2K) log2(1 + Psi_s P_s)."""
    return _prelog(bandwidth, pair_count) * np.log2(1.0 + np.asarray(psi_s) * np.asarray(p_s))


def rate_weak_at_strong(p_w, p_s, psi_s, bandwidth: float, pair_count: int):
    """Weak user's message as decoded by the strong user (first SIC stage)."""
    psi_s = np.asarray(psi_s, dtype=float)
    sinr = psi_s * np.asarray(p_w) / (1.0 + psi_s * np.asarray(p_s))
    return _prelog(bandwidth, pair_count) * np.log2(1.0 + sinr)


def rate_weak_direct(p_w, p_s, psi_w, bandwidth: float, pair_count: int):
    """Weak user's message over its own VLC link, strong message as interference."""
    psi_w = np.asarray(psi_w, dtype=float)
    sinr = psi_w * np.asarray(p_w) / (1.0 + psi_w * np.asarray(p_s))
    return _prelog(bandwidth, pair_count) * np.log2(1.0 + sinr)


def rate_rf(gain, p_rf, rf_bandwidth: float, rf_noise_psd: float, n_relayed: int):
    """
    RF hop rate with the RF band split equally among N_f relayed users.

    (B_f / 2N_f) log2(1 + G P_RF / ((B_f / N_f) N_RF))
    """
    if n_relayed < 1:
        raise ContractViolation("RF rate needs at least one relayed user", n_relayed=n_relayed)
    share = rf_bandwidth / n_relayed
    snr = np.asarray(gain) * np.asarray(p_rf) / (share * rf_noise_psd)
    return share / 2.0 * np.log2(1.0 + snr)


def rate_relayed(p_w, p_s, psi_s, rf_rate, bandwidth: float, pair_count: int):
    """Dual-hop rate: min of the RF hop and the first-hop SIC decoding rate."""
    return np.minimum(rf_rate, rate_weak_at_strong(p_w, p_s, psi_s, bandwidth, pair_count))
