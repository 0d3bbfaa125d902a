"""
Indoor RF channel between two users.

Two-slope path loss: free-space loss up to the breakpoint distance, then
35 dB/decade beyond it, with optional log-normal shadowing whose spread
depends on the side of the breakpoint.
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..utils.logger import get_logger
from .params import SPEED_OF_LIGHT, RfParams


MIN_RF_DISTANCE = 0.1
SLOPE_AFTER_BREAKPOINT_DB = 35.0

logger = get_logger("channel")


def free_space_loss_db(distance: float, carrier_frequency: float) -> float:
    """Friis free-space loss 20*log10(4*pi*d*f_c/c) in dB."""
    return 20.0 * math.log10(4.0 * math.pi * distance * carrier_frequency / SPEED_OF_LIGHT)


def path_loss_db(
    distance: float,
    rf: RfParams,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Two-slope indoor path loss in dB.

    Args:
        distance: Link distance in metres (> 0)
        rf: RF parameters
        rng: Generator for shadowing draws; shadowing is applied only when
            rf.shadowing is set and a generator is given

    Returns:
        Path loss L(d) in dB
    """
    d_bp = rf.breakpoint_distance
    if distance <= d_bp:
        loss = free_space_loss_db(distance, rf.carrier_frequency)
        sigma = rf.shadow_sigma_before
    else:
        loss = free_space_loss_db(d_bp, rf.carrier_frequency)
        loss += SLOPE_AFTER_BREAKPOINT_DB * math.log10(distance / d_bp)
        sigma = rf.shadow_sigma_after

    if rf.shadowing and rng is not None and sigma > 0:
        loss += float(rng.normal(0.0, sigma))
    return loss


def rf_channel_gain(
    pos_i: Sequence[float],
    pos_j: Sequence[float],
    rf: RfParams,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    RF power gain G = |H|^2 * 10^(-L(d)/10) between two users.

    Distances below 0.1 m are clamped to 0.1 m.
    """
    distance = float(np.linalg.norm(np.asarray(pos_i, dtype=float) - np.asarray(pos_j, dtype=float)))
    if distance < MIN_RF_DISTANCE:
        logger.warning(
            "RF_DISTANCE_CLAMPED",
            f"RF distance {distance:.3g} m clamped to {MIN_RF_DISTANCE} m",
            distance=distance,
        )
        distance = MIN_RF_DISTANCE
    return rf.multipath_gain * 10.0 ** (-path_loss_db(distance, rf, rng) / 10.0)
