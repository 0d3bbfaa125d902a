"""
Strong/weak user classification.
"""

import numpy as np

from ..channel.params import ChannelState, RfParams
from ..rates.constants import PhyConstants
from ..rates.instance import NomaInstance
from ..utils.errors import ContractViolation


def classify_users(channels: ChannelState) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Split users by VLC gain: the upper half is strong, the lower half weak.

    Both lists are ordered by descending h, ties by user id.

    Raises:
        ContractViolation: odd user count (append the virtual user first)
    """
    n = channels.num_users
    if n == 0 or n % 2:
        raise ContractViolation("user count must be even and non-zero", users=n)
    order = np.argsort(-channels.h, kind="stable")
    half = n // 2
    return tuple(int(u) for u in order[:half]), tuple(int(u) for u in order[half:])


def build_instance(
    channels: ChannelState,
    consts: PhyConstants,
    rf: RfParams,
) -> NomaInstance:
    """Classify users and derive the per-pair channel quantities."""
    strong, weak = classify_users(channels)
    return NomaInstance.from_channels(channels, strong, weak, consts, rf)
