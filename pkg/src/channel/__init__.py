"""
Geometry and channel models: Lambertian VLC with FoV cutoff and
blockage, two-slope indoor RF, and scenario sampling.
"""

from .params import (
    SPEED_OF_LIGHT,
    ChannelState,
    RfParams,
    Scenario,
    ScenarioConfig,
    UserPlacement,
    VlcParams,
    dbm_per_hz_to_watts,
)
from .rf import MIN_RF_DISTANCE, free_space_loss_db, path_loss_db, rf_channel_gain
from .scenario import sample_scenario
from .vlc import concentrator_gain, incidence_angle, lambertian_order, vlc_channel_gain

__all__ = [
    "SPEED_OF_LIGHT",
    "ChannelState",
    "RfParams",
    "Scenario",
    "ScenarioConfig",
    "UserPlacement",
    "VlcParams",
    "dbm_per_hz_to_watts",
    "MIN_RF_DISTANCE",
    "free_space_loss_db",
    "path_loss_db",
    "rf_channel_gain",
    "sample_scenario",
    "concentrator_gain",
    "incidence_angle",
    "lambertian_order",
    "vlc_channel_gain",
]
