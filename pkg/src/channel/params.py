"""
Geometry and channel parameter types.

Defaults describe one indoor attocell: a ceiling LED at 3 m,
receivers at 0.85 m, 2.4 GHz RF with a 5 m breakpoint.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..utils.errors import DomainError


SPEED_OF_LIGHT = 299_792_458.0


def dbm_per_hz_to_watts(dbm_per_hz: float) -> float:
    """Convert a noise PSD in dBm/Hz to W/Hz."""
    return 10.0 ** ((dbm_per_hz - 30.0) / 10.0)


def _frozen_array(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class VlcParams:
    """Optical front-end and geometry of the single VLC access point."""

    photodetector_area: float = 1e-4
    half_intensity_angle: float = 60.0
    optical_filter_gain: float = 1.0
    refractive_index: float = 1.5
    fov_semiangle: float = 50.0
    user_height: float = 0.85
    led_height: float = 3.0
    ap_position: Optional[tuple[float, float, float]] = None

    def __post_init__(self):
        if self.ap_position is None:
            object.__setattr__(self, "ap_position", (0.0, 0.0, float(self.led_height)))
        else:
            object.__setattr__(self, "ap_position", tuple(float(v) for v in self.ap_position))

        if self.photodetector_area <= 0:
            raise DomainError("photodetector area must be positive", value=self.photodetector_area)
        if not 0 < self.half_intensity_angle < 90:
            raise DomainError(
                "half-intensity angle must lie in (0, 90) degrees",
                value=self.half_intensity_angle,
            )
        if not 0 < self.fov_semiangle <= 90:
            raise DomainError("FoV semi-angle must lie in (0, 90] degrees", value=self.fov_semiangle)
        if self.refractive_index < 1:
            raise DomainError("refractive index must be >= 1", value=self.refractive_index)
        if self.led_height <= self.user_height:
            raise DomainError(
                "LED must be mounted above the receivers",
                led_height=self.led_height,
                user_height=self.user_height,
            )
        if not math.isclose(self.ap_position[2], self.led_height):
            raise DomainError(
                "AP height must equal the LED height",
                ap_position=self.ap_position,
                led_height=self.led_height,
            )


@dataclass(frozen=True)
class RfParams:
    """Indoor RF link between paired users."""

    carrier_frequency: float = 2.4e9
    breakpoint_distance: float = 5.0
    shadow_sigma_before: float = 3.0
    shadow_sigma_after: float = 5.0
    bandwidth: float = 16e6
    noise_psd: float = field(default_factory=lambda: dbm_per_hz_to_watts(-174.0))
    multipath_gain: float = 1.0
    shadowing: bool = False

    def __post_init__(self):
        if self.breakpoint_distance <= 0:
            raise DomainError("breakpoint distance must be positive", value=self.breakpoint_distance)
        if self.bandwidth <= 0:
            raise DomainError("RF bandwidth must be positive", value=self.bandwidth)
        if self.carrier_frequency <= 0:
            raise DomainError("carrier frequency must be positive", value=self.carrier_frequency)
        if self.shadow_sigma_before < 0 or self.shadow_sigma_after < 0:
            raise DomainError(
                "shadowing standard deviations must be non-negative",
                before=self.shadow_sigma_before,
                after=self.shadow_sigma_after,
            )
        if self.noise_psd <= 0 or self.multipath_gain < 0:
            raise DomainError(
                "noise PSD must be positive and multipath gain non-negative",
                noise_psd=self.noise_psd,
                multipath_gain=self.multipath_gain,
            )


@dataclass(frozen=True)
class UserPlacement:
    """One receiver: 3D position and whether its LoS path is blocked."""

    position: tuple[float, float, float]
    blocked: bool = False
    virtual: bool = False


@dataclass(frozen=True)
class ScenarioConfig:
    """Inputs for drawing one user realization."""

    vlc: VlcParams = field(default_factory=VlcParams)
    rf: RfParams = field(default_factory=RfParams)
    cell_radius: float = 2.5
    num_users: int = 6
    blockage_rate: float = 0.1

    def __post_init__(self):
        if self.cell_radius <= 0:
            raise DomainError("cell radius must be positive", value=self.cell_radius)
        if self.num_users < 1:
            raise DomainError("at least one user is required", value=self.num_users)
        if not 0 <= self.blockage_rate <= 1:
            raise DomainError("blockage rate must lie in [0, 1]", value=self.blockage_rate)


@dataclass(frozen=True)
class Scenario:
    """One realization: geometry, constants and per-user draws."""

    vlc: VlcParams
    rf: RfParams
    cell_radius: float
    users: tuple[UserPlacement, ...]
    blockage_rate: float
    rng_seed: int

    def __post_init__(self):
        if len(self.users) % 2:
            raise DomainError("scenario needs an even user count", value=len(self.users))
        ap_x, ap_y, _ = self.vlc.ap_position
        limit = self.cell_radius * (1 + 1e-9) + 1e-12
        for index, user in enumerate(self.users):
            x, y, _ = user.position
            if math.hypot(x - ap_x, y - ap_y) > limit:
                raise DomainError(
                    "user lies outside the cell",
                    user=index,
                    position=list(user.position),
                    cell_radius=self.cell_radius,
                )

    @property
    def num_users(self) -> int:
        return len(self.users)

    @property
    def positions(self) -> np.ndarray:
        return np.array([u.position for u in self.users], dtype=float)


@dataclass(frozen=True)
class ChannelState:
    """Per-user VLC gains h and the symmetric per-pair RF power gains."""

    h: np.ndarray
    g_rf: np.ndarray

    def __post_init__(self):
        h = _frozen_array(self.h)
        g_rf = _frozen_array(self.g_rf)
        if h.ndim != 1 or g_rf.shape != (h.size, h.size):
            raise DomainError("channel shapes do not match", h=h.shape, g_rf=g_rf.shape)
        if not (np.all(np.isfinite(h)) and np.all(np.isfinite(g_rf))):
            raise DomainError("channel gains must be finite")
        if np.any(h < 0) or np.any(g_rf < 0):
            raise DomainError("channel gains must be non-negative")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "g_rf", g_rf)

    @property
    def num_users(self) -> int:
        return int(self.h.size)
