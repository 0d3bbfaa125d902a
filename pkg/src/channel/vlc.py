"""
Line-of-sight VLC channel: Lambertian LED, optical concentrator with a
hard FoV cutoff, and blockage.

The LED faces straight down and photodetectors face straight up, so the
radiance angle equals the incidence angle.
"""

import math
from typing import Sequence

import numpy as np

from ..utils.errors import DomainError
from .params import VlcParams


def lambertian_order(half_intensity_angle: float) -> float:
    """
    Lambertian emission order m = -1 / log2(cos(theta_half)).

    Args:
        half_intensity_angle: Semi-angle at half power, degrees in (0, 90)

    Returns:
        Strictly positive order m
    """
    if not 0 < half_intensity_angle < 90:
        raise DomainError(
            "half-intensity angle must lie in (0, 90) degrees",
            value=half_intensity_angle,
        )
    return -1.0 / math.log2(math.cos(math.radians(half_intensity_angle)))


def concentrator_gain(incidence: float, fov: float, refractive_index: float) -> float:
    """
    Optical concentrator gain: n^2 / sin^2(FoV) inside the FoV, else 0.

    Args:
        incidence: Incidence angle, degrees (>= 0)
        fov: Receiver FoV semi-angle, degrees
        refractive_index: Concentrator refractive index
    """
    if incidence < 0:
        raise DomainError("incidence angle must be non-negative", value=incidence)
    if fov <= 0:
        raise DomainError("FoV semi-angle must be positive", value=fov)
    if incidence > fov:
        return 0.0
    return refractive_index**2 / math.sin(math.radians(fov)) ** 2


def incidence_angle(user_position: Sequence[float], ap_position: Sequence[float]) -> tuple[float, float]:
    """Return (distance in m, incidence angle in degrees) from a user to the AP."""
    offset = np.asarray(ap_position, dtype=float) - np.asarray(user_position, dtype=float)
    distance = float(np.linalg.norm(offset))
    if distance == 0.0:
        raise DomainError("user coincides with the access point", position=list(user_position))
    if offset[2] <= 0:
        raise DomainError("user must be below the access point plane", position=list(user_position))
    cos_theta = min(1.0, offset[2] / distance)
    return distance, math.degrees(math.acos(cos_theta))


def vlc_channel_gain(user_position: Sequence[float], vlc: VlcParams, blocked: bool = False) -> float:
    """
    LoS DC gain between the AP and one receiver.

    Args:
        user_position: Receiver position (x, y, z) in metres
        vlc: Optical parameters
        blocked: Whether the LoS path is obstructed

    Returns:
        Channel gain h >= 0 (0 when blocked or outside the FoV)
    """
    distance, theta = incidence_angle(user_position, vlc.ap_position)
    if blocked or theta > vlc.fov_semiangle:
        return 0.0

    m = lambertian_order(vlc.half_intensity_angle)
    cos_theta = math.cos(math.radians(theta))
    gain = concentrator_gain(theta, vlc.fov_semiangle, vlc.refractive_index)
    return (
        (m + 1.0) * vlc.photodetector_area / (2.0 * math.pi * distance**2)
        * cos_theta**m
        * vlc.optical_filter_gain
        * cos_theta
        * gain
    )
