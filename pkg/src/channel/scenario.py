"""
Scenario sampling: user drops, blockage draws and channel evaluation for
one Monte-Carlo realization.
"""

import math

import numpy as np

from .params import ChannelState, Scenario, ScenarioConfig, UserPlacement
from .rf import rf_channel_gain
from .vlc import vlc_channel_gain


def _drop_users(config: ScenarioConfig, rng: np.random.Generator) -> list[tuple[float, float, float]]:
    """Uniform ground positions over the cell disc around the AP projection."""
    ap_x, ap_y, _ = config.vlc.ap_position
    radius = config.cell_radius * np.sqrt(rng.random(config.num_users))
    angle = 2.0 * math.pi * rng.random(config.num_users)
    return [
        (ap_x + r * math.cos(a), ap_y + r * math.sin(a), config.vlc.user_height)
        for r, a in zip(radius, angle)
    ]


def sample_scenario(config: ScenarioConfig, rng_seed: int) -> tuple[Scenario, ChannelState]:
    """
    Draw one user realization and evaluate its channels.

    Args:
        config: Geometry, RF parameters, user count and blockage rate
        rng_seed: Seed; the same seed always yields the same realization

    Returns:
        (Scenario, ChannelState). An odd user count gets one virtual user
        at the AP ground projection with zero VLC and RF gains.
    """
    rng = np.random.default_rng(rng_seed)
    positions = _drop_users(config, rng)
    blocked = rng.random(config.num_users) < config.blockage_rate

    users = [UserPlacement(position=p, blocked=bool(b)) for p, b in zip(positions, blocked)]
    if len(users) % 2 == 1:
        ap_x, ap_y, _ = config.vlc.ap_position
        users.append(
            UserPlacement(
                position=(ap_x, ap_y, config.vlc.user_height),
                blocked=True,
                virtual=True,
            )
        )

    n = len(users)
    h = np.array([vlc_channel_gain(u.position, config.vlc, u.blocked) for u in users])

    g_rf = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if users[i].virtual or users[j].virtual:
                continue
            gain = rf_channel_gain(users[i].position, users[j].position, config.rf, rng)
            g_rf[i, j] = g_rf[j, i] = gain

    scenario = Scenario(
        vlc=config.vlc,
        rf=config.rf,
        cell_radius=config.cell_radius,
        users=tuple(users),
        blockage_rate=config.blockage_rate,
        rng_seed=int(rng_seed),
    )
    return scenario, ChannelState(h=h, g_rf=g_rf)
