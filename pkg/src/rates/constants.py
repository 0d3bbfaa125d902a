"""
Physical-layer constants for the VLC downlink and the harvesting relay.
"""

from dataclasses import dataclass, replace

from ..utils.errors import DomainError


@dataclass(frozen=True)
class PhyConstants:
    """Defaults: 20 MHz VLC, 0.53 A/W PD, 600/400 mA LED drive limits."""

    vlc_bandwidth: float = 20e6
    vlc_noise_psd: float = 1e-21
    responsivity: float = 0.53
    conversion_factor: float = 10.0
    fill_factor: float = 0.75
    thermal_voltage: float = 0.025
    dark_current: float = 1e-10
    bias_high: float = 0.6
    bias_low: float = 0.4
    pair_count: int = 1

    def __post_init__(self):
        positive = {
            "vlc_bandwidth": self.vlc_bandwidth,
            "vlc_noise_psd": self.vlc_noise_psd,
            "responsivity": self.responsivity,
            "conversion_factor": self.conversion_factor,
            "fill_factor": self.fill_factor,
            "thermal_voltage": self.thermal_voltage,
            "dark_current": self.dark_current,
            "bias_high": self.bias_high,
            "bias_low": self.bias_low,
        }
        for name, value in positive.items():
            if value <= 0:
                raise DomainError(f"{name} must be positive", value=value)
        if self.bias_high <= self.bias_low:
            raise DomainError(
                "bias_high must exceed bias_low",
                bias_high=self.bias_high,
                bias_low=self.bias_low,
            )
        if self.pair_count < 1:
            raise DomainError("pair_count must be >= 1", value=self.pair_count)

    @property
    def dc_bias(self) -> float:
        """Fixed DC bias b = (I_H + I_L) / 2."""
        return (self.bias_high + self.bias_low) / 2.0

    def with_pairs(self, pair_count: int) -> "PhyConstants":
        """Copy with a different number of NOMA pairs K."""
        return replace(self, pair_count=pair_count)
