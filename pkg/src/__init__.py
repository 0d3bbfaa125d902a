"""
Co-NOMA hybrid VLC/RF downlink optimizer.

Joint user pairing, link selection and power allocation for cooperative
NOMA in a VLC attocell with energy-harvesting RF relaying.
"""

__version__ = "1.0.0"
