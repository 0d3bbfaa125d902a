"""
Strong/weak user pairing.
"""

from .matrix import PairingMatrix
from .hungarian import build_utility_matrix, hungarian_solve

__all__ = ["PairingMatrix", "build_utility_matrix", "hungarian_solve"]
