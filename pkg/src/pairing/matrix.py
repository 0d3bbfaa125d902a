"""
One-to-one pairing of weak users with strong users.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..utils.errors import ContractViolation


@dataclass(frozen=True)
class PairingMatrix:
    """
    Permutation sigma: weak index i -> strong index sigma[i].

    Equivalent to the binary matrix Z with z[i, sigma[i]] = 1. Converts to
    a numpy array of sigma, so it can be passed wherever sigma is expected.
    """

    sigma: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(j) for j in self.sigma)
        if sorted(sigma) != list(range(len(sigma))):
            raise ContractViolation("pairing is not a permutation", sigma=list(sigma))
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def identity(cls, pair_count: int) -> "PairingMatrix":
        return cls(tuple(range(pair_count)))

    @classmethod
    def from_matrix(cls, z: Sequence[Sequence[int]]) -> "PairingMatrix":
        """Build from a binary matrix with unit row and column sums."""
        z = np.asarray(z)
        if z.ndim != 2 or z.shape[0] != z.shape[1]:
            raise ContractViolation("pairing matrix must be square", shape=z.shape)
        if not np.all((z == 0) | (z == 1)):
            raise ContractViolation("pairing matrix must be binary")
        if not (np.all(z.sum(axis=0) == 1) and np.all(z.sum(axis=1) == 1)):
            raise ContractViolation(
                "every row and column of the pairing matrix must sum to 1",
                row_sums=z.sum(axis=1).tolist(),
                col_sums=z.sum(axis=0).tolist(),
            )
        return cls(tuple(int(j) for j in np.argmax(z, axis=1)))

    @property
    def matrix(self) -> np.ndarray:
        k = len(self.sigma)
        z = np.zeros((k, k), dtype=int)
        z[np.arange(k), list(self.sigma)] = 1
        return z

    def __len__(self) -> int:
        return len(self.sigma)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.sigma, dtype=dtype if dtype is not None else int)
