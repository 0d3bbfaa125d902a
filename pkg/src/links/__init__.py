"""
Direct vs. relayed link selection for weak users.
"""

from .selection import LinkSelection, build_s_matrix, candidate_vectors, select_links

__all__ = ["LinkSelection", "build_s_matrix", "candidate_vectors", "select_links"]
