"""
Unit tests for the closed-form pair splits.
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.power import (
    SplitCase,
    case1_split,
    case2_split,
    direct_pair_objective,
    eta_one,
    eta_two,
    omega_root,
)
from src.rates import rate_strong, rate_weak_at_strong
from src.utils.errors import ContractViolation


B = 20e6


class TestEtaOne:
    """Tests for the equal-rate strong power."""

    def test_equal_rates(self):
        """q Psi = 3 gives P_s = 1 and equal strong and weak rates."""
        p_s = eta_one(3.0, 1.0)
        assert p_s == pytest.approx(1.0)
        strong = float(rate_strong(p_s, 1.0, B, 1))
        weak = float(rate_weak_at_strong(3.0 - p_s, p_s, 1.0, B, 1))
        assert strong == pytest.approx(weak, rel=1e-12)

    def test_small_product_stable(self):
        """Tiny q Psi does not lose precision."""
        p_s = eta_one(1e-12, 1e-3)
        assert p_s == pytest.approx(0.5e-12, rel=1e-6)

    def test_at_most_half(self):
        """eta_1 never exceeds q/2."""
        for q, psi in [(0.01, 1e6), (1.0, 1.0), (5.0, 1e-3)]:
            assert eta_one(q, psi) <= q / 2


class TestEtaTwo:
    """Tests for the RF-limited strong power."""

    def test_zero_at_boundary(self):
        """A = 4 and q Psi = 3 gives 0."""
        assert eta_two(3.0, 1.0, B, B, 1) == pytest.approx(0.0, abs=1e-15)

    def test_first_hop_meets_rf_rate(self):
        """At eta_2 the first-hop rate equals the RF rate."""
        rf_rate = 2e7
        p_s = eta_two(1.0, 1000.0, rf_rate, B, 1)
        first_hop = float(rate_weak_at_strong(1.0 - p_s, p_s, 1000.0, B, 1))
        assert first_hop == pytest.approx(rf_rate, rel=1e-9)


class TestCase1Split:
    """Tests for relayed-pair splits."""

    def test_eta_one_when_rf_is_ample(self):
        """A fast RF hop selects eta_1."""
        split = case1_split(3.0, 1.0, math.inf, B, 1)
        assert split.case == SplitCase.RELAYED_ETA1
        assert split.p_strong == pytest.approx(1.0)
        assert split.p_weak == pytest.approx(2.0)
        assert split.weak_rate == pytest.approx(B / 2, rel=1e-12)

    def test_eta_two_when_rf_limits(self):
        """A slow RF hop selects eta_2 and caps the weak rate."""
        split = case1_split(1.0, 1000.0, 2e7, B, 1)
        assert split.case == SplitCase.RELAYED_ETA2
        assert split.p_strong == pytest.approx(0.24925, rel=1e-9)
        assert split.weak_rate == pytest.approx(2e7, rel=1e-9)
        assert split.p_strong + split.p_weak == pytest.approx(1.0)

    def test_clamped_to_sic_order(self):
        """A very slow RF hop clamps P_s at q/2."""
        split = case1_split(1.0, 1000.0, 1e3, B, 1)
        assert split.p_strong == pytest.approx(0.5)
        assert split.p_strong <= split.p_weak
        assert split.weak_rate == pytest.approx(1e3)

    def test_zero_budget(self):
        """q = 0 gives zero powers and rate."""
        split = case1_split(0.0, 1e5, 1e7, B, 2)
        assert (split.p_strong, split.p_weak, split.weak_rate) == (0.0, 0.0, 0.0)

    def test_blocked_strong_rejected(self):
        """A relaying strong user must see the AP."""
        with pytest.raises(ContractViolation):
            case1_split(1.0, 0.0, 1e7, B, 1)


class TestOmegaRoot:
    """Tests for the interior stationary point."""

    def test_value(self):
        """w_w = 2, w_s = 1, Psi_w = 1, Psi_s = 4 gives 0.5."""
        assert omega_root(4.0, 1.0, 1.0, 2.0) == pytest.approx(0.5)

    def test_equal_weights_infinite(self):
        """Equal weights have no interior root."""
        assert math.isinf(omega_root(4.0, 1.0, 1.0, 1.0))


class TestCase2Split:
    """Tests for direct-pair splits."""

    def test_interior_root_used(self):
        """A valid Omega is taken as the strong power."""
        split = case2_split(10.0, 4.0, 1.0, 1.0, 2.0, B, 1)
        assert split.case == SplitCase.DIRECT_OMEGA
        assert split.p_strong == pytest.approx(0.5)
        assert split.p_weak == pytest.approx(9.5)

    def test_equal_weights_half_split(self):
        """Equal weights and Psi_s > Psi_w put P_s at q/2."""
        split = case2_split(0.01, 1e5, 1e3, 1.0, 1.0, B, 2)
        assert split.case == SplitCase.DIRECT_BOUNDARY
        assert split.p_strong == pytest.approx(0.005)

    def test_blocked_weak_gets_nothing(self):
        """Psi_w = 0 sends the whole budget to the strong user."""
        split = case2_split(0.01, 1e5, 0.0, 1.0, 1.0, B, 2)
        assert split.case == SplitCase.BLOCKED_ALL_TO_STRONG
        assert split.p_strong == 0.01
        assert split.p_weak == 0.0
        assert split.weak_rate == 0.0

    def test_zero_budget(self):
        """q = 0 gives a zero split."""
        split = case2_split(0.0, 1e5, 1e3, 1.0, 1.0, B, 2)
        assert (split.p_strong, split.p_weak) == (0.0, 0.0)

    def test_matches_grid_search(self):
        """The chosen split is at least as good as a 201-point grid."""
        rng = np.random.default_rng(123)
        for _ in range(100):
            psi_s = 10 ** rng.uniform(2, 6)
            psi_w = psi_s * rng.uniform(0.01, 1.0)
            w_s, w_w = rng.uniform(0.2, 5.0, size=2)
            q = rng.uniform(1e-4, 1e-2)
            split = case2_split(q, psi_s, psi_w, w_s, w_w, B, 3)
            chosen = direct_pair_objective(split.p_strong, q, psi_s, psi_w, w_s, w_w, B, 3)
            grid = max(
                direct_pair_objective(p, q, psi_s, psi_w, w_s, w_w, B, 3)
                for p in np.linspace(0.0, q / 2, 201)
            )
            assert chosen >= grid * (1 - 1e-9)
            assert 0.0 <= split.p_strong <= q / 2 + 1e-15


class TestClosedFormProperties:
    """Randomized checks of the closed forms."""

    def test_eta_one_equalizes_rates(self):
        """With an ample RF hop the strong and relayed rates are equal."""
        rng = np.random.default_rng(1)
        for _ in range(10_000):
            q = rng.uniform(1e-5, 1e-2)
            psi = 10 ** rng.uniform(0, 7)
            split = case1_split(q, psi, math.inf, B, 3)
            strong = float(rate_strong(split.p_strong, psi, B, 3))
            assert split.weak_rate == pytest.approx(strong, rel=1e-9)

    def test_eta_two_meets_rf_rate(self):
        """When the RF hop binds, the first-hop rate equals the RF rate."""
        rng = np.random.default_rng(2)
        for _ in range(10_000):
            q = rng.uniform(1e-4, 1e-2)
            psi = 10 ** rng.uniform(3, 7)
            low = float(rate_weak_at_strong(q / 2, q / 2, psi, B, 2))
            high = B / 8 * math.log2(1 + q * psi)
            rf_rate = low + rng.uniform(0.05, 0.95) * (high - low)
            split = case1_split(q, psi, rf_rate, B, 2)
            assert split.case == SplitCase.RELAYED_ETA2
            first_hop = float(rate_weak_at_strong(split.p_weak, split.p_strong, psi, B, 2))
            assert first_hop == pytest.approx(rf_rate, rel=1e-9)

    def test_omega_is_stationary(self):
        """The pair objective has zero slope at Omega and Omega beats a grid."""
        rng = np.random.default_rng(3)
        for _ in range(1000):
            psi_s = 10 ** rng.uniform(2, 6)
            ratio = rng.uniform(0.01, 0.9)
            psi_w = psi_s * ratio
            w_s = 1.0
            w_w = rng.uniform(1.05, 0.95 / ratio)
            omega = omega_root(psi_s, psi_w, w_s, w_w)
            q = 2 * omega * (1 + rng.uniform(0.1, 10.0))
            split = case2_split(q, psi_s, psi_w, w_s, w_w, B, 2)
            assert split.case == SplitCase.DIRECT_OMEGA

            slope_s = w_s * psi_s / (1 + psi_s * omega)
            slope_w = w_w * psi_w / (1 + psi_w * omega)
            assert abs(slope_s - slope_w) <= 1e-8 * slope_s

            chosen = direct_pair_objective(omega, q, psi_s, psi_w, w_s, w_w, B, 2)
            grid = max(
                direct_pair_objective(p, q, psi_s, psi_w, w_s, w_w, B, 2)
                for p in np.linspace(0.0, q / 2, 200)
            )
            assert chosen >= grid * (1 - 1e-12)
