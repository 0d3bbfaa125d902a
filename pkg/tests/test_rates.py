"""
Unit tests for the rate expressions, instances and the weighted objective.
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.channel import ChannelState, RfParams
from src.rates import (
    NomaInstance,
    PairWeights,
    PhyConstants,
    harvested_power,
    objective_value,
    p_max,
    rate_relayed,
    rate_rf,
    rate_strong,
    rate_weak_at_strong,
    rate_weak_direct,
    snr_coefficient,
    weighted_objective,
)
from src.power import allocate
from src.utils.errors import ContractViolation, DomainError
from tests.builders import make_instance


B = 20e6


class TestPhyConstants:
    """Tests for the constant set."""

    def test_p_max_default(self):
        """600/400 mA drive gives 0.01 A^2."""
        assert p_max(0.6, 0.4) == pytest.approx(0.01)

    def test_dc_bias(self):
        """DC bias is the mid-range current."""
        assert PhyConstants().dc_bias == pytest.approx(0.5)

    def test_with_pairs(self):
        """with_pairs only changes K."""
        consts = PhyConstants().with_pairs(4)
        assert consts.pair_count == 4
        assert consts.vlc_bandwidth == PhyConstants().vlc_bandwidth

    def test_invalid_constants(self):
        """Non-positive or inverted constants raise DomainError."""
        with pytest.raises(DomainError):
            PhyConstants(responsivity=0.0)
        with pytest.raises(DomainError):
            PhyConstants(bias_high=0.3, bias_low=0.4)
        with pytest.raises(DomainError):
            PhyConstants(pair_count=0)


class TestHarvestAndSnr:
    """Tests for harvested power and the SNR coefficient."""

    def test_harvested_power_value(self):
        """h = 2.64e-5 harvests about 1.77e-5 W."""
        assert float(harvested_power(2.64e-5, PhyConstants())) == pytest.approx(1.765e-5, rel=5e-3)

    def test_harvested_power_zero_gain(self):
        """A blocked user harvests nothing."""
        assert float(harvested_power(0.0, PhyConstants())) == 0.0

    def test_snr_coefficient_formula(self):
        """Psi = (nu rho)^2 h^2 K / (B N)."""
        consts = PhyConstants(pair_count=3)
        h = 2e-5
        expected = (10.0 * 0.53) ** 2 * h**2 * 3 / (20e6 * 1e-21)
        assert float(snr_coefficient(h, consts)) == pytest.approx(expected, rel=1e-12)

    def test_snr_coefficient_broadcasts(self):
        """Arrays in, arrays out."""
        psi = snr_coefficient(np.array([0.0, 1e-5, 2e-5]), PhyConstants())
        assert psi.shape == (3,)
        assert psi[0] == 0.0
        assert psi[2] == pytest.approx(4 * psi[1])


class TestRateExpressions:
    """Tests for the per-message rate formulas."""

    def test_rate_strong(self):
        """Psi P = 3 gives (B/2K) * 2."""
        assert float(rate_strong(3.0, 1.0, B, 3)) == pytest.approx(B / 6 * 2)

    def test_rate_strong_zero_power(self):
        """Zero power gives zero rate."""
        assert float(rate_strong(0.0, 1e6, B, 2)) == 0.0

    def test_weak_at_strong(self):
        """Strong-user interference enters the SINR denominator."""
        value = float(rate_weak_at_strong(3.0, 1.0, 1.0, B, 1))
        assert value == pytest.approx(B / 2 * math.log2(1 + 3.0 / 2.0))

    def test_weak_direct_blocked(self):
        """A blocked weak user has no direct rate."""
        assert float(rate_weak_direct(0.01, 0.0, 0.0, B, 2)) == 0.0

    def test_rate_rf_splits_bandwidth(self):
        """Two relayed users halve the band."""
        rf = RfParams()
        one = float(rate_rf(1e-6, 1e-5, rf.bandwidth, rf.noise_psd, 1))
        two = float(rate_rf(1e-6, 1e-5, rf.bandwidth, rf.noise_psd, 2))
        share = rf.bandwidth / 2
        expected = share / 2 * math.log2(1 + 1e-11 / (share * rf.noise_psd))
        assert two == pytest.approx(expected, rel=1e-12)
        assert two < one

    def test_rate_rf_needs_relayed_user(self):
        """N_f = 0 is a contract violation."""
        with pytest.raises(ContractViolation):
            rate_rf(1e-6, 1e-5, 16e6, 4e-21, 0)

    def test_relayed_is_min_of_hops(self):
        """The dual-hop rate is limited by the weaker hop."""
        first_hop = float(rate_weak_at_strong(3.0, 1.0, 1.0, B, 1))
        assert float(rate_relayed(3.0, 1.0, 1.0, 1.0, B, 1)) == pytest.approx(1.0)
        assert float(rate_relayed(3.0, 1.0, 1.0, 1e12, B, 1)) == pytest.approx(first_hop)


class TestNomaInstance:
    """Tests for instance construction."""

    def test_from_channels(self):
        """Psi, harvested power and RF gains follow the classification."""
        g = np.array(
            [
                [0, 1, 2, 3],
                [1, 0, 4, 5],
                [2, 4, 0, 6],
                [3, 5, 6, 0],
            ],
            dtype=float,
        ) * 1e-6
        channels = ChannelState(h=[2e-5, 1e-5, 0.0, 3e-5], g_rf=g)
        inst = NomaInstance.from_channels(channels, (3, 0), (1, 2), PhyConstants(), RfParams())
        assert inst.pair_count == 2
        assert inst.consts.pair_count == 2
        assert inst.psi_w[1] == 0.0
        assert inst.g_rf[0, 0] == g[1, 3]
        assert inst.g_rf[1, 1] == g[2, 0]
        assert inst.rf_power[0] == pytest.approx(float(harvested_power(3e-5, inst.consts)))
        assert list(inst.user_ids()) == [3, 0, 1, 2]

    def test_unequal_sets_rejected(self):
        """Strong and weak sets must have equal size."""
        with pytest.raises(ContractViolation):
            NomaInstance(
                strong=(0,),
                weak=(1, 2),
                h_strong=[1.0],
                h_weak=[1.0, 1.0],
                psi_s=[1.0],
                psi_w=[1.0, 1.0],
                rf_power=[1.0],
                g_rf=[[1.0, 1.0]],
                consts=PhyConstants(),
                rf=RfParams(),
            )

    def test_serviceable(self):
        """An instance with no strong VLC link is not serviceable."""
        assert make_instance([1e5, 1e4], [1e3, 0.0]).serviceable
        assert not make_instance([0.0, 0.0], [0.0, 0.0]).serviceable

    def test_rf_rates_cached(self):
        """The RF rate matrix is computed once per N_f."""
        inst = make_instance([1e5, 1e4], [1e3, 0.0])
        assert inst.rf_rate_matrix(1) is inst.rf_rate_matrix(1)
        assert np.all(inst.rf_rate_matrix(2) < inst.rf_rate_matrix(1))


class TestPairWeights:
    """Tests for fairness weight validation."""

    def test_uniform(self):
        """Uniform weights are all ones."""
        weights = PairWeights.uniform(3)
        assert weights.pair_count == 3
        assert np.all(weights.weak == 1) and np.all(weights.strong == 1)

    def test_non_positive_rejected(self):
        """Zero and negative weights are rejected."""
        with pytest.raises(ContractViolation):
            PairWeights(weak=[1.0, 0.0], strong=[1.0, 1.0])
        with pytest.raises(ContractViolation):
            PairWeights(weak=[1.0], strong=[-1.0])

    def test_non_finite_rejected(self):
        """NaN weights are rejected."""
        with pytest.raises(ContractViolation):
            PairWeights(weak=[float("nan")], strong=[1.0])


class TestWeightedObjective:
    """Tests for the weighted sum-rate."""

    def test_direct_matches_formula(self):
        """All-direct configuration matches the closed-form rates."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        weights = PairWeights(weak=[1.0, 2.0], strong=[1.5, 1.0])
        power = allocate([0, 1], [0, 0], weights, inst)
        report = weighted_objective([0, 1], [0, 0], power, weights, inst)

        k = 2
        p_w, p_s = power.p_weak, power.strong_user_power
        strong = B / (2 * k) * np.log2(1 + inst.psi_s * p_s)
        weak = B / (2 * k) * np.log2(1 + inst.psi_w * p_w / (1 + inst.psi_w * p_s))
        expected = math.fsum(weights.strong * strong) + math.fsum(weights.weak * weak)
        assert report.weighted == pytest.approx(expected, rel=1e-12)
        assert report.sum_rate == pytest.approx(strong.sum() + weak.sum(), rel=1e-12)

    def test_relayed_uses_rf_share(self):
        """A relayed weak rate never exceeds the RF hop with N_f relayed users."""
        inst = make_instance([1e5, 4e4], [0.0, 0.0])
        weights = PairWeights.uniform(2)
        power = allocate([1, 0], [1, 1], weights, inst)
        report = weighted_objective([1, 0], [1, 1], power, weights, inst)
        rf = inst.rf_rate_matrix(2)
        assert report.weak_rates[0] <= rf[0, 1] + 1e-9
        assert report.weak_rates[1] <= rf[1, 0] + 1e-9

    def test_pair_sums(self):
        """Pair sums add the paired strong rate to each weak rate."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        weights = PairWeights.uniform(2)
        power = allocate([1, 0], [0, 0], weights, inst)
        report = weighted_objective([1, 0], [0, 0], power, weights, inst)
        assert report.pair_sums[0] == pytest.approx(report.strong_rates[1] + report.weak_rates[0])

    def test_user_rates_layout(self):
        """User rates are placed by user id."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        weights = PairWeights.uniform(2)
        power = allocate([0, 1], [0, 0], weights, inst)
        report = weighted_objective([0, 1], [0, 0], power, weights, inst)
        rates = report.user_rates(inst)
        assert rates[0] == report.strong_rates[0]
        assert rates[3] == report.weak_rates[1]

    def test_user_rates_follow_user_ids(self):
        """Strong and weak rates land on the ids of a reordered instance."""
        g = np.full((4, 4), 1e-6)
        np.fill_diagonal(g, 0.0)
        channels = ChannelState(h=[2e-5, 1e-5, 5e-6, 3e-5], g_rf=g)
        inst = NomaInstance.from_channels(channels, (3, 0), (1, 2), PhyConstants(), RfParams())
        weights = PairWeights.uniform(2)
        power = allocate([1, 0], [0, 0], weights, inst)
        report = weighted_objective([1, 0], [0, 0], power, weights, inst)
        rates = report.user_rates(inst)
        assert rates[inst.user_ids()].tolist() == (
            report.strong_rates.tolist() + report.weak_rates.tolist()
        )
        assert rates[3] == report.strong_rates[0]
        assert rates[2] == report.weak_rates[1]

    def test_relayed_rates_match_rate_relayed(self):
        """Relayed weak rates are the dual-hop rate with the RF share of N_f users."""
        inst = make_instance([1e5, 4e4, 9e4], [2e3, 0.0, 1e3])
        weights = PairWeights.uniform(3)
        sigma, x = np.array([2, 0, 1]), np.array([1, 1, 0])
        power = allocate(sigma, x, weights, inst)
        report = weighted_objective(sigma, x, power, weights, inst)
        rf = inst.rf_rate_matrix(2)[np.arange(3), sigma]
        expected = rate_relayed(
            power.p_weak,
            power.strong_user_power[sigma],
            inst.psi_s[sigma],
            rf,
            B,
            3,
        )
        assert report.weak_rates[:2] == pytest.approx(expected[:2], rel=1e-12)

    def test_matches_objective_value(self):
        """weighted_objective and objective_value agree."""
        inst = make_instance([1e5, 4e4, 9e4], [2e3, 0.0, 1e3])
        weights = PairWeights(weak=[1.0, 2.0, 0.5], strong=[1.0, 1.0, 3.0])
        sigma, x = np.array([2, 0, 1]), np.array([0, 1, 1])
        power = allocate(sigma, x, weights, inst)
        report = weighted_objective(sigma, x, power, weights, inst)
        value = objective_value(sigma, x, power.p_weak, power.strong_user_power, weights, inst)
        assert report.weighted == pytest.approx(value, rel=1e-12)

    def test_bad_pairing_rejected(self):
        """A non-permutation pairing is a contract violation."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        weights = PairWeights.uniform(2)
        power = allocate([0, 1], [0, 0], weights, inst)
        with pytest.raises(ContractViolation):
            weighted_objective([0, 0], [0, 0], power, weights, inst)

    def test_bad_links_rejected(self):
        """A non-binary link vector is a contract violation."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        weights = PairWeights.uniform(2)
        power = allocate([0, 1], [0, 0], weights, inst)
        with pytest.raises(ContractViolation):
            weighted_objective([0, 1], [0, 2], power, weights, inst)

    def test_weight_count_mismatch_rejected(self):
        """Weights must match the pair count."""
        inst = make_instance([1e5, 4e4], [2e3, 1e3])
        power = allocate([0, 1], [0, 0], PairWeights.uniform(2), inst)
        with pytest.raises(ContractViolation):
            weighted_objective([0, 1], [0, 0], power, PairWeights.uniform(3), inst)
