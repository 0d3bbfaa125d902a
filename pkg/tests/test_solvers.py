"""
Integration tests for the solvers.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from simulation.metrics import jain_index
from src.channel import ChannelState, RfParams
from src.links import LinkSelection
from src.rates import PairWeights, PhyConstants
from src.solvers import (
    Method,
    SolverOptions,
    baseline2_pairing,
    build_instance,
    classify_users,
    co_noma_solve,
    exhaustive_solve,
    noma_solve,
    solve,
    solve_with_fairness,
)
from src.utils.errors import ContractViolation, DomainError, SearchRefused
from tests.builders import make_instance, random_instance, serviceable_instances


class TestClassification:
    """Tests for strong/weak classification."""

    def test_split_by_gain(self):
        """Upper half by h is strong, both halves in descending order."""
        channels = ChannelState(h=[1e-5, 4e-5, 0.0, 3e-5], g_rf=np.zeros((4, 4)))
        assert classify_users(channels) == ((1, 3), (0, 2))

    def test_ties_by_user_id(self):
        """Equal gains keep user-id order."""
        channels = ChannelState(h=[1e-5] * 4, g_rf=np.zeros((4, 4)))
        assert classify_users(channels) == ((0, 1), (2, 3))

    def test_odd_count_rejected(self):
        """An odd user count is a contract violation."""
        with pytest.raises(ContractViolation):
            classify_users(ChannelState(h=[1.0, 2.0, 3.0], g_rf=np.zeros((3, 3))))


class TestSolverOptions:
    """Tests for option validation."""

    def test_defaults(self):
        """Defaults match the documented stopping rules."""
        options = SolverOptions()
        assert options.max_iterations == 50
        assert options.exhaustive_max_pairs == 6
        assert options.max_weight_updates == 100

    def test_invalid(self):
        """Out-of-range options raise DomainError."""
        with pytest.raises(DomainError):
            SolverOptions(max_iterations=0)
        with pytest.raises(DomainError):
            SolverOptions(max_weight_updates=101)
        with pytest.raises(DomainError):
            SolverOptions(alpha=1.0)


class TestBaseline2:
    """Tests for the opposite-rank baseline."""

    def test_pairing(self):
        """sigma(i) = K - 1 - i."""
        assert baseline2_pairing(3).sigma == (2, 1, 0)

    def test_example(self):
        """Strong gains [4, 3], weak [1, 0]: the blocked weak user is relayed by the best strong user."""
        g = np.full((4, 4), 1e-6)
        np.fill_diagonal(g, 0.0)
        channels = ChannelState(h=[4e-5, 3e-5, 1e-5, 0.0], g_rf=g)
        inst = build_instance(channels, PhyConstants(), RfParams())
        report = solve(Method.BASELINE2, inst)
        assert report.pairing.sigma == (1, 0)
        assert report.links.x == (0, 1)
        data = report.to_dict(inst)
        assert data["pairing"] == {"2": 1, "3": 0}
        assert data["relayed"] == {"2": False, "3": True}


class TestCoNoma:
    """Tests for the cooperative NOMA iteration."""

    def test_trace_non_decreasing(self):
        """The objective never decreases across iterations."""
        for inst in serviceable_instances(15, num_users=8):
            report = co_noma_solve(inst, PairWeights.uniform(inst.pair_count))
            trace = report.trace
            assert all(b >= a for a, b in zip(trace, trace[1:]))
            assert report.objective == trace[-1]
            assert report.iterations <= SolverOptions().max_iterations

    def test_total_power(self):
        """The final powers use the whole budget."""
        for inst in serviceable_instances(10, num_users=6):
            report = solve("co-noma", inst)
            assert report.power.total_power == pytest.approx(inst.p_max, rel=1e-9)

    def test_single_pair_converges_fast(self):
        """K = 1 settles within two iterations."""
        for inst in serviceable_instances(10, num_users=2):
            report = co_noma_solve(inst, PairWeights.uniform(1))
            assert report.converged
            assert report.iterations <= 2

    def test_not_worse_than_noma_warm_start(self):
        """Starting from the NOMA solution never loses objective."""
        for inst in serviceable_instances(10, num_users=8, start=40):
            weights = PairWeights.uniform(inst.pair_count)
            noma = noma_solve(inst, weights)
            warm = co_noma_solve(
                inst, weights, initial=(noma.pairing, LinkSelection.direct(inst.pair_count))
            )
            assert warm.objective >= noma.objective * (1 - 1e-12)

    def test_exhaustive_bounds_co_noma(self):
        """Exhaustive search is never beaten."""
        for num_users in (2, 4, 6):
            for inst in serviceable_instances(5, num_users=num_users, start=7 * num_users):
                weights = PairWeights.uniform(inst.pair_count)
                best = exhaustive_solve(inst, weights).objective
                heuristic = co_noma_solve(inst, weights).objective
                assert best >= heuristic * (1 - 1e-12)

    def test_blocked_weak_users_get_relays(self):
        """Every weak user blocked: co-noma relays them and matches or beats baseline2."""
        inst = make_instance([1e5, 4e4, 9e4], [0.0, 0.0, 0.0])
        weights = PairWeights(weak=[1e3] * 3, strong=[1.0] * 3)
        report = co_noma_solve(inst, weights)
        baseline = solve(Method.BASELINE2, inst, weights)
        assert report.links.x == (1, 1, 1)
        assert np.all(report.rates.weak_rates > 0)
        assert report.objective >= baseline.objective * (1 - 1e-12)

    def test_not_worse_than_baseline2_under_fairness_weights(self):
        """With the weights the fairness loop settles on, co-noma is never below baseline2."""
        options = SolverOptions(max_weight_updates=5)
        for inst in serviceable_instances(6, num_users=6, start=0, blockage_rate=0.3):
            report, weight_set = solve_with_fairness("co-noma", inst, options)
            baseline = solve(Method.BASELINE2, inst, weight_set.weights, options)
            assert report.objective >= baseline.objective * (1 - 1e-12)

    def test_relayed_only_with_serviceable_strong(self):
        """Every relayed weak user is paired with a strong user that sees the AP or gets no power."""
        for inst in serviceable_instances(10, num_users=8, start=300, blockage_rate=0.5):
            report = solve("co-noma", inst)
            for i, j in enumerate(report.pairing.sigma):
                if report.links.x[i] and inst.psi_s[j] == 0:
                    assert report.power.budgets.q[i] == 0.0


class TestNoma:
    """Tests for the plain NOMA baseline."""

    def test_direct_links_only(self):
        """NOMA never relays."""
        for inst in serviceable_instances(5, num_users=8):
            assert solve("noma", inst).links.n_relayed == 0

    def test_blocked_weak_users_get_nothing(self):
        """All weak users blocked: only strong users are served, Jain = 0.5."""
        inst = make_instance([1e5, 1e5, 1e5], [0.0, 0.0, 0.0])
        report = solve(Method.NOMA, inst)
        assert np.all(report.rates.weak_rates == 0.0)
        assert jain_index(report.user_rates(inst)) == pytest.approx(0.5, rel=1e-9)


class TestExhaustive:
    """Tests for the exhaustive reference."""

    def test_refuses_large_instances(self):
        """K above the limit raises SearchRefused."""
        inst = random_instance(1, num_users=14)
        with pytest.raises(SearchRefused):
            exhaustive_solve(inst, PairWeights.uniform(7))

    def test_limit_is_configurable(self):
        """A lower limit refuses smaller instances."""
        inst = random_instance(1, num_users=6)
        with pytest.raises(SearchRefused):
            exhaustive_solve(inst, PairWeights.uniform(3), SolverOptions(exhaustive_max_pairs=2))


class TestIdle:
    """Tests for scenarios with no usable VLC link."""

    def test_all_blocked(self):
        """Every method returns an idle zero-rate report."""
        inst = random_instance(3, num_users=6, blockage_rate=1.0)
        for method in Method:
            report = solve(method, inst)
            assert report.idle
            assert report.sum_rate == 0.0
            assert report.power.total_power == pytest.approx(inst.p_max)


class TestSolveDispatch:
    """Tests for the solve() entry point."""

    def test_string_method(self):
        """Method names are accepted as strings."""
        inst = serviceable_instances(1)[0]
        assert solve("baseline2", inst).method == Method.BASELINE2

    def test_unknown_method(self):
        """Unknown method names raise ValueError."""
        inst = serviceable_instances(1)[0]
        with pytest.raises(ValueError):
            solve("oma", inst)

    def test_report_dict(self):
        """The JSON view has one rate per user."""
        inst = serviceable_instances(1)[0]
        data = solve("co-noma", inst).to_dict(inst)
        assert len(data["user_rates_bps"]) == inst.num_users
        assert data["sum_rate_bps"] == pytest.approx(sum(data["user_rates_bps"].values()))
        assert data["method"] == "co-noma"


class TestFairnessLoop:
    """Tests for solve_with_fairness()."""

    def test_runs_and_returns_weights(self):
        """The loop returns positive weights and a valid report."""
        options = SolverOptions(max_weight_updates=5)
        for inst in serviceable_instances(3, num_users=6):
            report, weight_set = solve_with_fairness("co-noma", inst, options)
            assert weight_set.weights.pair_count == inst.pair_count
            assert np.all(weight_set.weights.weak > 0)
            assert report.power.total_power == pytest.approx(inst.p_max, rel=1e-9)

    def test_idle_instance(self):
        """An idle instance survives weight updates."""
        inst = random_instance(3, num_users=4, blockage_rate=1.0)
        report, _ = solve_with_fairness("noma", inst, SolverOptions(max_weight_updates=2))
        assert report.idle
