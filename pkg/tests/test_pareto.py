import numpy as np
import pytest

from occupareto import (
    ObjectivePipeline,
    OrganizationParams,
    ParameterError,
    arrival_probability,
    brute_force_frontier,
    enumerate_candidates,
    evaluate_strategy,
    pareto_sweep,
)
from occupareto.pareto import _points_from_surface
from occupareto.pipeline import evaluate_objectives
from occupareto.scenarios import TABLE2, scenario_params


def scenario_a_params():
    return scenario_params(TABLE2[0])


class TestCandidates:
    def test_every_multiple_of_one_over_n(self):
        p = OrganizationParams(n=4)
        np.testing.assert_allclose(enumerate_candidates(p), [0, 0.25, 0.5, 0.75, 1.0])

    def test_threshold_filter(self):
        p = OrganizationParams(n=4, occupancy_threshold=0.6)
        np.testing.assert_allclose(enumerate_candidates(p), [0.75, 1.0])

    def test_candidate_count(self):
        p = OrganizationParams(n=100, occupancy_threshold=0.5)
        assert enumerate_candidates(p).size == 51

    def test_threshold_above_one_warns_and_returns_empty(self):
        p = OrganizationParams(n=10, occupancy_threshold=1.2)
        with pytest.warns(UserWarning, match="no candidate"):
            cands = enumerate_candidates(p)
        assert cands.size == 0
        with pytest.warns(UserWarning, match="no candidate"):
            frontier = pareto_sweep(p)
        assert len(frontier) == 0
        assert frontier.diagnostics


class TestEvaluateStrategy:
    def test_empty_workplace_minimizes_infections(self):
        p = scenario_a_params()
        values = [evaluate_strategy(p, occ).expected_infections
                  for occ in enumerate_candidates(p)]
        assert values[0] == min(values)
        assert values[0] == 0.0   # nobody on-site, nothing imported

    def test_infections_monotone_in_occupancy(self):
        p = scenario_a_params()
        values = [evaluate_strategy(p, occ).expected_infections
                  for occ in np.linspace(0, 1, 21)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_deterministic(self):
        p = scenario_a_params()
        a = evaluate_strategy(p, 0.64)
        b = evaluate_strategy(p, 0.64)
        assert a == b

    def test_present_count_matches_grid(self):
        p = scenario_a_params()
        pt = evaluate_strategy(p, 0.37)
        assert pt.present_count == 37


class TestSweepAgainstBruteForce:
    def equality_case(self, params, pipeline=None):
        pipeline = pipeline or ObjectivePipeline()
        candidates = enumerate_candidates(params)
        surface = evaluate_objectives(params, candidates, pipeline)
        points = _points_from_surface(surface)
        fast = pareto_sweep(params, pipeline)
        slow = brute_force_frontier(points)
        assert [p.occup for p in fast.points] == [p.occup for p in slow.points]
        assert fast.points == slow.points

    def test_scenario_a_all_pipelines(self):
        for est in ("workplace-risk", "cumulative", "at-detection"):
            self.equality_case(scenario_a_params(), ObjectivePipeline(estimator=est))

    def test_non_monotone_objective_still_equal(self):
        # deliberately outside the monotone regime: the sweep must reproduce
        # the dominance filter even when the risk curve has local dips
        p = OrganizationParams(n=288, n_v=206, beta_u=0.137, beta_v=0.095,
                               prod=0.5, tau=13, contact_base=7.92,
                               contact_slope=0.16)
        self.equality_case(p)

    def test_random_parameterizations(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            n = int(rng.integers(2, 120))
            n_v = int(rng.integers(0, n))
            beta_u = float(rng.uniform(0, 0.25))
            p = OrganizationParams(
                n=n, n_v=n_v, beta_u=beta_u, beta_v=float(rng.uniform(0, beta_u)),
                prod=float(rng.uniform(0, 0.99)), tau=int(rng.integers(1, 15)),
                contact_base=float(rng.uniform(0, 10)),
                contact_slope=float(rng.uniform(0, 0.25)),
                occupancy_threshold=float(rng.choice([0.0, 0.0, 0.3])),
            )
            self.equality_case(p)


class TestFrontierShape:
    def test_disease_free_alternate_estimators_collapse_to_full_occupancy(self):
        p = OrganizationParams(n=50, n_v=0, beta_u=0.0, beta_v=0.0, prod=0.8)
        for est in ("cumulative", "at-detection"):
            frontier = pareto_sweep(p, ObjectivePipeline(estimator=est))
            assert [pt.occup for pt in frontier.points] == [1.0]

    def test_disease_free_default_keeps_ascending_tradeoff(self):
        # presence-gated arrival: even at beta=0 going in carries import risk,
        # so every candidate trades a bit of risk for productivity
        p = OrganizationParams(n=50, n_v=0, beta_u=0.0, beta_v=0.0, prod=0.8)
        frontier = pareto_sweep(p)
        assert len(frontier) == 51
        assert frontier.points[-1].occup == 1.0
        tps = [pt.total_productivity for pt in frontier.points]
        assert tps == sorted(tps)

    def test_threshold_one_single_row(self):
        p = OrganizationParams(n=50, occupancy_threshold=1.0)
        frontier = pareto_sweep(p)
        assert [pt.occup for pt in frontier.points] == [1.0]

    def test_strictly_increasing_objectives_along_frontier(self):
        for cfg in TABLE2:
            frontier = pareto_sweep(scenario_params(cfg))
            inf = [p.expected_infections for p in frontier.points]
            tp = [p.total_productivity for p in frontier.points]
            occ = [p.occup for p in frontier.points]
            assert all(a < b for a, b in zip(inf, inf[1:]))
            assert all(a < b for a, b in zip(tp, tp[1:]))
            assert all(a < b for a, b in zip(occ, occ[1:]))
            assert occ[0] >= scenario_params(cfg).occupancy_threshold

    def test_bit_identical_reruns(self):
        p = scenario_a_params()
        assert pareto_sweep(p).points == pareto_sweep(p).points


class TestBruteForce:
    def make(self, occ, inf, tp):
        from occupareto.pareto import ParetoPoint
        return ParetoPoint(occup=occ, expected_infections=inf,
                           total_productivity=tp, tau_bar=1.0,
                           present_count=int(occ * 10))

    def test_single_point(self):
        pt = self.make(0.5, 1.0, 50.0)
        assert brute_force_frontier([pt]).points == (pt,)

    def test_dominating_pair(self):
        worse = self.make(0.6, 2.0, 40.0)
        better = self.make(0.5, 1.0, 50.0)
        assert brute_force_frontier([worse, better]).points == (better,)

    def test_equal_productivity_higher_infections_dropped(self):
        keep = self.make(0.5, 1.0, 50.0)
        drop = self.make(0.6, 2.0, 50.0)
        assert brute_force_frontier([keep, drop]).points == (keep,)

    def test_incomparable_points_both_kept(self):
        a = self.make(0.4, 1.0, 40.0)
        b = self.make(0.6, 2.0, 50.0)
        assert brute_force_frontier([a, b]).points == (a, b)


def test_pipeline_validation():
    with pytest.raises(ParameterError):
        ObjectivePipeline(estimator="nope")
    with pytest.raises(ParameterError):
        ObjectivePipeline(rho_convention="monthly")
    with pytest.raises(ParameterError):
        ObjectivePipeline(detection_time="midpoint")


def test_fully_vaccinated_rejected_at_evaluation():
    p = OrganizationParams(n=10, n_v=10)
    with pytest.raises(ParameterError, match="unvaccinated"):
        evaluate_strategy(p, 0.5)
