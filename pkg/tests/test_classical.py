"""Inverse construction of optimal strategies and cube sampling."""

import numpy as np
import pytest

from foodgame import (
    BoundaryFrequencyError,
    FrequencyTriple,
    InfeasibleParametersError,
    ParamVector,
    SamplingExhaustedError,
    is_optimal,
    optimal_strategy_from_params,
    params_feasible,
    sample_optimal_strategy,
    sample_uniform_strategy,
    solve_optimal_frequencies,
)
from foodgame.preferences import TransitivityLabel, classify

from conftest import draw_feasible_params

EXAMPLE_Q = FrequencyTriple(20 / 24, 1 / 24, 3 / 24)
EXAMPLE_PARAMS = ParamVector(1 / 48, 1 / 24, 1 / 48, 1 / 24)
CENTROID = FrequencyTriple(1 / 3, 1 / 3, 1 / 3)


class TestParamsFeasible:
    def test_worked_example_params(self):
        assert params_feasible(EXAMPLE_Q, EXAMPLE_PARAMS)

    def test_symmetric_params_at_centroid(self):
        assert params_feasible(CENTROID, ParamVector(1 / 6, 1 / 6, 1 / 6, 1 / 6))

    def test_zero_params_infeasible_when_q1_dominates(self):
        q = FrequencyTriple(1 / 24, 20 / 24, 3 / 24)
        assert not params_feasible(q, ParamVector(0.0, 0.0, 0.0, 0.0))

    def test_boundary_triple_raises(self):
        with pytest.raises(BoundaryFrequencyError):
            params_feasible(FrequencyTriple(0.5, 0.5, 0.0), EXAMPLE_PARAMS)

    def test_out_of_box_rejected(self):
        assert not params_feasible(CENTROID, ParamVector(0.5, 0.0, 0.0, 0.0))


class TestOptimalStrategyFromParams:
    def test_worked_example_strategy(self):
        s = optimal_strategy_from_params(EXAMPLE_Q, EXAMPLE_PARAMS)
        assert s.free_coords() == pytest.approx(
            (3 / 10, 17 / 40, 1 / 2, 1 / 2, 1 / 3, 1 / 3), abs=1e-14
        )

    def test_symmetric_case_gives_uniform_strategy(self):
        s = optimal_strategy_from_params(
            CENTROID, ParamVector(1 / 6, 1 / 6, 1 / 6, 1 / 6)
        )
        assert s.free_coords() == pytest.approx((0.5,) * 6, abs=1e-14)

    def test_symmetric_case_round_trips(self):
        s = optimal_strategy_from_params(
            CENTROID, ParamVector(1 / 6, 1 / 6, 1 / 6, 1 / 6)
        )
        q = solve_optimal_frequencies(s)
        assert q.as_tuple() == pytest.approx(CENTROID.as_tuple(), abs=1e-12)

    def test_infeasible_params_raise(self):
        with pytest.raises(InfeasibleParametersError):
            optimal_strategy_from_params(CENTROID, ParamVector(0.5, 0.0, 0.0, 0.0))

    def test_boundary_triple_raises(self):
        with pytest.raises(BoundaryFrequencyError):
            optimal_strategy_from_params(
                FrequencyTriple(1.0, 0.0, 0.0), EXAMPLE_PARAMS
            )

    def test_constructed_strategies_are_optimal(self):
        rng = np.random.default_rng(23)
        for _ in range(2_000):
            q = FrequencyTriple(*rng.dirichlet((1.0, 1.0, 1.0)))
            params = draw_feasible_params(q, rng)
            s = optimal_strategy_from_params(q, params)
            assert is_optimal(s, q, 1e-10)
            for coord in s.free_coords():
                assert 0.0 <= coord <= 1.0

    def test_round_trip_recovers_frequencies(self):
        rng = np.random.default_rng(29)
        for _ in range(2_000):
            q = FrequencyTriple(*rng.dirichlet((1.0, 1.0, 1.0)))
            params = draw_feasible_params(q, rng)
            s = optimal_strategy_from_params(q, params)
            solved = solve_optimal_frequencies(s)
            assert solved.as_tuple() == pytest.approx(q.as_tuple(), abs=1e-9)


class TestSampleUniformStrategy:
    def test_coordinates_in_range(self):
        rng = np.random.default_rng(42)
        s = sample_uniform_strategy(rng)
        for coord in s.free_coords():
            assert 0.0 <= coord <= 1.0

    def test_same_seed_same_sequence(self):
        a = np.random.default_rng(99)
        b = np.random.default_rng(99)
        for _ in range(100):
            assert sample_uniform_strategy(a) == sample_uniform_strategy(b)

    def test_coordinate_means(self):
        rng = np.random.default_rng(5)
        totals = np.zeros(6)
        n = 100_000
        for _ in range(n):
            totals += sample_uniform_strategy(rng).free_coords()
        assert np.all(np.abs(totals / n - 0.5) < 0.005)


class TestSampleOptimalStrategy:
    def test_unfiltered_draw_is_optimal(self):
        rng = np.random.default_rng(3)
        s = sample_optimal_strategy(CENTROID, rng)
        assert is_optimal(s, CENTROID, 1e-9)

    def test_worked_example_triple_is_reachable(self):
        rng = np.random.default_rng(11)
        s = sample_optimal_strategy(EXAMPLE_Q, rng, max_tries=100_000)
        assert is_optimal(s, EXAMPLE_Q, 1e-9)

    def test_type2_intransitive_witness(self):
        rng = np.random.default_rng(17)
        wanted = (
            TransitivityLabel.INTRANSITIVE_FORWARD,
            TransitivityLabel.INTRANSITIVE_REVERSE,
        )
        s = sample_optimal_strategy(
            FrequencyTriple(0.4, 0.3, 0.3),
            rng,
            max_tries=100_000,
            class_filter=lambda s: classify(s).type2 in wanted,
        )
        assert classify(s).type2 in wanted
        assert is_optimal(s, FrequencyTriple(0.4, 0.3, 0.3), 1e-9)

    def test_exhaustion_raises(self):
        rng = np.random.default_rng(19)
        with pytest.raises(SamplingExhaustedError):
            sample_optimal_strategy(
                CENTROID, rng, max_tries=50, class_filter=lambda s: False
            )

    def test_boundary_triple_raises(self):
        rng = np.random.default_rng(19)
        with pytest.raises(BoundaryFrequencyError):
            sample_optimal_strategy(FrequencyTriple(0.0, 0.5, 0.5), rng)

    def test_max_tries_validated(self):
        rng = np.random.default_rng(19)
        with pytest.raises(ValueError):
            sample_optimal_strategy(CENTROID, rng, max_tries=0)
