"""Tests for the discrete OU predictor model."""
import math

import numpy as np
import pytest

from bandopt.ou_model import (
    CostParams,
    OuParams,
    cost_ratio,
    from_dimensionless,
    gamma_for_ratio,
    sample_path,
    stationary_std,
    step,
    to_dimensionless,
)


class TestParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            OuParams(epsilon=0.0, beta=0.01)
        with pytest.raises(ValueError):
            OuParams(epsilon=2.0, beta=0.01)
        with pytest.raises(ValueError):
            OuParams(epsilon=0.01, beta=0.0)
        with pytest.raises(ValueError):
            CostParams(gamma=-1.0)
        CostParams(gamma=0.0)  # frictionless is allowed


class TestStep:
    def test_arithmetic(self):
        params = OuParams(epsilon=0.25, beta=2.0)
        assert step(1.0, params, 0.5) == 1.0 * 0.75 + 2.0 * 0.5

    def test_zero_noise_decay(self):
        params = OuParams(epsilon=0.1, beta=1.0)
        p = 1.0
        for _ in range(10):
            p = step(p, params, 0.0)
        assert p == pytest.approx(0.9**10, rel=1e-15)


class TestStationaryStd:
    def test_formula(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        assert stationary_std(params) == pytest.approx(
            0.01 / math.sqrt(0.01 * 1.99), rel=1e-15)
        # headline scale of the benchmark parameter point
        assert stationary_std(params) == pytest.approx(0.0709, abs=5e-5)

    def test_matches_long_run_variance(self):
        params = OuParams(epsilon=0.2, beta=0.1)
        path = sample_path(params, 0.0, 200_000, seed=3)
        # discard burn-in; MC error on the std is ~0.3%
        sd = float(np.std(path.values[1000:]))
        assert sd == pytest.approx(stationary_std(params), rel=0.02)


class TestDimensionless:
    def test_scale_point(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        assert to_dimensionless(params.beta / math.sqrt(params.epsilon), params) \
            == pytest.approx(1.0, rel=1e-15)
        assert to_dimensionless(0.1, params) == pytest.approx(1.0, rel=1e-15)
        assert to_dimensionless(0.0, params) == 0.0

    def test_round_trip(self):
        params = OuParams(epsilon=0.037, beta=0.0213)
        p = np.linspace(-2.0, 2.0, 41)
        back = from_dimensionless(to_dimensionless(p, params), params)
        assert np.allclose(back, p, rtol=4e-16, atol=0)


class TestCostRatio:
    def test_values(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        assert cost_ratio(params, CostParams(gamma=0.0)) == 0.0
        assert cost_ratio(params, CostParams(gamma=1.0)) == pytest.approx(0.1, rel=1e-14)
        params2 = OuParams(epsilon=0.04, beta=0.02)
        assert cost_ratio(params2, CostParams(gamma=1.0)) == pytest.approx(0.4, rel=1e-14)

    def test_gamma_for_ratio_inverts(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        costs = gamma_for_ratio(params, 0.1)
        assert costs.gamma == pytest.approx(1.0, rel=1e-14)
        assert cost_ratio(params, costs) == pytest.approx(0.1, rel=1e-14)


class TestSamplePath:
    def test_shape_and_start(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        path = sample_path(params, 0.5, 100, seed=11)
        assert path.values.shape == (101,)
        assert path.values[0] == 0.5

    def test_deterministic_and_stream_independent(self):
        params = OuParams(epsilon=0.01, beta=0.01)
        a = sample_path(params, 0.0, 500, seed=(42, 0))
        b = sample_path(params, 0.0, 500, seed=(42, 0))
        c = sample_path(params, 0.0, 500, seed=(42, 1))
        assert np.array_equal(a.values, b.values)
        assert not np.array_equal(a.values, c.values)

    def test_matches_naive_recursion_exactly(self):
        # the IIR filter must reproduce the textbook loop bit for bit
        params = OuParams(epsilon=0.3, beta=0.7)
        path = sample_path(params, 1.3, 64, seed=5)
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(5)))
        xi = rng.standard_normal(64)
        p = 1.3
        for t in range(64):
            p = p * (1.0 - params.epsilon) + params.beta * xi[t]
            assert path.values[t + 1] == p

    def test_autocovariance_decay(self):
        params = OuParams(epsilon=0.2, beta=0.1)
        path = sample_path(params, 0.0, 200_000, seed=99)
        x = path.values[1000:]
        x = x - x.mean()
        var = float(np.dot(x, x) / x.size)
        target = stationary_std(params) ** 2
        assert var == pytest.approx(target, rel=0.03)
        for lag in (1, 2, 5):
            acov = float(np.dot(x[:-lag], x[lag:]) / (x.size - lag))
            assert acov == pytest.approx(target * (1 - params.epsilon) ** lag,
                                         abs=6e-4 * target + 0.02 * target *
                                         (1 - params.epsilon) ** lag)

    def test_rejects_negative_length(self):
        with pytest.raises(ValueError):
            sample_path(OuParams(0.1, 1.0), 0.0, -1, seed=0)
