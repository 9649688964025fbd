"""Discrete Ornstein-Uhlenbeck predictor and its parameter bookkeeping.

The signal follows p_{t+1} = p_t (1 - epsilon) + beta * xi_t with iid
standard normal steps. Everything downstream is controlled by the
dimensionless rescaling q = p * sqrt(epsilon) / beta and the single cost
ratio Gamma * epsilon^{3/2} / beta.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

__all__ = [
    "OuParams",
    "CostParams",
    "PredictorPath",
    "step",
    "sample_path",
    "stationary_std",
    "to_dimensionless",
    "from_dimensionless",
    "cost_ratio",
    "gamma_for_ratio",
]


@dataclass(frozen=True)
class OuParams:
    """Mean-reversion rate epsilon and innovation scale beta."""

    epsilon: float
    beta: float

    def __post_init__(self):
        if not (0.0 < self.epsilon < 2.0):
            raise ValueError(f"epsilon must lie in (0, 2) for stationarity, "
                             f"got {self.epsilon}")
        if not (self.beta > 0.0 and math.isfinite(self.beta)):
            raise ValueError(f"beta must be positive and finite, got {self.beta}")


@dataclass(frozen=True)
class CostParams:
    """Proportional transaction cost Gamma per unit traded."""

    gamma: float

    def __post_init__(self):
        if not (self.gamma >= 0.0 and math.isfinite(self.gamma)):
            raise ValueError(f"gamma must be nonnegative and finite, got {self.gamma}")


@dataclass(frozen=True)
class PredictorPath:
    """A simulated predictor trajectory; values[0] is the start state p0."""

    values: np.ndarray
    params: OuParams
    seed: object


def step(p: float, params: OuParams, xi: float) -> float:
    """One transition of the predictor recursion."""
    return p * (1.0 - params.epsilon) + params.beta * xi


def sample_path(params: OuParams, p0: float, length: int, seed) -> PredictorPath:
    """Simulate `length` steps from p0 with counter-based (Philox) noise.

    seed may be an int or a tuple of ints; it feeds a SeedSequence, so
    (base_seed, path_index) tuples give independent streams that are
    reproducible regardless of how many paths are drawn.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    xi = rng.standard_normal(length)
    values = np.empty(length + 1)
    values[0] = p0
    if length:
        # IIR form of the recursion; identical arithmetic to a direct loop
        decay = 1.0 - params.epsilon
        values[1:] = lfilter([params.beta], [1.0, -decay], xi, zi=[decay * p0])[0]
    return PredictorPath(values=values, params=params, seed=seed)


def stationary_std(params: OuParams) -> float:
    """Exact standard deviation of the discrete stationary law.

    Var p = beta^2 / (1 - (1-eps)^2) = beta^2 / (eps (2 - eps)).
    """
    return params.beta / math.sqrt(params.epsilon * (2.0 - params.epsilon))


def to_dimensionless(p, params: OuParams):
    """q = p sqrt(eps) / beta, the scale in which the band equation lives."""
    return p * (math.sqrt(params.epsilon) / params.beta)


def from_dimensionless(q, params: OuParams):
    return q / (math.sqrt(params.epsilon) / params.beta)


def cost_ratio(params: OuParams, costs: CostParams) -> float:
    """Gamma eps^{3/2} / beta, the lone dimensionless knob of the problem."""
    return costs.gamma * params.epsilon ** 1.5 / params.beta


def gamma_for_ratio(params: OuParams, ratio: float) -> CostParams:
    """Inverse of cost_ratio: the Gamma that realizes a requested ratio."""
    if ratio < 0:
        raise ValueError("ratio must be nonnegative")
    return CostParams(gamma=ratio * params.beta / params.epsilon ** 1.5)
