"""Pure numpy fallback for the compiled kernels.

Kept operation-for-operation equivalent to _speedups.pyx: the policy
loop runs over time with all paths vectorized, and the accumulation
order per path is identical, so results agree with the compiled version
to the last bit on the same platform.
"""
from __future__ import annotations

import numpy as np


def run_band_policy(paths, lower, upper, gamma, positions=None):
    n, m = paths.shape
    gain = np.zeros(n)
    risk = np.zeros(n)
    cost = np.zeros(n)
    pi = np.zeros(n)
    if positions is not None:
        positions[:, 0] = pi
    for t in range(1, m):
        new_pi = np.clip(pi, lower[:, t], upper[:, t])
        cost += gamma * np.abs(new_pi - pi)
        pi = new_pi
        gain += paths[:, t] * pi
        risk += 0.5 * pi * pi
        if positions is not None:
            positions[:, t] = pi
    return gain, risk, cost


def l1_max_envelope(values, cost):
    shifted_up = values + cost[None, :]
    shifted_dn = values - cost[None, :]
    left = np.maximum.accumulate(shifted_up, axis=1) - cost[None, :]
    right = np.maximum.accumulate(shifted_dn[:, ::-1], axis=1)[:, ::-1] + cost[None, :]
    return np.maximum(left, right)
