"""Kernel dispatch: compiled extension when available, numpy otherwise.

USING_COMPILED tells callers (and the benchmark) which one was picked.
Both implementations share the operation order, so swapping them does
not change results beyond the last bit.
"""
from __future__ import annotations

import numpy as np

try:
    from . import _speedups as _impl

    USING_COMPILED = True
except ImportError:  # extension not built; pure-python install
    from . import _kernels_py as _impl

    USING_COMPILED = False


def _as_matrix(a, name: str) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.float64)
    if out.ndim != 2:
        raise ValueError(f"{name} must be 2-d, got shape {out.shape}")
    return out


def run_band_policy(paths, lower, upper, gamma: float, positions=None):
    """Simulate the clamp-to-band trading rule along each path.

    paths, lower, upper are (n_paths, n_steps+1); column 0 is the start
    state where no trade occurs. Returns per-path arrays (gain, risk,
    cost); total PnL per path is gain - risk - cost.
    """
    paths = _as_matrix(paths, "paths")
    lower = _as_matrix(lower, "lower")
    upper = _as_matrix(upper, "upper")
    if not (paths.shape == lower.shape == upper.shape):
        raise ValueError("paths, lower, upper must have identical shapes")
    if positions is not None and (positions.shape != paths.shape
                                  or positions.dtype != np.float64
                                  or not positions.flags.c_contiguous):
        raise ValueError("positions must be a C-contiguous float64 array "
                         "matching paths.shape")
    return _impl.run_band_policy(paths, lower, upper, float(gamma), positions)


def l1_max_envelope(values, cost):
    """W[i,j] = max_k (values[i,k] - |cost[j] - cost[k]|), cost nondecreasing.

    With cost = gamma * position_grid this is the best attainable value at
    each position when moving costs gamma per unit. Linear time per row.
    """
    values = _as_matrix(values, "values")
    cost = np.ascontiguousarray(cost, dtype=np.float64)
    if cost.ndim != 1 or cost.shape[0] != values.shape[1]:
        raise ValueError("cost must be 1-d with length values.shape[1]")
    if np.any(np.diff(cost) < 0):
        raise ValueError("cost must be nondecreasing")
    return _impl.l1_max_envelope(values, cost)
