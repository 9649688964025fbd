# cython: language_level=3
"""Compiled kernels: band-policy simulation and the L1-penalized maximum.

Must stay numerically interchangeable with _kernels_py (same operation
order), only faster. The simulation loop is inherently sequential in t,
which is why a compiled path pays off.
"""
import numpy as np

cimport numpy as cnp

cnp.import_array()


def run_band_policy(double[:, ::1] paths, double[:, ::1] lower,
                    double[:, ::1] upper, double gamma, positions=None):
    """Clamp a position into [lower, upper] along each path, accruing PnL.

    paths, lower, upper: (n_paths, n_steps+1), column 0 is the starting
    predictor (no trading happens there). Returns per-path (gain, risk,
    cost) totals; pass a matching positions array to record the held
    position after each step.
    """
    cdef Py_ssize_t n = paths.shape[0]
    cdef Py_ssize_t m = paths.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] gain = np.zeros(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] risk = np.zeros(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cost = np.zeros(n)
    cdef double[:, ::1] pos
    cdef bint track = positions is not None
    if track:
        pos = positions
    cdef Py_ssize_t i, t
    cdef double pi, lo, hi, g, r, c
    for i in range(n):
        pi = 0.0
        g = 0.0
        r = 0.0
        c = 0.0
        if track:
            pos[i, 0] = pi
        for t in range(1, m):
            lo = lower[i, t]
            hi = upper[i, t]
            if pi < lo:
                c += gamma * (lo - pi)
                pi = lo
            elif pi > hi:
                c += gamma * (pi - hi)
                pi = hi
            g += paths[i, t] * pi
            r += 0.5 * pi * pi
            if track:
                pos[i, t] = pi
        gain[i] = g
        risk[i] = r
        cost[i] = c
    return gain, risk, cost


def l1_max_envelope(double[:, ::1] values, double[::1] cost):
    """Row-wise W[i,j] = max_k values[i,k] - (cost[j] - cost[k] signed).

    cost must be nondecreasing (for cost[j] = gamma * x[j] on a sorted
    grid the penalty gamma*|x_j - x_k| = |cost[j] - cost[k]|). Two
    running-max sweeps replace the quadratic scan.
    """
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = values.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, m))
    cdef double[:, ::1] w = out
    cdef Py_ssize_t i, j
    cdef double running, cand
    for i in range(n):
        running = -np.inf
        for j in range(m):
            cand = values[i, j] + cost[j]
            if cand > running:
                running = cand
            w[i, j] = running - cost[j]
        running = -np.inf
        for j in range(m - 1, -1, -1):
            cand = values[i, j] - cost[j]
            if cand > running:
                running = cand
            if running + cost[j] > w[i, j]:
                w[i, j] = running + cost[j]
    return out
