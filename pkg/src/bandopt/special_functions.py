"""Log-scaled arithmetic and exponential-quadratic integrals.

Everything downstream of the band equation involves integrals of e^{x^2}
and e^{-x^2} whose magnitudes can span hundreds of orders of magnitude.
Values are therefore carried as (sign, log magnitude) pairs and combined
in log space; differences that cancel catastrophically are collapsed to
an exact zero and flagged instead of returning noise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import dawsn, erf, erfcx

__all__ = [
    "LogScaled",
    "dawson",
    "dawson_integral",
    "exp_square_dawson",
    "int_exp_plus",
    "int_exp_minus",
    "double_integral_k",
]

_SQRT_PI = math.sqrt(math.pi)
# relative difference below which a log-space subtraction is treated as
# an exact cancellation rather than trusted to its surviving digits
_CANCEL_RTOL = 1e-13
# largest log magnitude exp() can represent in float64
_EXP_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class LogScaled:
    """A real number stored as sign * exp(log_mag).

    sign is -1, 0 or +1; log_mag is -inf exactly when sign is 0.  The
    cancelled flag marks a zero produced by subtracting two values whose
    relative difference was below 1e-13, so callers can distinguish a
    structural zero from lost precision.
    """

    sign: int
    log_mag: float
    cancelled: bool = False

    @staticmethod
    def from_float(x: float) -> "LogScaled":
        if not math.isfinite(x):
            raise ValueError(f"LogScaled requires a finite value, got {x}")
        if x == 0.0:
            return LogScaled(0, -math.inf)
        return LogScaled(1 if x > 0 else -1, math.log(abs(x)))

    @staticmethod
    def from_log(sign: int, log_mag: float) -> "LogScaled":
        if sign == 0 or log_mag == -math.inf:
            return LogScaled(0, -math.inf)
        return LogScaled(1 if sign > 0 else -1, float(log_mag))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.log_mag > _EXP_MAX:
            return math.inf * self.sign  # saturates, document at call sites
        return self.sign * math.exp(self.log_mag)

    def __neg__(self) -> "LogScaled":
        return LogScaled(-self.sign, self.log_mag, self.cancelled)

    def __abs__(self) -> "LogScaled":
        return LogScaled(abs(self.sign), self.log_mag, self.cancelled)

    def __mul__(self, other: "LogScaled") -> "LogScaled":
        s = self.sign * other.sign
        if s == 0:
            return LogScaled(0, -math.inf, self.cancelled or other.cancelled)
        return LogScaled(s, self.log_mag + other.log_mag,
                         self.cancelled or other.cancelled)

    def __truediv__(self, other: "LogScaled") -> "LogScaled":
        if other.sign == 0:
            raise ZeroDivisionError("LogScaled division by zero")
        if self.sign == 0:
            return self
        return LogScaled(self.sign * other.sign, self.log_mag - other.log_mag,
                         self.cancelled or other.cancelled)

    def __add__(self, other: "LogScaled") -> "LogScaled":
        if self.sign == 0:
            return LogScaled(other.sign, other.log_mag,
                             self.cancelled or other.cancelled)
        if other.sign == 0:
            return LogScaled(self.sign, self.log_mag,
                             self.cancelled or other.cancelled)
        flag = self.cancelled or other.cancelled
        hi, lo = (self, other) if self.log_mag >= other.log_mag else (other, self)
        d = lo.log_mag - hi.log_mag  # <= 0
        if self.sign == other.sign:
            return LogScaled(self.sign, hi.log_mag + math.log1p(math.exp(d)), flag)
        # opposite signs: relative difference of the magnitudes is ~ -d
        if -d < _CANCEL_RTOL:
            return LogScaled(0, -math.inf, True)
        return LogScaled(hi.sign, hi.log_mag + math.log1p(-math.exp(d)), flag)

    def __sub__(self, other: "LogScaled") -> "LogScaled":
        return self + (-other)

    def _key(self):
        # orderable proxy: sign-major, magnitude-minor
        return (self.sign, self.sign * self.log_mag if self.sign != 0 else 0.0)

    def __lt__(self, other: "LogScaled") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "LogScaled") -> bool:
        return self._key() <= other._key()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogScaled):
            return NotImplemented
        return self.sign == other.sign and self.log_mag == other.log_mag


def dawson(x):
    """Dawson integral D(x) = e^{-x^2} int_0^x e^{t^2} dt."""
    return dawsn(x)


_GL_NODES, _GL_WEIGHTS = leggauss(20)


def _gauss_legendre(f, a: float, b: float) -> float:
    h = 0.5 * (b - a)
    return h * float(np.dot(_GL_WEIGHTS, f(0.5 * (a + b) + h * _GL_NODES)))


def dawson_integral(lo: float, hi: float) -> float:
    """int_lo^hi D(y) dy by composite 20-node Gauss-Legendre panels.

    D is smooth with bounded derivatives, so panels at most 0.5 wide give
    close to machine precision for any finite interval.
    """
    if lo == hi:
        return 0.0
    if lo > hi:
        return -dawson_integral(hi, lo)
    n = max(1, int(math.ceil((hi - lo) / 0.5)))
    edges = np.linspace(lo, hi, n + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    nodes = mids[:, None] + half * _GL_NODES[None, :]
    return half * float(np.sum(dawsn(nodes) @ _GL_WEIGHTS))


def exp_square_dawson(x: float) -> LogScaled:
    """e^{x^2} D(x) as a LogScaled value.

    This is the antiderivative of e^{x^2} (equal to (sqrt(pi)/2) erfi(x))
    written so the exponent never materializes.
    """
    if x == 0.0:
        return LogScaled(0, -math.inf)
    d = float(dawsn(x))
    return LogScaled.from_log(1 if d > 0 else -1, x * x + math.log(abs(d)))


def int_exp_plus(lo: float, hi: float) -> LogScaled:
    """int_lo^hi e^{x^2} dx in log scale."""
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("int_exp_plus requires finite endpoints")
    return exp_square_dawson(hi) - exp_square_dawson(lo)


def int_exp_minus(lo: float, hi: float) -> LogScaled:
    """int_lo^hi e^{-x^2} dx in log scale.

    Same-sign endpoints use the scaled complementary error function so
    that the result stays accurate when both tails are far out; nearly
    equal endpoints fall back to a scaled quadrature panel to avoid the
    erfcx difference cancelling.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("int_exp_minus requires finite endpoints")
    if lo == hi:
        return LogScaled(0, -math.inf)
    if lo > hi:
        return -int_exp_minus(hi, lo)
    if lo < 0.0 and hi <= 0.0:
        return int_exp_minus(-hi, -lo)
    if lo < 0.0:
        # straddles zero: erf difference has no cancellation
        val = 0.5 * _SQRT_PI * (float(erf(hi)) - float(erf(lo)))
        return LogScaled.from_log(1, math.log(val))
    # both endpoints >= 0
    d2 = (hi - lo) * (hi + lo)  # hi^2 - lo^2 >= 0
    if d2 <= 0.125:
        # factor out e^{-lo^2}; remaining integrand varies by < e^{0.125}
        scaled = _gauss_legendre(lambda x: np.exp(-(x - lo) * (x + lo)), lo, hi)
        return LogScaled.from_log(1, -lo * lo + math.log(scaled))
    inner = 0.5 * _SQRT_PI * (float(erfcx(lo)) - math.exp(-d2) * float(erfcx(hi)))
    return LogScaled.from_log(1, -lo * lo + math.log(inner))


def double_integral_k(q1: float, q2: float) -> LogScaled:
    """Double integral of e^{x^2 - y^2} over the wedge q2 <= x <= y <= q1.

    Reduces to a one dimensional problem through d/dy (e^{y^2} D(y)) =
    e^{y^2}:

        K = int_{q2}^{q1} D(y) dy  -  e^{q2^2} D(q2) * int_{q2}^{q1} e^{-y^2} dy

    Both terms stay representable even when e^{q2^2} alone would not.
    """
    if q2 > q1:
        raise ValueError(f"double_integral_k requires q2 <= q1, got ({q1}, {q2})")
    if q1 == q2:
        return LogScaled(0, -math.inf)
    dD = LogScaled.from_float(dawson_integral(q2, q1))
    return dD + exp_square_dawson(q2) * int_exp_minus(q1, q2)
