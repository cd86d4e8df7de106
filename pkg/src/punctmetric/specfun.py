"""Gamma-family scalar special functions.

Everything here is a plain float -> float kernel: log-gamma, gamma, digamma,
the beta function, and the Ramanujan constant

    R(a, b) = -2*gamma_E - psi(a) - psi(b),

which is the additive constant in the logarithmic expansion of zero-balanced
hypergeometric functions near x = 1.  R(1/2, 1/2) = log 16.
"""

from __future__ import annotations

import math

from .errors import DomainError

# Euler-Mascheroni constant, -psi(1).
EULER_GAMMA = 0.57721566490153286

# psi(y) ~ log y - 1/(2y) - sum B_{2k} / (2k y^{2k}); coefficients below are
# -B_{2k}/(2k) for k = 1..7, applied in y^{-2} powers.
_DIGAMMA_ASYMP = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)

_DIGAMMA_SHIFT = 10.0


def _require_positive(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be a positive finite real, got {x!r}")
    return x


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    x = _require_positive(x, "x")
    return math.lgamma(x)


def gamma(x: float) -> float:
    """Gamma(x) for x > 0."""
    x = _require_positive(x, "x")
    return math.gamma(x)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0.

    Upward recurrence psi(x) = psi(x+1) - 1/x lifts the argument to
    y >= 10, where the truncated Bernoulli series is good to ~4e-17.
    """
    x = _require_positive(x, "x")
    acc = 0.0
    y = x
    while y < _DIGAMMA_SHIFT:
        acc -= 1.0 / y
        y += 1.0
    inv2 = 1.0 / (y * y)
    tail = 0.0
    power = inv2
    for coeff in _DIGAMMA_ASYMP:
        tail += coeff * power
        power *= inv2
    return acc + math.log(y) - 0.5 / y + tail


def beta(a: float, b: float) -> float:
    """Euler beta B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) for a, b > 0."""
    a = _require_positive(a, "a")
    b = _require_positive(b, "b")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def ramanujan_r(a: float, b: float) -> float:
    """R(a, b) = -2*gamma_E - psi(a) - psi(b) for a, b > 0."""
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(b)
