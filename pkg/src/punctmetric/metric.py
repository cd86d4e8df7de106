"""Hyperbolic-metric quantities of the twice-punctured plane C \\ {0, 1}.

On the negative real axis the density of the hyperbolic metric (curvature
-4) has the closed form

    lambda01(-x) = pi / (8 x K(r) K(r')),   r = sqrt(x/(1+x)),

and the distance between negative-axis points is driven by

    Phi(x) = (1/2) log(K(r)/K(r')),
    d01(-x, -y) = |Phi(x) - Phi(y)|.

The whole-axis behaviour is captured by h(t) = e^t lambda01(-e^t), its
reciprocal H = 1/h, and phi(t) = 2 Phi(e^{t/2}).  h and H are computed
through the AGM on complement-stable moduli, so they stay accurate for
|t| up to 700 where the direct K(r) route would have lost r' entirely.
For complex arguments only one-sided bounds are available: the density
and distance on the negative axis minorize their values anywhere on the
circle of the same modulus, which is what lambda01_lower and d01_lower
return.
"""

from __future__ import annotations

import math

from . import pqfun
from .elliptic import agm, ellip_k
from .errors import DomainError, RangeError

# Largest |t| accepted by h / big_h; e^700 is still finite and the
# complement modulus e^{-350} is a healthy normal float.
T_CAP = 700.0

_HALF = pqfun.ZeroBalancedPair(0.5, 0.5)

# Gamma(1/4)^4 / (4 pi^2), evaluated once.
_C0 = math.gamma(0.25) ** 4 / (4.0 * math.pi * math.pi)


def _check_positive_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be positive finite, got {x!r}")
    return x


def _moduli(x: float) -> tuple[float, float]:
    """(r, r') for the point -x: r = sqrt(x/(1+x)), r' = sqrt(1/(1+x))."""
    return math.sqrt(x / (1.0 + x)), math.sqrt(1.0 / (1.0 + x))


def c0() -> float:
    """The constant C0 = Gamma(1/4)^4 / (4 pi^2) = 1/(2 lambda01(-1))."""
    return _C0


def lambda01_neg(x: float) -> float:
    """Density of the hyperbolic metric of C \\ {0,1} at the point -x, x > 0.

    lambda01(-x) = pi / (8 x K(r) K(r')) with r = sqrt(x/(1+x)).  Extreme
    x (beyond ~5e11 or below its reciprocal) push a modulus past what
    ellip_k accepts and raise its range error; h covers that regime on
    the t = log x scale.
    """
    x = _check_positive_x(x)
    r, r_comp = _moduli(x)
    return math.pi / (8.0 * x * ellip_k(r) * ellip_k(r_comp))


def phi_func(x: float) -> float:
    """Phi(x) = (1/2) log(K(r)/K(r')), r = sqrt(x/(1+x)); Phi(1) = 0.

    Strictly increasing, odd under inversion: Phi(1/x) = -Phi(x).
    The K-ratio is taken as agm(1,r)/agm(1,r') with both moduli computed
    directly from x; reconstructing r' from r inside K would halve the
    accuracy once r is within ~1e-9 of 1 (x beyond ~1e9).
    """
    x = _check_positive_x(x)
    r, r_comp = _moduli(x)
    return 0.5 * math.log(agm(1.0, r) / agm(1.0, r_comp))


def d01_neg(x: float, y: float) -> float:
    """Hyperbolic distance d01(-x, -y) = |Phi(x) - Phi(y)| for x, y > 0."""
    return abs(phi_func(x) - phi_func(y))


def _check_t(t: float) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    if abs(t) > T_CAP:
        raise RangeError(
            f"|t| must not exceed {T_CAP} (asymptotics are not silently "
            f"substituted), got {t!r}"
        )
    return t


def h(t: float) -> float:
    """h(t) = e^t lambda01(-e^t) = pi / (8 K(m) K(m')), even in t.

    The moduli m = 1/sqrt(1+e^t) and m' = 1/sqrt(1+e^{-t}) are
    complementary, so both AGMs run on arguments derived from e^{-|t|}
    without cancellation:

        h(t) = agm(1, m) agm(1, m') / (2 pi).

    Strictly decreasing in |t| from h(0) = 1/(2 C0) to 0;  t h(t) < 1/2.
    """
    t = _check_t(t)
    w = math.exp(-abs(t))
    root = math.sqrt(1.0 + w)
    m_small = math.sqrt(w) / root  # 1/sqrt(1+e^{|t|})
    m_large = 1.0 / root           # 1/sqrt(1+e^{-|t|})
    return agm(1.0, m_small) * agm(1.0, m_large) / (2.0 * math.pi)


def big_h(t: float) -> float:
    """H(t) = 1/h(t); even, strictly convex, H(0) = 2 C0.

    Cross-module identity: H(t) = 2 pi P(t) for the pair a = b = 1/2.
    """
    return 1.0 / h(t)


def big_h_prime(t: float) -> float:
    """H'(t) = 2 pi P'(t) at a = b = 1/2; odd, range (-2, 2).

    Evaluated through the analytic P' formula, not differenced, so it is
    exactly 0 at t = 0 and exactly odd.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    return 2.0 * math.pi * pqfun.p_prime(_HALF, t)


def varphi(t: float) -> float:
    """phi(t) = 2 Phi(e^{t/2}) for t > 0.

    Evaluated through the exact identity phi(t) = q(t/2) for the pair
    a = b = 1/2 (the quotient form stays accurate for all t, while the
    elliptic route loses the complementary modulus past t ~ 55).
    Strictly increasing and concave, phi(t) ~ log(t + log 256) - log(2 pi)
    as t -> infinity.
    """
    t = float(t)
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"varphi requires t > 0, got {t!r}")
    return pqfun.q_log(_HALF, 0.5 * t)


def _check_not_puncture(z: complex, name: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must be finite, got {z!r}")
    if z == 0 or z == 1:
        raise DomainError(f"{name} must avoid the punctures 0 and 1, got {z!r}")
    return z


def lambda01_lower(z: complex) -> float:
    """Certified lower bound lambda01(-|z|) <= lambda01(z) for z not 0, 1.

    Tight exactly on the negative real axis; elsewhere it is the minimum
    of the density over the circle |w| = |z|.
    """
    z = _check_not_puncture(z, "z")
    return lambda01_neg(abs(z))


def d01_lower(z: complex, w: complex) -> float:
    """Certified lower bound d01(-|z|, -|w|) <= d01(z, w) for z, w not 0, 1.

    Vanishes whenever |z| = |w| (the bound carries no angular
    information); tight when both points sit on the negative real axis.
    """
    z = _check_not_puncture(z, "z")
    w = _check_not_puncture(w, "w")
    return d01_neg(abs(z), abs(w))
