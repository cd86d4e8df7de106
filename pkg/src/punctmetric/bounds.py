"""Distance and density bounds for plane domains with punctures.

Two families of certified estimates:

* a lower bound for the hyperbolic distance in a domain omitting a
  sequence of points whose moduli grow by at most a factor e^c per step
  (``ring_lower_bound``), together with the two classical coefficient
  choices it improves on (``baseline_bounds``);
* a two-sided sandwich for the density of a finitely punctured plane,
  driven by the log-distance from z to the nearest puncture circle
  (``rho_bounds``), and the pairwise sup of two-puncture densities
  (``sigma_lower``).

Everything here is a bound, never an approximation: a value is only
returned when the hypothesis it needs has been checked, and outputs
err on the safe side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import metric
from .errors import DomainError

__all__ = [
    "PuncturedDomain",
    "RingBoundParams",
    "BaselineBounds",
    "RhoBounds",
    "ring_gap",
    "ring_coefficients",
    "ring_lower_bound",
    "baseline_bounds",
    "rho_bounds",
    "sigma_lower",
]


@dataclass(frozen=True)
class PuncturedDomain:
    """The complement of a finite set of at least two distinct points."""

    punctures: tuple[complex, ...]

    def __init__(self, punctures: Sequence[complex]):
        pts = tuple(complex(p) for p in punctures)
        if len(pts) < 2:
            raise DomainError(
                "need at least two punctures for a hyperbolic domain, "
                f"got {len(pts)}")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] == pts[j]:
                    raise DomainError(
                        f"punctures must be pairwise distinct; "
                        f"index {i} and {j} are both {pts[i]!r}")
        object.__setattr__(self, "punctures", pts)

    def _check_interior(self, z: complex) -> complex:
        z = complex(z)
        if z in self.punctures:
            raise DomainError(f"z = {z!r} is a puncture of the domain")
        return z


class RingBoundParams(NamedTuple):
    c: float
    A: float
    B: float


class BaselineBounds(NamedTuple):
    sv512_A: float
    bp_A: float
    bp_B: float


class RhoBounds(NamedTuple):
    lower: float
    upper: float


def _check_gap(c: float) -> float:
    c = float(c)
    if not (c > 0.0) or not math.isfinite(c):
        raise DomainError(f"log-ratio gap c must be positive, got {c!r}")
    return c


def ring_gap(punctures: Sequence[complex], r1: float | None = None) -> float:
    """Validate a puncture sequence for the ring bound; return its gap.

    The sequence must start at 0 and have nondecreasing positive moduli
    after that, in the order given (the hypothesis is about the sequence,
    so nothing is re-sorted here).  The returned value is the smallest c
    with |a_{n+1}| <= e^c |a_n| along the list, i.e. the largest step of
    log|a_n|; any gap >= max(that, 0+) is admissible.  With only two
    points there is no constrained step and 0.0 comes back.

    When ``r1`` is given, also check the base-point condition
    e^{-c/2} |a_1| <= r1 that the distance bound needs.
    """
    pts = [complex(p) for p in punctures]
    if len(pts) < 2:
        raise DomainError("need at least the punctures a0 = 0 and a1")
    if pts[0] != 0:
        raise DomainError(f"the sequence must start at 0, got {pts[0]!r}")
    moduli = [abs(p) for p in pts]
    if not moduli[1] > 0.0:
        raise DomainError("a1 must be nonzero")
    for n in range(1, len(moduli) - 1):
        if moduli[n + 1] < moduli[n]:
            raise DomainError(
                f"moduli must be nondecreasing; |a{n + 1}| < |a{n}|")
    seen = set(pts)
    if len(seen) != len(pts):
        raise DomainError("punctures must be pairwise distinct")
    c = 0.0
    for n in range(1, len(moduli) - 1):
        c = max(c, math.log(moduli[n + 1]) - math.log(moduli[n]))
    if r1 is not None:
        r1 = float(r1)
        # the theorem covers |z1| down to e^{-c/2}|a1| only
        if math.exp(-0.5 * c) * moduli[1] > r1:
            raise DomainError(
                f"r1 = {r1!r} lies below the admissible floor "
                f"{math.exp(-0.5 * c) * moduli[1]!r}")
    return c


def ring_coefficients(c: float) -> RingBoundParams:
    """Slope and offset of the log-modulus distance bound for gap c."""
    c = _check_gap(c)
    a = metric.varphi(c) / c
    b = metric.varphi(c) - metric.varphi(0.5 * c)
    return RingBoundParams(c, a, b)


def ring_lower_bound(c: float, r1: float, r2: float) -> float:
    """Lower bound for the hyperbolic distance between moduli r1 <= r2.

    Valid in any domain omitting a sequence of points admissible for
    ``ring_gap`` at this c, provided r1 clears the e^{-c/2}|a1| floor
    (the caller's duty, or use ring_gap with r1).  Clamped at 0: a
    negative raw value just means the bound says nothing there.
    """
    c = _check_gap(c)
    r1 = float(r1)
    r2 = float(r2)
    if not (0.0 < r1 <= r2):
        raise DomainError(f"need 0 < r1 <= r2, got r1={r1!r}, r2={r2!r}")
    params = ring_coefficients(c)
    raw = params.A * (math.log(r2) - math.log(r1)) - params.B
    return max(0.0, raw)


def baseline_bounds(c: float) -> BaselineBounds:
    """The two classical coefficient pairs the ring bound is compared to.

    ``sv512_A`` with offset 0, and (``bp_A``, ``bp_B``), under the same
    hypotheses as ``ring_lower_bound``.
    """
    c = _check_gap(c)
    two_c0 = 2.0 * metric.c0()
    return BaselineBounds(
        sv512_A=metric.h(0.5 * c),
        bp_A=math.log1p(c / two_c0) / c,
        bp_B=c / (4.0 * math.pi),
    )


def _log_gap(dom: PuncturedDomain, a: complex, s: float) -> float:
    # m(a, s): distance from s to the log-moduli of the other punctures,
    # as seen from a
    best = math.inf
    for b in dom.punctures:
        if b == a:
            continue
        r = abs(b - a)
        if r == 0.0:
            continue
        best = min(best, abs(s - math.log(r)))
    return best


# Certified intervals must absorb their own rounding: h and lambda01 go
# through agm/log chains that are only good to a few ulps, and on the
# negative axis the lower bound coincides with the exact density, so
# without one-sided slack the ordering lower <= rho would be a coin flip.
_EVAL_SLACK = 4e-15


def rho_bounds(dom: PuncturedDomain, z: complex) -> RhoBounds:
    """Two-sided bounds for the hyperbolic density at z.

    For each puncture a the quantity m = m(a, log|z-a|) sandwiches
    |z-a| rho(z) between h(m) and pi/(4m).  The lower bound takes the
    best puncture; the upper bound takes the best finite candidate and
    is +inf when every m vanishes (z on a critical circle of every
    puncture).
    """
    z = dom._check_interior(z)
    lower = 0.0
    upper = math.inf
    for a in dom.punctures:
        d = abs(z - a)
        s = math.log(d)
        m = _log_gap(dom, a, s)
        lower = max(lower, metric.h(m) / d)
        if m > 0.0:
            upper = min(upper, math.pi / (4.0 * m * d))
    lower *= 1.0 - _EVAL_SLACK
    if math.isfinite(upper):
        upper *= 1.0 + _EVAL_SLACK
    return RhoBounds(lower, upper)


def sigma_lower(dom: PuncturedDomain, z: complex) -> float:
    """Best two-puncture density at z, a certified lower bound.

    Every ordered pair (a, b) of punctures gives the density of the
    plane punctured at a and b alone, pulled back through the affine
    map sending them to 0 and 1; the sup over pairs minorizes the
    density of the full domain.
    """
    z = dom._check_interior(z)
    best = 0.0
    for a in dom.punctures:
        for b in dom.punctures:
            if b == a:
                continue
            w = (z - a) / (b - a)
            best = max(best, metric.lambda01_lower(w) / abs(b - a))
    return best * (1.0 - _EVAL_SLACK)
