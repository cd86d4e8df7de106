"""Named verification checks for the monotonicity, convexity, and bound
claims the rest of the package relies on.

Each check samples a claim on a grid and reports the worst margin seen,
where the margin of a single sample is defined so that the claim holds
at that sample iff the margin is positive (strict claims) or at least
-tolerance (approximate claims).  A report is evidence at a stated grid
resolution, not a proof.

Margin conventions, used consistently below:

* strict monotonicity / convexity: consecutive differences (or chord
  slacks) minus STRICT_FLOOR, so "passes" means strict beyond the floor
  at the grid resolution;
* identities and symmetry: minus the largest absolute deviation, paired
  with a small positive tolerance;
* sharp inequalities whose margins decay exponentially (the Hempel-type
  sandwich, the Q bounds): the raw analytic margin computed from the
  cancellation-free defect functions, with tolerance 0.  At t = 100 the
  genuine margin is ~1e-41; a floor would misreport it as a failure.

Checks that sample a continuum honor the supplied GridSpec.  Structural
checks (coefficient tables, limit cases) use the grid as a nominal
record of their sampling and say so in their notes.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from . import hyp2f1, metric, pqfun, specfun
from .errors import BracketError, DomainError, HypothesisError, PunctMetricError, UnknownCheckError

# Strictness floor for sampled strict inequalities: a difference that
# small is treated as "not strictly positive at this resolution".
STRICT_FLOOR = 1e-12

T0_BRACKET = (2.0, 3.0)
T0_ABS_TOL = 1e-10


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """Sampling grid: `count` points from lo to hi, linear or log spaced."""

    lo: float
    hi: float
    count: int
    scale: str = "linear"

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        object.__setattr__(self, "count", int(self.count))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)
                and self.lo < self.hi):
            raise DomainError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if self.count < 3:
            raise DomainError(f"grid needs count >= 3, got {self.count}")
        if self.scale not in ("linear", "log"):
            raise DomainError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.scale == "log" and self.lo <= 0.0:
            raise DomainError("log scale requires lo > 0")

    def points(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "count": self.count,
                "scale": self.scale}


@dataclasses.dataclass(frozen=True)
class PropertyReport:
    """Outcome of one named check; passed iff worst_margin > -tolerance."""

    name: str
    passed: bool
    grid: GridSpec
    worst_point: object
    worst_margin: float
    tolerance: float
    notes: str = ""

    def to_dict(self) -> dict:
        point = self.worst_point
        if isinstance(point, tuple):
            point = list(point)
        return {
            "name": self.name,
            "passed": self.passed,
            "grid": self.grid.to_dict(),
            "worst_point": point,
            "worst_margin": self.worst_margin,
            "tolerance": self.tolerance,
            "notes": self.notes,
        }


class CheckDef(NamedTuple):
    runner: Callable[[dict, GridSpec], tuple[object, float, str]]
    params: dict
    grid: GridSpec
    tol: float


class ExtremumResult(NamedTuple):
    t0: float
    max_value: float


class _Worst:
    """Running minimum of (point, margin) samples."""

    def __init__(self) -> None:
        self.point: object = None
        self.margin = math.inf

    def add(self, point: object, margin: float) -> None:
        if margin < self.margin:
            self.margin = margin
            self.point = point

    def merge(self, other: "_Worst") -> None:
        self.add(other.point, other.margin)


def _fmt(x: float) -> str:
    return format(float(x), ".3e")


def _monotone_worst(xs: Sequence[float], ys: Sequence[float],
                    increasing: bool) -> _Worst:
    """Strict-monotonicity margins between consecutive samples."""
    sign = 1.0 if increasing else -1.0
    w = _Worst()
    for i in range(len(xs) - 1):
        w.add(float(xs[i]), sign * (ys[i + 1] - ys[i]) - STRICT_FLOOR)
    return w


def _chord_worst(xs: Sequence[float], ys: Sequence[float],
                 convex: bool) -> _Worst:
    """Strict convexity (or concavity) via chord slack on triples.

    Works on uneven grids; reduces to the midpoint inequality when the
    spacing is uniform.
    """
    w = _Worst()
    for i in range(len(xs) - 2):
        x1, x2, x3 = xs[i], xs[i + 1], xs[i + 2]
        chord = ys[i] + (ys[i + 2] - ys[i]) * ((x2 - x1) / (x3 - x1))
        slack = chord - ys[i + 1] if convex else ys[i + 1] - chord
        w.add(float(x2), slack - STRICT_FLOOR)
    return w


def _deviation_worst(points: Sequence[object],
                     devs: Sequence[float]) -> _Worst:
    """Equality-type margins: minus the absolute deviation."""
    w = _Worst()
    for p, d in zip(points, devs):
        w.add(p, -abs(d))
    return w


def _abs_midpoint_parts(s: float, t: float) -> tuple[float, float]:
    """Midpoint m of (s, t) and (|s|+|t|)/2 - |m| without cancellation.

    The second value is identically 0 when s and t share a sign and
    min(|s|, |t|) otherwise; computing it that way keeps midpoint
    convexity margins of |t|-linear functions exact.
    """
    m = 0.5 * (s + t)
    if (s >= 0.0) == (t >= 0.0):
        return m, 0.0
    return m, min(abs(s), abs(t))


# ---------------------------------------------------------------------------
# runners


def _vaman_case(a: float, b: float, c: float) -> str:
    prod = a * b - c
    sums = a + b - (c + 1.0)
    if prod == 0.0 and sums == 0.0:
        return "constant"
    if prod >= 0.0 and sums >= 0.0:
        return "increasing"
    if prod <= 0.0 and sums <= 0.0:
        return "decreasing"
    raise HypothesisError(
        f"(a,b,c)=({a},{b},{c}) has ab-c and a+b-c-1 of opposite sign; "
        "no monotonicity case applies")


def _make_vaman_runner(expected: str):
    def run(params: dict, grid: GridSpec) -> tuple[object, float, str]:
        a, b, c = params["a"], params["b"], params["c"]
        case = _vaman_case(a, b, c)
        if case != expected:
            raise HypothesisError(
                f"(a,b,c)=({a},{b},{c}) falls in the {case} case, "
                f"this check expects the {expected} one")
        p = hyp2f1.HypParams(a, b, c)
        xs = grid.points()
        if not (0.0 <= xs[0] and xs[-1] < 1.0):
            raise DomainError("grid for (1-x)F(x) must lie inside [0, 1)")
        ys = [(1.0 - x) * hyp2f1.f21(p, float(x)).value for x in xs]
        if expected == "constant":
            w = _deviation_worst([float(x) for x in xs],
                                 [y - 1.0 for y in ys])
            notes = (f"(1-x)F = 1 on the grid to {_fmt(-w.margin)}; "
                     "ab = c and a+b = c+1 force the constant case")
        else:
            w = _monotone_worst(xs, ys, increasing=(expected == "increasing"))
            notes = (f"(1-x)F strictly {expected}; "
                     f"min consecutive step {_fmt(w.margin + STRICT_FLOOR)}")
        return w.point, w.margin, notes

    return run


def _run_concave_coeffs(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    a, b, c = params["a"], params["b"], params["c"]
    if not max(a, b) < c:
        raise HypothesisError(
            f"negative-coefficient claim needs max(a,b) < c, got ({a},{b},{c})")
    depth = grid.count - 1
    ratio = hyp2f1.ratio_coeffs(hyp2f1.HypParams(a, b, c), depth)
    coeff = (a * b / c) * ratio  # Maclaurin coefficients of v'/v
    w = _Worst()
    for n in range(1, depth + 1):
        # x(1-x)v'/v has x^{n+1} coefficient coeff[n] - coeff[n-1] <= 0
        w.add(float(n), float(coeff[n - 1] - coeff[n]))
    notes = (f"coefficient drops a_(n-1) - a_n of v'/v for n = 1..{depth}; "
             f"min {_fmt(w.margin)} (grid count sets the depth)")
    return w.point, w.margin, notes


def _run_concave_shape(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    a, b, c = params["a"], params["b"], params["c"]
    if not max(a, b) < c:
        raise HypothesisError(
            f"shape claim needs max(a,b) < c (max = c degenerates to a "
            f"constant), got ({a},{b},{c})")
    xs = grid.points()
    if not (0.0 < xs[0] and xs[-1] < 1.0):
        raise DomainError("grid must lie inside (0, 1)")
    ys = [pqfun.n_func(a, b, c, float(x)) for x in xs]
    n = len(xs)
    w = _Worst()
    pos = _Worst()
    for x, y in zip(xs, ys):
        pos.add(float(x), y - STRICT_FLOOR)
    w.merge(pos)
    sym = _deviation_worst(
        [float(xs[i]) for i in range(n // 2)],
        [ys[i] - ys[n - 1 - i] for i in range(n // 2)])
    w.merge(sym)
    left = [i for i in range(n) if xs[i] <= 0.5]
    right = [i for i in range(n) if xs[i] >= 0.5]
    up = _monotone_worst([xs[i] for i in left], [ys[i] for i in left], True)
    down = _monotone_worst([xs[i] for i in right], [ys[i] for i in right], False)
    w.merge(up)
    w.merge(down)
    conc = _chord_worst(xs, ys, convex=False)
    w.merge(conc)
    notes = (f"positive >= {_fmt(pos.margin + STRICT_FLOOR)}; symmetry dev "
             f"{_fmt(-sym.margin)}; increasing then decreasing about 1/2 "
             f"(steps {_fmt(up.margin + STRICT_FLOOR)}/"
             f"{_fmt(down.margin + STRICT_FLOOR)}); concavity slack "
             f"{_fmt(conc.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_hlvv_sign(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    xs = grid.points()
    if not (0.0 < xs[0] and xs[-1] < 1.0):
        raise DomainError("grid must lie inside (0, 1)")
    w = _Worst()
    parts = []
    for a, b, c, label in params["cases"]:
        sgn = (a + b - 1.0) * (c - b)
        expected = "constant" if sgn == 0.0 else (
            "convex" if sgn > 0.0 else "concave")
        if label != expected:
            raise HypothesisError(
                f"(a+b-1)(c-b) = {sgn} makes ({a},{b},{c}) {expected}, "
                f"case is labelled {label!r}")
        ys = [pqfun.m_func(a, b, c, float(x)) for x in xs]
        if label == "constant":
            mid = ys[len(ys) // 2]
            part = _deviation_worst([(float(x)) for x in xs],
                                    [y - mid for y in ys])
            parts.append(f"constant ({a},{b},{c}): value {mid:.12g}, "
                         f"dev {_fmt(-part.margin)}")
        else:
            part = _chord_worst(xs, ys, convex=(label == "convex"))
            parts.append(f"{label} ({a},{b},{c}): chord slack "
                         f"{_fmt(part.margin + STRICT_FLOOR)}")
        w.merge(part)
    return w.point, w.margin, "; ".join(parts)


def _run_genconv_logconvex(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    a, b, c = params["a"], params["b"], params["c"]
    if not a * b / (a + b + 1.0) < c:
        raise HypothesisError(
            f"log-convexity needs ab/(a+b+1) < c, got ({a},{b},{c})")
    p = hyp2f1.HypParams(a, b, c)
    xs = grid.points()
    if not (0.0 < xs[0] and xs[-1] < 1.0):
        raise DomainError("grid must lie inside (0, 1)")

    def log_l(x: float) -> float:
        return hyp2f1.f21_derivative(p, x) / hyp2f1.f21(p, x).value

    ratio = [log_l(float(x)) - log_l(float(1.0 - x)) for x in xs]
    logf = [math.log(hyp2f1.f21(p, float(x)).value)
            + math.log(hyp2f1.f21(p, float(1.0 - x)).value) for x in xs]
    w = _Worst()
    up = _monotone_worst(xs, ratio, True)
    w.merge(up)
    conv = _chord_worst(xs, logf, convex=True)
    w.merge(conv)
    mid = [i for i in range(len(xs)) if xs[i] == 0.5]
    zero_note = ""
    if mid:
        w.add(0.5, -abs(ratio[mid[0]]))
        zero_note = f"; f'/f at 1/2 = {_fmt(abs(ratio[mid[0]]))}"
    fmin = _Worst()
    fmid = math.log(hyp2f1.f21(p, 0.5).value) * 2.0
    for x, lf in zip(xs, logf):
        if x != 0.5:
            fmin.add(float(x), (lf - fmid) - STRICT_FLOOR)
    w.merge(fmin)
    notes = (f"f(x) = F(x)F(1-x): f'/f increasing (step "
             f"{_fmt(up.margin + STRICT_FLOOR)}), log f midpoint-convex "
             f"(slack {_fmt(conv.margin + STRICT_FLOOR)}), interior minimum "
             f"at 1/2 (gap {_fmt(fmin.margin + STRICT_FLOOR)}){zero_note}")
    return w.point, w.margin, notes


def _run_genconv_limits(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    w = _Worst()
    parts = []
    for case in params["cases"]:
        a, b = case["a"], case["b"]
        kind = case["kind"]
        if kind == "gauss":
            c = case["c"]
            if not a + b < c:
                raise HypothesisError(f"gauss limit needs a+b < c, got ({a},{b},{c})")
            x = case["x"]
            lim = hyp2f1.f21_at_one(hyp2f1.HypParams(a, b, c))
            val = hyp2f1.f21(hyp2f1.HypParams(a, b, c), x).value
            dev = abs(val - lim)
            point = x
        elif kind == "zb":
            u = case["u"]
            ell = -math.log(u)
            val = hyp2f1.zb_from_complement(a, b, u, ell).value
            lim = (ell + specfun.ramanujan_r(a, b)) / specfun.beta(a, b)
            dev = abs(val - lim)
            point = 1.0 - u
        elif kind == "power":
            c = case["c"]
            if not a + b > c:
                raise HypothesisError(f"power limit needs a+b > c, got ({a},{b},{c})")
            x = case["x"]
            val = hyp2f1.f21(hyp2f1.HypParams(a, b, c), x).value
            val *= (1.0 - x) ** (a + b - c)
            lim = (specfun.gamma(c) * specfun.gamma(a + b - c)
                   / (specfun.gamma(a) * specfun.gamma(b)))
            dev = abs(val - lim)
            point = x
        else:
            raise DomainError(f"unknown limit kind {kind!r}")
        # normalize: each case carries the tolerance its O(.) term implies
        w.add(point, 1.0 - dev / case["tol"])
        parts.append(f"{kind} ({a},{b}): |dev| {_fmt(dev)} vs {_fmt(case['tol'])}")
    notes = ("boundary limits, margins normalized to 1 - dev/tol; grid is "
             "nominal, cases pin their own points; " + "; ".join(parts))
    return w.point, w.margin, notes


def _run_main_parity(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    ts = grid.points()
    w = _Worst()
    for t in ts:
        tf = float(t)
        w.add(tf, -abs(pqfun.p_func(pr, tf) - pqfun.p_func(pr, -tf)))
        w.add(tf, -abs(pqfun.p_prime(pr, tf) + pqfun.p_prime(pr, -tf)))
    notes = ("P even and P' odd; both are enforced by |t| reduction "
             "inside the evaluators, so this is a regression guard")
    return w.point, w.margin, notes


def _p_midpoint_slack(pr: pqfun.ZeroBalancedPair, inv_beta: float,
                      pe: Callable[[float], float],
                      s: float, t: float) -> tuple[float, float]:
    """Midpoint convexity slack of P at ((s+t)/2, between s and t).

    Splits P = (|t| + R)/B + excess so the linear part contributes
    exactly; the excess terms keep relative accuracy at any |t|.
    """
    m, lin = _abs_midpoint_parts(s, t)
    slack = (lin * inv_beta
             + 0.5 * (pe(abs(s)) + pe(abs(t))) - pe(abs(m)))
    return m, slack


def _run_main_convex(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    inv_beta = 1.0 / specfun.beta(pr.a, pr.b)
    cache: dict[float, float] = {}

    def pe(s: float) -> float:
        if s not in cache:
            cache[s] = pqfun.p_excess(pr, s)
        return cache[s]

    rng = np.random.default_rng(params["seed"])
    span = params["t_span"]
    gap = params["min_gap"]
    w = _Worst()
    rand = _Worst()
    n_pairs = 0
    while n_pairs < params["pairs"]:
        s, t = rng.uniform(-span, span, size=2)
        if abs(s - t) < gap:
            continue  # midpoint slack below noise scale, redraw
        n_pairs += 1
        m, slack = _p_midpoint_slack(pr, inv_beta, pe, float(s), float(t))
        rand.add((float(s), float(t)), slack - STRICT_FLOOR)
    w.merge(rand)

    ts = grid.points()
    tri = _Worst()
    for i in range(len(ts) - 2):
        s, t = float(ts[i]), float(ts[i + 2])
        m, slack = _p_midpoint_slack(pr, inv_beta, pe, s, t)
        tri.add(m, slack - STRICT_FLOOR)
    w.merge(tri)

    # P -+ t/B through the same excess split; branch values are O(1)
    big_r = specfun.ramanujan_r(pr.a, pr.b)

    def shifted_down(t: float) -> float:
        # P(t) - t/B
        if t >= 0.0:
            return big_r * inv_beta + pe(t)
        return (2.0 * -t + big_r) * inv_beta + pe(-t)

    down = [shifted_down(float(t)) for t in ts]
    up = [shifted_down(float(-t)) for t in ts]  # P(t) + t/B by symmetry
    mono_d = _monotone_worst(ts, down, increasing=False)
    mono_u = _monotone_worst(ts, up, increasing=True)
    conv_d = _chord_worst(ts, down, convex=True)
    conv_u = _chord_worst(ts, up, convex=True)
    for part in (mono_d, mono_u, conv_d, conv_u):
        w.merge(part)

    # R/B < P - |t|/B <= P(0), strict off t = 0
    bound = _Worst()
    pe0 = pe(0.0)
    for t in ts:
        tf = float(t)
        bound.add(tf, pe(abs(tf)) - STRICT_FLOOR)
        if tf != 0.0:
            bound.add(tf, (pe0 - pe(abs(tf))) - STRICT_FLOOR)
    w.merge(bound)

    notes = (f"{params['pairs']} seeded midpoint pairs (gap >= {gap}), "
             f"min slack {_fmt(rand.margin + STRICT_FLOOR)}; grid triples "
             f"{_fmt(tri.margin + STRICT_FLOOR)}; P-t/B and P+t/B monotone "
             f"and convex; excess bounds {_fmt(bound.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_pprime_bounds(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    ts = grid.points()
    w = _Worst()
    parts = []
    for a, b in params["pairs"]:
        pr = pqfun.ZeroBalancedPair(a, b)
        cap = 1.0 / specfun.beta(a, b)
        ys = [pqfun.p_prime(pr, float(t)) for t in ts]
        mono = _monotone_worst(ts, ys, True)
        sharp = _Worst()
        for t, y in zip(ts, ys):
            sharp.add(float(t), (cap - abs(y)) - STRICT_FLOOR)
        w.merge(mono)
        w.merge(sharp)
        parts.append(f"({a},{b}): step {_fmt(mono.margin + STRICT_FLOOR)}, "
                     f"1/B - |P'| >= {_fmt(sharp.margin + STRICT_FLOOR)}")
    return w.point, w.margin, "P' strictly increasing, |P'| < 1/B; " + "; ".join(parts)


def _run_main_slopes(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    cap = 1.0 / specfun.beta(pr.a, pr.b)
    ts = grid.points()
    if 0.0 in ts:
        raise DomainError("slope grid must not contain t = 0")
    ys = [pqfun.slope_g(pr, float(t)) for t in ts]
    n = len(ts)
    w = _Worst()
    mono = _monotone_worst(ts, ys, True)
    w.merge(mono)
    rng_m = _Worst()
    for t, y in zip(ts, ys):
        rng_m.add(float(t), (cap - abs(y)) - STRICT_FLOOR)
    w.merge(rng_m)
    odd = _deviation_worst([float(ts[i]) for i in range(n // 2)],
                           [ys[i] + ys[n - 1 - i] for i in range(n // 2)])
    w.merge(odd)
    notes = (f"G odd (dev {_fmt(-odd.margin)}), strictly increasing (step "
             f"{_fmt(mono.margin + STRICT_FLOOR)}), range inside "
             f"(-1/B, 1/B) by {_fmt(rng_m.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_qq_identity(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    ts = grid.points()
    w = _Worst()
    for t in ts:
        tf = float(t)
        w.add(tf, -abs(pqfun.q_func(pr, tf) * pqfun.q_func(pr, -tf) - 1.0))
    notes = ("Q(t)Q(-t) = 1; the two sides reuse one ratio and its "
             "reciprocal, so deviations are pure rounding")
    return w.point, w.margin, notes


def _run_subadd(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    ts = grid.points()
    if ts[0] <= 0.0:
        raise DomainError("q(t)/t grid must be positive")
    qs = [pqfun.q_log(pr, float(t)) for t in ts]
    w = _Worst()
    ratio = _monotone_worst(ts, [q / float(t) for q, t in zip(qs, ts)], False)
    w.merge(ratio)
    inc = _monotone_worst(ts, qs, True)
    w.merge(inc)
    conc = _chord_worst(ts, qs, convex=False)
    w.merge(conc)
    odd = _Worst()
    for t, q in zip(ts, qs):
        odd.add(float(t), -abs(q + pqfun.q_log(pr, -float(t))))
    w.merge(odd)
    rng = np.random.default_rng(params["seed"])
    sub = _Worst()
    for _ in range(params["pairs"]):
        s, t = rng.uniform(params["s_lo"], params["s_hi"], size=2)
        margin = (pqfun.q_log(pr, float(s)) + pqfun.q_log(pr, float(t))
                  - pqfun.q_log(pr, float(s + t)))
        sub.add((float(s), float(t)), margin - STRICT_FLOOR)
    w.merge(sub)
    notes = (f"q(t)/t decreasing (step {_fmt(ratio.margin + STRICT_FLOOR)}); "
             f"q increasing, concave, odd (dev {_fmt(-odd.margin)}); "
             f"{params['pairs']} seeded subadditivity pairs, min slack "
             f"{_fmt(sub.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_qbounds(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    if not pr.a + pr.b >= 1.0:
        raise HypothesisError(
            f"Q bound claims need a+b >= 1, got ({pr.a},{pr.b})")
    ts = grid.points()
    if ts[0] <= 0.0:
        raise DomainError("Q bound grid must be positive (equality at 0)")
    qe = [pqfun.q_excess(pr, float(t)) for t in ts]
    qe0 = pqfun.q_excess(pr, 0.0)
    w = _Worst()
    # Q - t/B = R/B + excess: monotone/convex in the excess alone
    mono = _monotone_worst(ts, qe, increasing=False)
    conv = _chord_worst(ts, qe, convex=True)
    w.merge(mono)
    w.merge(conv)
    low = _Worst()
    high = _Worst()
    for t, e in zip(ts, qe):
        low.add(float(t), e)           # Q > (R+t)/B, margin ~e^{-t}: raw
        high.add(float(t), qe0 - e - STRICT_FLOOR)  # Q < 1 + t/B
    w.merge(low)
    w.merge(high)
    notes = (f"Q - t/B decreasing (step {_fmt(mono.margin + STRICT_FLOOR)}) "
             f"and convex (slack {_fmt(conv.margin + STRICT_FLOOR)}); "
             f"(R+t)/B < Q by {_fmt(low.margin)} (raw, decays like e^-t); "
             f"Q < 1 + t/B by {_fmt(high.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_th_increasing(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    ts = grid.points()
    if ts[0] <= 0.0:
        raise DomainError("t h(t) grid must be positive")
    ys = [float(t) * metric.h(float(t)) for t in ts]
    w = _Worst()
    mono = _monotone_worst(ts, ys, True)
    w.merge(mono)
    band = _Worst()
    for t, y in zip(ts, ys):
        band.add(float(t), y - STRICT_FLOOR)
        band.add(float(t), (0.5 - y) - STRICT_FLOOR)
    w.merge(band)
    notes = (f"t h(t) strictly increasing (step {_fmt(mono.margin + STRICT_FLOOR)}) "
             f"with values in (0, 1/2), band margin {_fmt(band.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


def _run_big_h_shape(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    ts = grid.points()
    two_c0 = 2.0 * metric.c0()
    cache: dict[float, float] = {}

    def pe(s: float) -> float:
        if s not in cache:
            cache[s] = pqfun.p_excess(pr, s)
        return cache[s]

    w = _Worst()
    ident = _Worst()
    even = _Worst()
    for t in ts:
        tf = float(t)
        ident.add(tf, -abs(metric.big_h(tf) * metric.h(tf) - 1.0))
        even.add(tf, -abs(metric.big_h(tf) - metric.big_h(-tf)))
    w.merge(ident)
    w.merge(even)
    h0_dev = metric.big_h(0.0) / two_c0 - 1.0
    w.add(0.0, -abs(h0_dev))

    # fold to |t| and collapse mirror points that agree to a few ulps:
    # asymmetric grids produce pairs whose gap is pure rounding, and a
    # growth step across such a gap is noise, not evidence
    raw = sorted(abs(float(t)) for t in ts)
    pos: list[float] = []
    for s in raw:
        if not pos or s - pos[-1] > 1e-12 * (1.0 + s):
            pos.append(s)
    grow = _Worst()
    for s1, s2 in zip(pos[:-1], pos[1:]):
        # H = 2(|t| + log 16) + 2 pi excess: difference without cancellation
        step = 2.0 * (s2 - s1) + 2.0 * math.pi * (pe(s2) - pe(s1))
        grow.add(s1, step - STRICT_FLOOR)
    w.merge(grow)

    conv = _Worst()
    for i in range(len(ts) - 2):
        s, t = float(ts[i]), float(ts[i + 2])
        m, lin = _abs_midpoint_parts(s, t)
        slack = 2.0 * lin + 2.0 * math.pi * (
            0.5 * (pe(abs(s)) + pe(abs(t))) - pe(abs(m)))
        conv.add(m, slack - STRICT_FLOOR)
    w.merge(conv)

    notes = (f"H h = 1 (dev {_fmt(-ident.margin)}); H(0)/2C0 - 1 = "
             f"{_fmt(h0_dev)}; even (dev {_fmt(-even.margin)}); increasing "
             f"in |t| (step {_fmt(grow.margin + STRICT_FLOOR)}); midpoint "
             f"convex via the excess split (slack {_fmt(conv.margin + STRICT_FLOOR)})")
    return w.point, w.margin, notes


def _run_big_h_prime(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    ts = grid.points()
    ys = [metric.big_h_prime(float(t)) for t in ts]
    n = len(ts)
    w = _Worst()
    mono = _monotone_worst(ts, ys, True)
    w.merge(mono)
    band = _Worst()
    for t, y in zip(ts, ys):
        band.add(float(t), (2.0 - abs(y)) - STRICT_FLOOR)
    w.merge(band)
    odd = _deviation_worst([float(ts[i]) for i in range(n // 2)],
                           [ys[i] + ys[n - 1 - i] for i in range(n // 2)])
    w.merge(odd)
    notes = (f"H' odd (dev {_fmt(-odd.margin)}), strictly increasing (step "
             f"{_fmt(mono.margin + STRICT_FLOOR)}); |H'| < 2 by "
             f"{_fmt(band.margin + STRICT_FLOOR)}, sup |H'| = {max(abs(y) for y in ys):.12f}")
    return w.point, w.margin, notes


def _run_weighted_extremum(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    ext = max_weighted_h()
    c0 = metric.c0()
    ts = grid.points()
    grid_best_t = 0.0
    grid_max = -math.inf
    for t in ts:
        val = 2.0 * (float(t) + c0) * metric.h(float(t))
        if val > grid_max:
            grid_max = val
            grid_best_t = float(t)
    t_ref = 2.56
    g_ref = (metric.big_h(t_ref)
             - (t_ref + c0) * metric.big_h_prime(t_ref))
    w = _Worst()
    w.add(ext.t0, 1.25 - ext.max_value)
    w.add(grid_best_t, 1e-4 - abs(grid_max - ext.max_value))
    w.add(grid_best_t, ext.max_value + 1e-6 - grid_max)
    w.add(ext.t0, 5e-4 - abs(ext.t0 - 2.56944))
    w.add(ext.t0, 5e-4 - abs(ext.max_value - 1.24477))
    w.add(t_ref, g_ref - 0.02)
    notes = (f"t0 = {ext.t0:.12f}; max = 2/H'(t0) = {ext.max_value:.12f} "
             f"< 1.25; grid max {grid_max:.12f} at t = {grid_best_t:.6f}; "
             f"g(2.56) = {g_ref:.8f} > 0.02")
    return w.point, w.margin, notes


def _run_hempel_sandwich(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    pr = pqfun.ZeroBalancedPair(params["a"], params["b"])
    gap = metric.c0() - math.log(16.0)
    ts = grid.points()
    if ts[0] <= 0.0:
        raise DomainError("sandwich grid must be positive (equality at 0)")
    w = _Worst()
    lo_w = _Worst()
    hi_w = _Worst()
    for t in ts:
        tf = float(t)
        pe = pqfun.p_excess(pr, tf)
        lo_w.add(tf, 2.0 * math.pi * pe)          # H - 2(t + log 16) > 0
        hi_w.add(tf, 2.0 * (gap - math.pi * pe))  # 2(t + C0) - H > 0
    w.merge(lo_w)
    w.merge(hi_w)
    notes = (f"1/(t+C0) < 2h(t) < 1/(t+log 16) as H between 2(t+log 16) "
             f"and 2(t+C0); min lower margin {_fmt(lo_w.margin)} (decays "
             f"like t e^-t, computed cancellation-free), min upper margin "
             f"{_fmt(hi_w.margin)}")
    return w.point, w.margin, notes


def _run_kustner(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    a, b, c = params["a"], params["b"], params["c"]
    if not (-1.0 <= a <= c and 0.0 < b <= c):
        raise HypothesisError(
            f"total monotonicity needs -1 <= a <= c and 0 < b <= c, "
            f"got ({a},{b},{c})")
    k_max = params["k_max"]
    n_max = int(round(grid.hi))
    ratio = hyp2f1.ratio_coeffs(hyp2f1.HypParams(a, b, c), n_max + k_max)
    table = hyp2f1.finite_difference_table(ratio, k_max)
    w = _Worst()
    first_strict: Optional[int] = None
    for k, row in enumerate(table):
        for n in range(min(n_max + 1, row.size)):
            w.add((k, n), float(row[n]))
            if k == 1 and first_strict is None and row[n] > 1e-12:
                first_strict = n
    notes = (f"Delta^k a_n >= 0 for k <= {k_max}, n <= {n_max} "
             f"(grid hi sets the n range); min entry {_fmt(w.margin)} at "
             f"(k,n) = {w.point}; first strict first difference at n = "
             f"{first_strict}")
    return w.point, w.margin, notes


def _run_phi_decreasing(params: dict, grid: GridSpec) -> tuple[object, float, str]:
    ts = grid.points()
    if ts[0] <= 0.0:
        raise DomainError("phi(t)/t grid must be positive")
    ys = [metric.varphi(float(t)) / float(t) for t in ts]
    w = _Worst()
    ratio = _monotone_worst(ts, ys, False)
    w.merge(ratio)
    rng = np.random.default_rng(params["seed"])
    sub = _Worst()
    for _ in range(params["pairs"]):
        s, t = rng.uniform(params["s_lo"], params["s_hi"], size=2)
        margin = (metric.varphi(float(s)) + metric.varphi(float(t))
                  - metric.varphi(float(s + t)))
        sub.add((float(s), float(t)), margin - STRICT_FLOOR)
    w.merge(sub)
    notes = (f"phi(t)/t strictly decreasing (step {_fmt(ratio.margin + STRICT_FLOOR)}); "
             f"{params['pairs']} seeded subadditivity pairs, min slack "
             f"{_fmt(sub.margin + STRICT_FLOOR)}")
    return w.point, w.margin, notes


# ---------------------------------------------------------------------------
# registry

_REGISTRY: dict[str, CheckDef] = {
    "lem_vaman_1": CheckDef(
        _make_vaman_runner("increasing"),
        {"a": 2.0, "b": 2.0, "c": 1.0},
        GridSpec(0.0, 0.95, 96), 0.0),
    "lem_vaman_2": CheckDef(
        _make_vaman_runner("decreasing"),
        {"a": 0.5, "b": 0.5, "c": 1.0},
        GridSpec(0.0, 0.99, 100), 0.0),
    "lem_vaman_3": CheckDef(
        _make_vaman_runner("constant"),
        {"a": 1.0, "b": 2.0, "c": 2.0},
        GridSpec(0.01, 0.99, 50), 1e-13),
    "lem_concave_coeffs": CheckDef(
        _run_concave_coeffs,
        {"a": 0.5, "b": 0.5, "c": 1.0},
        GridSpec(0.0, 30.0, 31), 1e-12),
    "cor_concave_shape": CheckDef(
        _run_concave_shape,
        {"a": 0.5, "b": 0.5, "c": 1.0},
        GridSpec(0.01, 0.99, 99), 1e-12),
    "lem_hlvv_sign": CheckDef(
        _run_hlvv_sign,
        {"cases": [[1.0, 1.0, 1.5, "convex"],
                   [0.25, 0.25, 1.0, "concave"],
                   [0.5, 0.5, 1.0, "constant"]]},
        GridSpec(0.02, 0.98, 97), 1e-12),
    "thm_genconv_logconvex": CheckDef(
        _run_genconv_logconvex,
        {"a": 0.9, "b": 1.1, "c": 0.8},
        GridSpec(0.02, 0.98, 97), 1e-13),
    "thm_genconv_limits": CheckDef(
        _run_genconv_limits,
        {"cases": [
            {"kind": "gauss", "a": 0.5, "b": 0.5, "c": 2.0,
             "x": 0.9999, "tol": 1e-2},
            {"kind": "zb", "a": 0.5, "b": 0.5, "u": 1e-8, "tol": 1e-6},
            {"kind": "power", "a": 1.0, "b": 1.0, "c": 1.5,
             "x": 0.9999, "tol": 5e-2},
        ]},
        GridSpec(1e-8, 1e-4, 3, "log"), 0.0),
    "thm_main_parity": CheckDef(
        _run_main_parity,
        {"a": 0.5, "b": 0.5},
        GridSpec(0.0, 20.0, 81), 1e-13),
    "thm_main_convex": CheckDef(
        _run_main_convex,
        {"a": 0.5, "b": 0.5, "seed": 20260817, "pairs": 1000,
         "min_gap": 0.5, "t_span": 20.0},
        GridSpec(-20.0, 20.0, 161), 0.0),
    "thm_main_pprime_bounds": CheckDef(
        _run_pprime_bounds,
        {"pairs": [[0.5, 0.5], [1.0, 2.0]]},
        GridSpec(-20.0, 20.0, 101), 0.0),
    "thm_main_slopes": CheckDef(
        _run_main_slopes,
        {"a": 0.5, "b": 0.5},
        GridSpec(-20.0, 20.0, 100), 1e-13),
    "thm_main2_qq": CheckDef(
        _run_qq_identity,
        {"a": 0.5, "b": 0.5},
        GridSpec(-10.0, 10.0, 101), 1e-12),
    "thm_main2_subadd": CheckDef(
        _run_subadd,
        {"a": 0.5, "b": 0.5, "seed": 1202, "pairs": 500,
         "s_lo": 0.05, "s_hi": 25.0},
        # grid starts at 0.05: q is odd so its concavity slack vanishes at 0
        # and falls under the strictness floor for points below ~1e-2
        GridSpec(0.05, 50.0, 120, "log"), 1e-13),
    "thm_main2_qbounds": CheckDef(
        _run_qbounds,
        {"a": 0.5, "b": 0.5},
        # hi = 15: the convexity slack of the excess decays like t e^{-t},
        # and past ~20 a refined grid pushes it under the strictness floor
        GridSpec(0.25, 15.0, 60), 0.0),
    "thm_c212_1": CheckDef(
        _run_th_increasing,
        {},
        GridSpec(1e-3, 50.0, 150, "log"), 0.0),
    "thm_c212_2": CheckDef(
        _run_big_h_shape,
        {"a": 0.5, "b": 0.5},
        GridSpec(-20.0, 20.0, 161), 1e-13),
    "thm_c212_3": CheckDef(
        _run_big_h_prime,
        {},
        GridSpec(-25.0, 25.0, 101), 1e-13),
    "thm_c212_4": CheckDef(
        _run_weighted_extremum,
        {},
        GridSpec(0.0, 20.0, 2001), 0.0),
    "thm_c212_5": CheckDef(
        _run_hempel_sandwich,
        {"a": 0.5, "b": 0.5},
        GridSpec(1e-4, 100.0, 200, "log"), 0.0),
    "kustner_total_monotone": CheckDef(
        _run_kustner,
        {"a": 0.5, "b": 0.5, "c": 1.0, "k_max": 6},
        GridSpec(0.0, 40.0, 41), 1e-12),
    "cor_phi_decreasing": CheckDef(
        _run_phi_decreasing,
        {"seed": 715, "pairs": 400, "s_lo": 0.05, "s_hi": 25.0},
        GridSpec(0.05, 50.0, 120, "log"), 0.0),
}


def check_names() -> list[str]:
    """Registry names, sorted."""
    return sorted(_REGISTRY)


def run_check(name: str, params: Optional[dict] = None,
              grid: Optional[GridSpec] = None,
              tol: Optional[float] = None,
              tol_profile: str = "default") -> PropertyReport:
    """Run one named check, overriding parameters, grid, or tolerance.

    The 'strict' profile densifies the grid 4x and divides the tolerance
    by 10, each only where no explicit override is given.  Raises
    UnknownCheckError for names outside the registry and HypothesisError
    when the parameters violate the claim's hypothesis.
    """
    if tol_profile not in ("default", "strict"):
        raise DomainError(
            f"tol_profile must be 'default' or 'strict', got {tol_profile!r}")
    try:
        cd = _REGISTRY[name]
    except KeyError:
        raise UnknownCheckError(
            f"unknown check {name!r}; known: {', '.join(sorted(_REGISTRY))}"
        ) from None
    merged = dict(cd.params)
    if params:
        merged.update(params)
    g = cd.grid if grid is None else grid
    tolerance = cd.tol if tol is None else float(tol)
    if tol_profile == "strict":
        if grid is None:
            g = dataclasses.replace(g, count=4 * g.count)
        if tol is None:
            tolerance = tolerance / 10.0
    worst_point, worst_margin, notes = cd.runner(merged, g)
    return PropertyReport(
        name=name,
        passed=bool(worst_margin > -tolerance),
        grid=g,
        worst_point=worst_point,
        worst_margin=float(worst_margin),
        tolerance=tolerance,
        notes=notes,
    )


def run_suite(tol_profile: str = "default") -> list[PropertyReport]:
    """Run every registry check; 'strict' uses tol/10 and 4x grid density.

    Failures are reported, not raised; reports come back sorted by name.
    """
    if tol_profile not in ("default", "strict"):
        raise DomainError(
            f"tol_profile must be 'default' or 'strict', got {tol_profile!r}")
    return [run_check(name, tol_profile=tol_profile)
            for name in sorted(_REGISTRY)]


def find_t0() -> float:
    """Zero of g(t) = H(t) - (t + C0) H'(t) in [2, 3].

    g is strictly decreasing with a sign change inside the bracket;
    bisection narrows it, a short secant run polishes to ~1e-12, well
    inside the 1e-10 contract.
    """
    c0 = metric.c0()

    def g(t: float) -> float:
        return metric.big_h(t) - (t + c0) * metric.big_h_prime(t)

    lo, hi = T0_BRACKET
    g_lo, g_hi = g(lo), g(hi)
    if not (g_lo > 0.0 > g_hi):
        raise BracketError(
            f"g({lo}) = {g_lo}, g({hi}) = {g_hi}: no sign change; "
            "this indicates an upstream evaluation bug")
    for _ in range(20):
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid > 0.0:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    t_prev, f_prev = lo, g_lo
    t_cur, f_cur = hi, g_hi
    for _ in range(8):
        if f_cur == f_prev:
            break
        t_next = t_cur - f_cur * (t_cur - t_prev) / (f_cur - f_prev)
        if not (T0_BRACKET[0] <= t_next <= T0_BRACKET[1]):
            break
        t_prev, f_prev = t_cur, f_cur
        t_cur, f_cur = t_next, g(t_next)
        if abs(t_cur - t_prev) < 0.01 * T0_ABS_TOL:
            break
    return t_cur


def max_weighted_h() -> ExtremumResult:
    """Maximum of 2(|t| + C0) h(t) over the real line.

    Attained at the unique zero t0 of g, where the value equals
    2/H'(t0); must come out below 1.25.
    """
    t0 = find_t0()
    max_value = 2.0 / metric.big_h_prime(t0)
    if not max_value < 1.25:
        raise PunctMetricError(
            f"2/H'(t0) = {max_value} is not below 1.25; upstream bug")
    return ExtremumResult(t0=t0, max_value=max_value)
