"""Cross-checks against scipy where it implements the same functions.

scipy is not a dependency of the package; these tests document agreement
with an independent implementation and skip cleanly when it is absent.
"""

import math

import pytest

sp = pytest.importorskip("scipy.special")

from punctmetric import elliptic, specfun
from punctmetric.hyp2f1 import HypParams, f21


@pytest.mark.parametrize("a,b,c", [
    (0.5, 0.5, 1.0),
    (0.5, 0.5, 1.5),
    (0.3, 0.7, 1.0),
    (1.2, 0.8, 2.0),
    (2.5, 1.5, 3.2),
    (0.25, 1.75, 2.0),
])
def test_f21_against_scipy(a, b, c):
    p = HypParams(a, b, c)
    for x in (0.0, 0.05, 0.2, 0.45, 0.5, 0.55, 0.8, 0.95, 0.99):
        ours = f21(p, x).value
        ref = float(sp.hyp2f1(a, b, c, x))
        # scipy is itself only good to ~1e-12 near x = 1
        assert ours == pytest.approx(ref, rel=5e-11), (a, b, c, x)


def test_ellip_k_against_scipy():
    for r in [0.01 * k for k in range(0, 100, 7)]:
        # scipy's ellipk takes the parameter m = r^2
        assert elliptic.ellip_k(r) == pytest.approx(
            float(sp.ellipk(r * r)), rel=1e-13)


def test_gamma_against_scipy():
    for x in (0.1, 0.5, 1.0, 2.5, 7.25, 20.0, 81.5):
        assert specfun.gamma(x) == pytest.approx(
            float(sp.gamma(x)), rel=5e-14)


def test_digamma_against_scipy():
    for x in (0.1, 0.5, 1.0, 2.5, 7.25, 20.0, 81.5):
        assert specfun.digamma(x) == pytest.approx(
            float(sp.psi(x)), rel=1e-13, abs=1e-14)


def test_beta_against_scipy():
    for a, b in ((0.5, 0.5), (0.3, 2.4), (1.0, 1.0), (4.5, 0.25)):
        assert specfun.beta(a, b) == pytest.approx(
            float(sp.beta(a, b)), rel=5e-14)


def test_agm_against_mpmath_value():
    # scipy has no agm; one frozen high-precision point guards the route
    assert elliptic.agm(1.0, math.sqrt(0.5)) == pytest.approx(
        0.84721308479397909, rel=1e-15)
