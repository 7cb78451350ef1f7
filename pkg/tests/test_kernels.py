import importlib
import math

import numpy as np
import pytest

from fracstefan import _pykernels

try:
    _ckernels = importlib.import_module("fracstefan._ckernels")
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])
needs_compiled = pytest.mark.skipif(_ckernels is None, reason="extension not built")


@pytest.fixture(params=BACKENDS, ids=lambda m: m.NAME)
def kern(request):
    return request.param


@pytest.mark.parametrize("x", [0.0, -1.0, -3.0, -17.0])
def test_rgamma_zero_at_poles(kern, x):
    assert kern.rgamma(x) == 0.0


@pytest.mark.parametrize("x", [0.3, 0.5, 1.0, 2.0, 4.5, -0.5, -2.5, 9.9])
def test_rgamma_matches_gamma(kern, x):
    assert kern.rgamma(x) * math.gamma(x) == pytest.approx(1.0, abs=1e-13)


def test_series_reports_non_convergence(kern):
    _, _, n = kern.wright_series(-10.0, -0.5, 1.0, 1e-14, 1e-300, 20)
    assert n == -1


def test_wright_many_matches_scalar(kern):
    zs = -np.linspace(0.0, 6.0, 13)
    values, sums, nterms = kern.wright_many(zs, -0.3, 1.0, 1e-14, 1e-300, 400)
    for z, v, s, n in zip(zs, values, sums, nterms):
        assert (v, s, n) == kern.wright_series(float(z), -0.3, 1.0, 1e-14, 1e-300, 400)


def test_l1_sum_alpha_one_is_last_increment(kern):
    f = [0.0, 1.0, 4.0, 9.0]
    assert kern.l1_history_sum(f, 1.0) == pytest.approx(5.0)


@needs_compiled
@pytest.mark.parametrize("a", [-0.15, -0.25, -0.45, -0.5])
@pytest.mark.parametrize("b", [1.0, 0.85, 0.5])
def test_backends_agree_on_series(a, b):
    for x in np.linspace(0.0, 9.5, 39):
        v_c, s_c, n_c = _ckernels.wright_series(-x, a, b, 1e-14, 1e-300, 400)
        v_p, s_p, n_p = _pykernels.wright_series(-x, a, b, 1e-14, 1e-300, 400)
        assert n_c > 0 and n_p > 0
        assert v_c == pytest.approx(v_p, rel=1e-12, abs=1e-15 * s_p)


@needs_compiled
@pytest.mark.parametrize("alpha", [0.2, 0.5, 0.9, 1.0])
def test_backends_agree_on_l1(alpha):
    rng = np.random.default_rng(3)
    f = np.cumsum(rng.normal(size=2001))
    c = _ckernels.l1_history_sum(f, alpha)
    p = _pykernels.l1_history_sum(f, alpha)
    assert c == pytest.approx(p, rel=1e-12, abs=1e-12)
