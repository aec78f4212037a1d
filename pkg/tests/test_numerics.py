import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bmsorder.channel import binary_entropy
from bmsorder.errors import InvalidParameter, NoBracket, NoConvergence, NonFinite
from bmsorder.numerics import SolverConfig, bisect, bisect_array, integrate_open

# eps with h2(eps) = 1/2, from a brute-force scan of h2 on a 1e-7 grid
EPS_HALF_GRID = 0.1100279


def test_bisect_linear():
    assert bisect(lambda x: x - 0.5, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_bisect_sqrt2():
    assert bisect(lambda x: x * x - 2.0, 1.0, 2.0) == pytest.approx(math.sqrt(2.0), abs=1e-12)


def test_bisect_binary_entropy_inverse():
    r = bisect(lambda e: binary_entropy(e) - 0.5, 1e-12, 0.5)
    assert r == pytest.approx(EPS_HALF_GRID, abs=1e-6)


def test_bisect_endpoint_root():
    assert bisect(lambda x: x, 0.0, 1.0) == 0.0
    assert bisect(lambda x: x - 1.0, 0.0, 1.0) == 1.0


def test_bisect_errors():
    with pytest.raises(NoBracket):
        bisect(lambda x: x + 1.0, 0.0, 1.0)
    with pytest.raises(InvalidParameter):
        bisect(lambda x: x, 1.0, 0.0)
    with pytest.raises(NoConvergence):
        bisect(lambda x: x - 0.3, 0.0, 1.0, SolverConfig(root_tol=1e-12, max_iter=5))


def test_bisect_array_matches_scalar():
    targets = np.linspace(0.05, 0.95, 19)
    roots = bisect_array(lambda x: x**3 - targets, np.zeros_like(targets), np.ones_like(targets))
    for t, r in zip(targets, roots):
        assert r == pytest.approx(bisect(lambda x: x**3 - t, 0.0, 1.0), abs=1e-12)


@pytest.mark.parametrize("bad", [dict(root_tol=0.0), dict(quad_tol=-1.0), dict(max_iter=0),
                                 dict(max_panels=1.5)])
def test_solver_config_validation(bad):
    with pytest.raises(InvalidParameter):
        SolverConfig(**bad)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(0.5, 3.0))
def test_bisect_monotone_safe(root, power):
    f = lambda x: np.sign(x - root) * abs(x - root) ** power
    coarse = bisect(f, 0.0, 1.0, SolverConfig(root_tol=1e-6))
    fine = bisect(f, 0.0, 1.0, SolverConfig(root_tol=1e-7))
    assert 0.0 <= coarse <= 1.0
    assert abs(coarse - fine) <= 1e-6


def test_integrate_constant():
    assert integrate_open(lambda z: np.ones_like(z), 0.0, 1.0) == pytest.approx(1.0, abs=1e-12)


def test_integrate_indeterminate_endpoint():
    # naive form is 0/0 at z = 1; open nodes never touch it
    val = integrate_open(lambda z: (1.0 - z) / (1.0 - z * z), 0.0, 1.0)
    assert val == pytest.approx(math.log(2.0), abs=1e-10)


def test_integrate_bec_entropy():
    c = 0.5
    val = integrate_open(lambda z: (1 - c) * (1 - z) / (math.log(2.0) * (1 - z * z)), 0.0, 1.0)
    assert val == pytest.approx(1 - c, abs=1e-9)


def test_integrate_errors():
    with pytest.raises(NonFinite):
        integrate_open(lambda z: np.where(z > 0.5, np.nan, z), 0.0, 1.0)
    with pytest.raises(NoConvergence):
        integrate_open(lambda z: np.sin(1.0 / z) / z, 0.0, 1.0, SolverConfig(max_panels=4))
    with pytest.raises(InvalidParameter):
        integrate_open(np.cos, 1.0, 0.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.95))
def test_integrate_additive(m):
    f = lambda z: np.log1p(z) / (1.0 + z * z)
    whole = integrate_open(f, 0.0, 1.0)
    parts = integrate_open(f, 0.0, m) + integrate_open(f, m, 1.0)
    assert abs(whole - parts) <= 2e-10
