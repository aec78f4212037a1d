"""
Extremal Lambda functions for the family of BMS channels of capacity c.

``lambda_bar`` is the pointwise maximum of Lambda over the family,
``lambda_star`` its concave envelope (the least degraded channel) and
``lambda_under`` the pointwise minimum (the least upgraded channel).

The optimal second mass position ``x(z)`` of the least upgraded channel
approaches 1 like ``1 - x ~ 2**(-2/(1-z))``, which underflows double
precision long before z reaches 1. Internally the solver therefore works
with ``delta = 1 - x`` through ``s = ln(delta)``.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channel import DiscreteChannel, binary_entropy, new_channel, _kernel_h
from .errors import DomainError, Infeasible, InvalidParameter
from .numerics import DEFAULT_CONFIG, SolverConfig, bisect, bisect_array, integrate_open

LN2 = math.log(2.0)
# smallest delta = 1 - x the solver resolves; beyond it x(z) is treated as 1
_S_MIN = math.log(np.finfo(float).tiny)


def _check_capacity(c: float) -> float:
    if not (0.0 < c < 1.0):
        raise InvalidParameter(f"capacity must lie in (0, 1), got {c!r}")
    return float(c)


def epsilon_bsc(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Crossover probability of the BSC with capacity ``c``."""
    c = _check_capacity(c)
    fine = dataclasses.replace(cfg, root_tol=min(cfg.root_tol, 1e-16))
    return bisect(lambda e: binary_entropy(e) - (1.0 - c), 0.0, 0.5, fine)


def z_of_x(x):
    """
    Abscissa z at which mass position ``x`` is optimal for the minimum.

    ``z = (log(1-x) + log(1+x)) / (log(1-x) - log(1+x))``, strictly
    increasing from 0 to 1 on (0, 1).
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~((arr > 0.0) & (arr < 1.0))):
        raise DomainError(f"z_of_x needs x in (0, 1), got {x!r}")
    lm, lp = np.log1p(-arr), np.log1p(arr)
    out = (lm + lp) / (lm - lp)
    return float(out) if out.ndim == 0 else out


def _z_of_log_delta(s):
    # z as a function of s = ln(1 - x)
    lp = np.log1p(-np.expm1(s))
    return (s + lp) / (s - lp)


@lru_cache(maxsize=1)
def _assert_z_monotone() -> None:
    grid = np.linspace(0.0, 1.0, 10_002)[1:-1]
    if np.any(np.diff(z_of_x(grid)) <= 0.0):
        raise AssertionError("z_of_x is not strictly increasing on the check grid")


def delta_of_z(z, cfg: SolverConfig = DEFAULT_CONFIG):
    """
    ``1 - x(z)`` for z in (0, 1), accurate in relative terms.

    Returns 0 where ``1 - x(z)`` is below the smallest normal double.
    """
    _assert_z_monotone()
    arr = np.asarray(z, dtype=float)
    if np.any(~((arr > 0.0) & (arr < 1.0))):
        raise DomainError(f"x_of_z needs z in (0, 1), got {z!r}")
    flat = np.atleast_1d(arr).ravel()
    out = np.zeros_like(flat)
    z_floor = _z_of_log_delta(_S_MIN)
    todo = flat <= z_floor
    if todo.any():
        zt = flat[todo]
        s = bisect_array(lambda s: _z_of_log_delta(s) - zt,
                         np.full(zt.shape, _S_MIN), np.full(zt.shape, -1e-300), cfg)
        out[todo] = np.exp(s)
    out = out.reshape(arr.shape)
    return float(out) if out.ndim == 0 else out


def x_of_z(z, cfg: SolverConfig = DEFAULT_CONFIG):
    """Solution of ``x = (1 - x)**((z - 1)/(z + 1)) - 1`` in (0, 1)."""
    out = 1.0 - np.asarray(delta_of_z(z, cfg))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ExtremalProfile:
    """Per-capacity constants shared by the extremal Lambda functions."""

    c: float
    eps_bsc: float
    z_bsc: float

    @classmethod
    def for_capacity(cls, c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> "ExtremalProfile":
        c = _check_capacity(c)
        eps = epsilon_bsc(c, cfg)
        ebar = 1.0 - eps
        z_bsc = math.log2(4.0 * eps * ebar) / math.log2(eps / ebar)
        return cls(c, eps, z_bsc)

    @property
    def x_bsc(self) -> float:
        """Mass position ``1 - 2*eps_bsc`` of the BSC in the family."""
        return 1.0 - 2.0 * self.eps_bsc


def _as_profile(p) -> ExtremalProfile:
    return p if isinstance(p, ExtremalProfile) else ExtremalProfile.for_capacity(p)


def _unit(z):
    arr = np.asarray(z, dtype=float)
    if np.any(~((arr >= 0.0) & (arr <= 1.0))):
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    return arr


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def lambda_bar(p: ExtremalProfile, z):
    """Pointwise maximum of Lambda over all channels of capacity ``p.c``."""
    p = _as_profile(p)
    z = _unit(z)
    left = z < p.x_bsc
    with np.errstate(divide="ignore", invalid="ignore"):
        curved = (1.0 - p.c) * (1.0 - z) / _kernel_h(z)
    return _out(np.where(left, curved, 1.0 - z))


def lambda_star(p: ExtremalProfile, z):
    """
    Chord from ``(0, 1 - c)`` to the BSC point, then ``1 - z``.

    This is the concave majorant of `lambda_bar` only while the chord stays
    above it, i.e. for c up to about 0.5666; `lambda_envelope` is exact
    for all c.
    """
    p = _as_profile(p)
    z = _unit(z)
    c, x0 = p.c, p.x_bsc
    line = 1.0 - c - z * (1.0 - c - 2.0 * p.eps_bsc) / x0
    return _out(np.where(z < x0, line, 1.0 - z))


def _bar_slope(p: ExtremalProfile, z):
    # derivative of (1-c)(1-z)/h(z) on [0, 1 - 2 eps_bsc)
    h = _kernel_h(z)
    dh = -0.5 * np.log2((1.0 + z) / (1.0 - z))
    return (1.0 - p.c) * (-h - (1.0 - z) * dh) / h**2


@lru_cache(maxsize=1)
def bar_inflection() -> float:
    """
    Inflection point of ``(1 - z)/h(z)``, about 0.6075.

    ``lambda_bar`` is convex left of it and concave right of it, for every c.
    """
    def second(z):
        h = _kernel_h(z)
        dh = -0.5 * math.log2((1.0 + z) / (1.0 - z))
        d2h = -1.0 / (LN2 * (1.0 - z * z))
        n = 1.0 - z
        return -n * d2h / h**2 - 2.0 * dh * (-h - n * dh) / h**3

    return bisect(second, 0.3, 0.9)


def envelope_tangent(p: ExtremalProfile, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """
    Right end of the linear piece of the concave majorant of `lambda_bar`.

    The majorant follows the line through ``(0, 1 - c)`` up to this point,
    then `lambda_bar` itself. Equals ``1 - 2 eps_bsc`` when the chord to the
    BSC point already lies above `lambda_bar` (c below about 0.5666), in
    which case the majorant coincides with `lambda_star`.
    """
    p = _as_profile(p)
    lo = bar_inflection()
    if lo >= p.x_bsc:
        return p.x_bsc

    def excess(t):
        # tangent intercept at z = 0 minus (1 - c)
        return p.c - 1.0 + float(lambda_bar(p, t)) - t * float(_bar_slope(p, t))

    if excess(np.nextafter(p.x_bsc, 0.0)) <= 0.0:
        return p.x_bsc
    return bisect(excess, lo, np.nextafter(p.x_bsc, 0.0), cfg)


def lambda_envelope(p: ExtremalProfile, z, cfg: SolverConfig = DEFAULT_CONFIG):
    """
    Least concave majorant of `lambda_bar`: Lambda of the channel degraded
    w.r.t. every member of the family with the highest capacity.

    Agrees with `lambda_star` for c up to about 0.5666. Above that the
    chord of `lambda_star` dips below `lambda_bar` near ``1 - 2 eps_bsc``
    and this function must be used instead.
    """
    p = _as_profile(p)
    z = _unit(z)
    t = envelope_tangent(p, cfg)
    if t >= p.x_bsc:
        return lambda_star(p, z)
    slope = (float(lambda_bar(p, t)) - (1.0 - p.c)) / t
    line = 1.0 - p.c + slope * z
    with np.errstate(divide="ignore", invalid="ignore"):
        bar = lambda_bar(p, z)
    return _out(np.where(z < t, line, bar))


def capacity_envelope(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Capacity of the channel whose Lambda is `lambda_envelope`."""
    p = ExtremalProfile.for_capacity(c, cfg)
    t = envelope_tangent(p, cfg)
    if t >= p.x_bsc:
        return capacity_star(c, cfg)
    a = 1.0 - p.c
    b = (float(lambda_bar(p, t)) - a) / t
    line = (a * math.atanh(t) - 0.5 * b * math.log1p(-t * t)) / LN2
    curved = integrate_open(lambda z: lambda_bar(p, z) / (LN2 * (1.0 - z * z)), t, p.x_bsc, cfg)
    tail = math.log2(2.0 / (1.0 + p.x_bsc))
    return 1.0 - (line + curved + tail)


def least_degraded_channel(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> DiscreteChannel:
    """
    Two-mass channel whose Lambda is `lambda_star`.

    Degraded w.r.t. the whole family only for c up to about 0.5666; see
    `lambda_envelope`.
    """
    p = ExtremalProfile.for_capacity(c, cfg)
    x0 = p.x_bsc
    return new_channel([((1.0 - p.c - 2.0 * p.eps_bsc) / x0, 0.0), (p.c / x0, x0)])


def capacity_star(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Capacity of the least degraded channel, ``c**2 / (1 - 2 eps_bsc)``."""
    p = ExtremalProfile.for_capacity(c, cfg)
    return p.c**2 / p.x_bsc


def _opt_terms(p: ExtremalProfile, z, cfg: SolverConfig):
    delta = np.asarray(delta_of_z(z, cfg))
    h = binary_entropy(0.5 * delta)
    gamma = np.clip((1.0 - p.c - h) / (1.0 - h), 0.0, 1.0 - p.c)
    return gamma, delta, h


def gamma_of_z(p: ExtremalProfile, z, cfg: SolverConfig = DEFAULT_CONFIG):
    """Optimal mass at x = 0 of the minimizing two-mass channel, z in [z_bsc, 1)."""
    p = _as_profile(p)
    arr = np.asarray(z, dtype=float)
    if np.any(~((arr >= p.z_bsc) & (arr < 1.0))):
        raise DomainError(f"gamma_of_z needs z in [z_bsc={p.z_bsc:.6g}, 1), got {z!r}")
    gamma, _, _ = _opt_terms(p, arr, cfg)
    return _out(gamma)


def lambda_under(p: ExtremalProfile, z, cfg: SolverConfig = DEFAULT_CONFIG):
    """
    Pointwise minimum of Lambda over all channels of capacity ``p.c``.

    Constant ``2 eps_bsc`` below ``z_bsc``; above it the optimal channel has
    mass ``gamma(z)`` at 0 and the rest at ``x(z)``.
    """
    p = _as_profile(p)
    z = _unit(z)
    flat = np.atleast_1d(z).ravel()
    out = np.full(flat.shape, 2.0 * p.eps_bsc)
    mid = (flat >= p.z_bsc) & (flat < 1.0)
    if mid.any():
        zm = flat[mid]
        gamma, delta, h = _opt_terms(p, zm, cfg)
        out[mid] = gamma * (1.0 - zm) + p.c / (1.0 - h) * delta
    out[flat == 1.0] = 0.0
    return _out(out.reshape(z.shape))


def lambda_opt_bruteforce(c: float, z: float, grid_n: int = 100_000) -> float:
    """
    Direct grid search for the two-mass minimum of Lambda at ``z``.

    Searches mass ``gamma`` at 0 and ``1 - gamma`` at ``x`` with ``x`` in
    ``[max(z, 1 - 2 eps_bsc), 1)``, ``gamma`` fixed by the entropy
    constraint. Half the grid is uniform in ``x``; the other half is
    log-uniform in ``1 - x`` so that optima exponentially close to 1 are
    reachable. Independent of the fixed-point solver.
    """
    p = ExtremalProfile.for_capacity(c)
    if not (p.z_bsc <= z < 1.0):
        raise DomainError(f"need z in [z_bsc={p.z_bsc:.6g}, 1), got {z!r}")
    if grid_n < 1000:
        raise InvalidParameter("grid_n must be at least 1000")
    lo = max(z, p.x_bsc)
    width = 1.0 - lo
    half = grid_n // 2
    uniform = width * (1.0 - np.arange(half) / half)
    logspaced = np.exp(np.linspace(math.log(width), _S_MIN, grid_n - half))
    delta = np.concatenate((uniform, logspaced))
    h = binary_entropy(0.5 * delta)
    gamma = (1.0 - p.c - h) / (1.0 - h)
    ok = (gamma >= 0.0) & (gamma <= 1.0)
    if not ok.any():
        raise Infeasible(f"no feasible grid point at c={c}, z={z}")
    obj = gamma[ok] * (1.0 - z) + (1.0 - gamma[ok]) * delta[ok]
    return float(obj.min())


def capacity_under(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """
    Capacity of the least upgraded channel, by numerical integration.

    The constant piece on ``[0, z_bsc]`` is integrated in closed form; the
    rest goes through `integrate_open` so the integrand is never evaluated
    at ``z = 1``.
    """
    p = ExtremalProfile.for_capacity(c, cfg)
    head = 2.0 * p.eps_bsc * math.atanh(p.z_bsc) / LN2

    def integrand(z):
        return lambda_under(p, z, cfg) / (LN2 * (1.0 - z) * (1.0 + z))

    tail = integrate_open(integrand, p.z_bsc, 1.0, cfg)
    return 1.0 - head - tail


@dataclass(frozen=True)
class CapacityGapRow:
    c: float
    c_star: float
    c_under: float
    d_gap: float
    u_gap: float


def gap_row(c: float, cfg: SolverConfig = DEFAULT_CONFIG) -> CapacityGapRow:
    """Capacities of both extremal channels and their gaps to ``c``."""
    c_star = capacity_star(c, cfg)
    c_under = capacity_under(c, cfg)
    return CapacityGapRow(float(c), c_star, c_under, c - c_star, c_under - c)
