"""
Scalar root finding and open-interval quadrature.

Both routines work with absolute tolerances because every quantity the
package computes lives in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import InvalidParameter, NoBracket, NoConvergence, NonFinite

GL_ORDER = 32


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and iteration caps for `bisect` and `integrate_open`."""

    root_tol: float = 1e-12
    quad_tol: float = 1e-10
    max_iter: int = 200
    max_panels: int = 2**16

    def __post_init__(self):
        if not (self.root_tol > 0 and self.quad_tol > 0):
            raise InvalidParameter("tolerances must be strictly positive")
        for name in ("max_iter", "max_panels"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value <= 0:
                raise InvalidParameter(f"{name} must be a positive integer, got {value!r}")


DEFAULT_CONFIG = SolverConfig()


def bisect(f: Callable[[float], float], lo: float, hi: float,
           cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """
    Find a sign change of a continuous monotone function on ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Scalar function with ``f(lo)`` and ``f(hi)`` of opposite sign
        (or one of them zero).
    lo, hi : float
        Bracket, ``lo < hi``.
    cfg : SolverConfig
        ``root_tol`` bounds the width of the final bracket.

    Returns
    -------
    float
        Midpoint of a bracket of width at most ``root_tol``.
    """
    if not lo < hi:
        raise InvalidParameter(f"need lo < hi, got lo={lo}, hi={hi}")
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0:
        return float(lo)
    if f_hi == 0:
        return float(hi)
    if np.sign(f_lo) == np.sign(f_hi):
        raise NoBracket(f"f({lo})={f_lo} and f({hi})={f_hi} do not bracket a root")
    lo_sign = np.sign(f_lo)
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= cfg.root_tol or mid <= lo or mid >= hi:
            return float(mid)
        f_mid = f(mid)
        if f_mid == 0:
            return float(mid)
        if np.sign(f_mid) == lo_sign:
            lo = mid
        else:
            hi = mid
    if hi - lo <= cfg.root_tol:
        return float(0.5 * (lo + hi))
    raise NoConvergence(f"bisection did not reach root_tol={cfg.root_tol} in {cfg.max_iter} steps")


def bisect_array(f: Callable[[np.ndarray], np.ndarray], lo, hi,
                 cfg: SolverConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Elementwise `bisect` for a vectorized ``f`` and broadcastable brackets."""
    lo, hi = np.broadcast_arrays(np.asarray(lo, dtype=float), np.asarray(hi, dtype=float))
    lo = lo.copy()
    hi = hi.copy()
    if np.any(lo >= hi):
        raise InvalidParameter("need lo < hi elementwise")
    lo_sign = np.sign(f(lo))
    hi_sign = np.sign(f(hi))
    if np.any((lo_sign == hi_sign) & (lo_sign != 0)):
        raise NoBracket("some brackets do not contain a sign change")
    done_lo = lo_sign == 0
    done_hi = hi_sign == 0
    hi = np.where(done_lo, lo, hi)
    lo = np.where(done_hi, hi, lo)
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        active = (hi - lo > cfg.root_tol) & (mid > lo) & (mid < hi)
        if not active.any():
            return mid
        s = np.sign(f(mid))
        go_right = active & (s == lo_sign)
        go_left = active & (s != lo_sign) & (s != 0)
        exact = active & (s == 0)
        lo = np.where(go_right | exact, mid, lo)
        hi = np.where(go_left | exact, mid, hi)
    mid = 0.5 * (lo + hi)
    if np.all(hi - lo <= cfg.root_tol):
        return mid
    raise NoConvergence(f"bisection did not reach root_tol={cfg.root_tol} in {cfg.max_iter} steps")


@lru_cache(maxsize=None)
def _gauss_legendre(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def integrate_open(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                   cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """
    Integrate ``f`` over ``[a, b]`` without ever evaluating it at ``a`` or ``b``.

    Composite 32-point Gauss-Legendre, doubling the panel count until two
    successive estimates differ by less than ``cfg.quad_tol``. ``f`` is
    called on a 1-D array of interior nodes and must return an array of the
    same shape.
    """
    if not a < b:
        raise InvalidParameter(f"need a < b, got a={a}, b={b}")
    nodes, weights = _gauss_legendre(GL_ORDER)
    previous = None
    panels = 1
    while panels <= cfg.max_panels:
        edges = np.linspace(a, b, panels + 1)
        half = 0.5 * (edges[1:] - edges[:-1])
        centre = 0.5 * (edges[1:] + edges[:-1])
        z = (centre[:, None] + half[:, None] * nodes[None, :]).ravel()
        values = np.asarray(f(z), dtype=float)
        if values.shape != z.shape:
            values = np.broadcast_to(values, z.shape)
        if not np.all(np.isfinite(values)):
            bad = z[~np.isfinite(values)][0]
            raise NonFinite(f"integrand is not finite at z={bad!r}")
        estimate = float(np.sum(values.reshape(panels, GL_ORDER) @ weights * half))
        if previous is not None and abs(estimate - previous) < cfg.quad_tol:
            return estimate
        previous = estimate
        panels *= 2
    raise NoConvergence(f"quadrature did not converge within {cfg.max_panels} panels")
