"""
Lambda functions of discrete channels and the degradation order.

For a discrete channel ``Lambda(z) = sum alpha_i (1 - max(z, x_i))``. It is
piecewise linear with kinks at the mass positions, so comparing two channels
only requires evaluating both at the union of their breakpoints.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .channel import DiscreteChannel
from .errors import DomainError, InvalidParameter, NonZeroTail

ORDER_TOL = 1e-10
SHAPE_TOL = 1e-12


class Ordering(enum.Enum):
    EQUIVALENT = "equivalent"
    DEGRADED = "degraded"        # first argument is degraded w.r.t. the second
    UPGRADED = "upgraded"        # first argument is upgraded w.r.t. the second
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class PiecewiseLinear:
    """
    Continuous piecewise-linear function on [0, 1].

    ``breaks`` are strictly increasing with ``breaks[0] == 0`` and
    ``breaks[-1] == 1``. Construction checks that the function is
    nonincreasing and concave.
    """

    breaks: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.breaks, dtype=float)
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "breaks", b)
        object.__setattr__(self, "values", v)
        if b.ndim != 1 or b.shape != v.shape or len(b) < 2:
            raise InvalidParameter("breaks and values must be 1-D arrays of equal length >= 2")
        if b[0] != 0.0 or b[-1] != 1.0 or np.any(np.diff(b) <= 0):
            raise InvalidParameter("breaks must increase strictly from 0 to 1")
        if np.any(np.diff(v) > SHAPE_TOL):
            raise InvalidParameter("profile is not nonincreasing")
        if len(b) > 2:
            # chord test, robust to nearly coincident breakpoints
            w = (b[1:-1] - b[:-2]) / (b[2:] - b[:-2])
            chord = (1.0 - w) * v[:-2] + w * v[2:]
            if np.any(v[1:-1] < chord - SHAPE_TOL):
                raise InvalidParameter("profile is not concave")
        b.setflags(write=False)
        v.setflags(write=False)

    @property
    def slopes(self) -> np.ndarray:
        return np.diff(self.values) / np.diff(self.breaks)

    def __call__(self, z):
        return np.interp(z, self.breaks, self.values)


def _check_unit(z):
    arr = np.asarray(z, dtype=float)
    if np.any(~((arr >= 0.0) & (arr <= 1.0))):
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    return arr


def lambda_eval(ch: DiscreteChannel, z):
    """Evaluate ``Lambda_ch`` at scalar or array ``z``."""
    arr = _check_unit(z)
    out = (1.0 - np.maximum(arr[..., None], ch.xs)) @ ch.alphas
    return float(out) if np.ndim(out) == 0 else out


def lambda_profile(ch: DiscreteChannel) -> PiecewiseLinear:
    """Exact piecewise-linear representation of ``Lambda_ch``."""
    breaks = np.unique(np.concatenate(([0.0], ch.xs, [1.0])))
    values = lambda_eval(ch, breaks)
    values[-1] = 0.0
    return PiecewiseLinear(breaks, values)


def _union_values(a: PiecewiseLinear, b: PiecewiseLinear):
    z = np.union1d(a.breaks, b.breaks)
    return a(z), b(z)


def is_degraded(candidate: PiecewiseLinear, reference: PiecewiseLinear,
                tol: float = ORDER_TOL) -> bool:
    """True if the candidate channel is degraded w.r.t. the reference one."""
    cand, ref = _union_values(candidate, reference)
    return bool(np.all(ref <= cand + tol))


def compare(a: PiecewiseLinear, b: PiecewiseLinear, tol: float = ORDER_TOL) -> Ordering:
    va, vb = _union_values(a, b)
    diff = va - vb
    if np.all(np.abs(diff) <= tol):
        return Ordering.EQUIVALENT
    if np.all(diff >= -tol):
        return Ordering.DEGRADED
    if np.all(diff <= tol):
        return Ordering.UPGRADED
    return Ordering.INCOMPARABLE


def entropy_from_lambda(pl: PiecewiseLinear) -> float:
    """
    Entropy as ``int_0^1 Lambda(z) / (ln 2 (1 - z^2)) dz``, integrated exactly.

    On a segment ``Lambda = A + B z`` the antiderivative is
    ``A atanh(z) - (B/2) ln(1 - z^2)``. The last segment ends at z = 1
    where Lambda vanishes, so there ``Lambda = s (1 - z)`` and the integrand
    reduces to ``s / (1 + z)``.
    """
    if abs(pl.values[-1]) > ORDER_TOL:
        raise NonZeroTail(f"Lambda(1) = {pl.values[-1]!r}, expected 0")
    b, v = pl.breaks, pl.values
    total = 0.0
    for k in range(len(b) - 2):
        z0, z1 = b[k], b[k + 1]
        slope = (v[k + 1] - v[k]) / (z1 - z0)
        icpt = v[k] - slope * z0
        total += (icpt * (math.atanh(z1) - math.atanh(z0))
                  - 0.5 * slope * (math.log1p(-z1 * z1) - math.log1p(-z0 * z0)))
    z0 = b[-2]
    s = v[-2] / (1.0 - z0)
    total += s * (math.log(2.0) - math.log1p(z0))
    return total / math.log(2.0)
