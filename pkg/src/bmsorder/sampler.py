"""
Random discrete channels of an exact target capacity.

Positions are drawn uniformly and the masses are then solved from the
entropy constraint, so every sample has capacity ``c`` up to rounding.
Randomness comes from numpy's PCG64 bit generator seeded directly with
``seed``; a batch is one sequential stream, so a batch of ``2k`` starts
with the batch of ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channel import DiscreteChannel, _kernel_h, new_channel
from .errors import InvalidParameter, RejectionExhausted
from .extremal import epsilon_bsc

_MIN_MASS = 1e-15


@dataclass(frozen=True)
class SamplerConfig:
    capacity: float
    n_masses: int = 2
    seed: int = 0
    max_rejects: int = 10_000

    def __post_init__(self):
        if not (0.0 < self.capacity < 1.0):
            raise InvalidParameter(f"capacity must lie in (0, 1), got {self.capacity!r}")
        if self.n_masses not in (2, 3):
            raise InvalidParameter(f"n_masses must be 2 or 3, got {self.n_masses!r}")
        if not (0 <= int(self.seed) < 2**64):
            raise InvalidParameter("seed must be a 64-bit unsigned integer")
        if self.max_rejects <= 0:
            raise InvalidParameter("max_rejects must be positive")


@lru_cache(maxsize=256)
def _x_bsc(c: float) -> float:
    return 1.0 - 2.0 * epsilon_bsc(c)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def _two_mass(c: float, x_bsc: float, rng: np.random.Generator):
    x1 = rng.random() * x_bsc
    x2 = 1.0 - rng.random() * (1.0 - x_bsc)
    h1, h2 = _kernel_h(x1), _kernel_h(x2)
    a1 = (1.0 - c - h2) / (h1 - h2)
    return [(a1, x1), (1.0 - a1, x2)]


def _three_mass(c: float, x_bsc: float, rng: np.random.Generator):
    x1, x2, x3 = np.sort(rng.random(3))
    a2 = rng.random()
    if x3 <= x_bsc:
        return None
    h1, h2, h3 = _kernel_h(np.array([x1, x2, x3]))
    det = h1 - h3
    if abs(det) < 1e-12:
        return None
    rest = 1.0 - a2
    a1 = (1.0 - c - a2 * h2 - rest * h3) / det
    a3 = rest - a1
    if not (0.0 <= a1 <= 1.0 and 0.0 <= a3 <= 1.0):
        return None
    return [(a1, x1), (a2, x2), (a3, x3)]


def sample_channel(cfg: SamplerConfig, rng: np.random.Generator) -> DiscreteChannel:
    """
    Draw one channel with ``cfg.n_masses`` masses and capacity ``cfg.capacity``.

    Two masses: ``x1`` uniform below ``1 - 2 eps_bsc``, ``x2`` uniform above
    it. Three masses: sorted uniform positions and a uniform middle mass,
    redrawn until the remaining two masses are feasible.
    """
    c = cfg.capacity
    x_bsc = _x_bsc(c)
    draw = _two_mass if cfg.n_masses == 2 else _three_mass
    for _ in range(cfg.max_rejects):
        pairs = draw(c, x_bsc, rng)
        if pairs is None or min(a for a, _ in pairs) < _MIN_MASS:
            continue
        xs = [x for _, x in pairs]
        if min(np.diff(xs)) < 1e-12:
            continue
        # rounding can push a mass sum a few ulps off; new_channel renormalizes
        return new_channel([(min(max(a, 0.0), 1.0), x) for a, x in pairs])
    raise RejectionExhausted(f"no feasible channel after {cfg.max_rejects} draws")


def sample_batch(cfg: SamplerConfig, count: int) -> list[DiscreteChannel]:
    """``count`` channels from a single stream seeded with ``cfg.seed``."""
    if count < 0:
        raise InvalidParameter("count must be non-negative")
    rng = make_rng(cfg.seed)
    return [sample_channel(cfg, rng) for _ in range(count)]
