"""
Discrete BMS channels in the |D| domain.

A channel is a finite list of point masses ``alpha_i`` at positions
``x_i`` in [0, 1]. All functionals are linear in the masses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

from .errors import BMSError, DomainError, InvalidMass, InvalidParameter, InvalidPosition, MassSum

MERGE_TOL = 1e-12
DROP_TOL = 1e-15
MASS_SUM_TOL = 1e-9


class MassPoint(NamedTuple):
    alpha: float
    x: float


@dataclass(frozen=True, eq=False)
class DiscreteChannel:
    """
    Immutable |D|-density: masses ``alphas`` at strictly increasing ``xs``.

    Build instances with `new_channel`, `bsc` or `bec`; the constructor
    itself does no normalization.
    """

    alphas: np.ndarray
    xs: np.ndarray

    def __post_init__(self):
        for arr in (self.alphas, self.xs):
            arr.setflags(write=False)

    @property
    def masses(self) -> tuple[MassPoint, ...]:
        return tuple(MassPoint(float(a), float(x)) for a, x in zip(self.alphas, self.xs))

    @property
    def n(self) -> int:
        return len(self.xs)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other):
        if not isinstance(other, DiscreteChannel):
            return NotImplemented
        return np.array_equal(self.alphas, other.alphas) and np.array_equal(self.xs, other.xs)

    def __repr__(self):
        body = ", ".join(f"({a:.6g}, {x:.6g})" for a, x in self.masses)
        return f"DiscreteChannel([{body}])"


def new_channel(pairs: Iterable[tuple[float, float]]) -> DiscreteChannel:
    """
    Validate and normalize ``(alpha, x)`` pairs into a channel.

    Pairs are sorted by position, positions closer than 1e-12 are merged,
    masses below 1e-15 are dropped and the total is rescaled to exactly 1.
    """
    pairs = [(float(a), float(x)) for a, x in pairs]
    if not pairs:
        raise MassSum("a channel needs at least one mass")
    for a, x in pairs:
        if not (0.0 <= a <= 1.0):
            raise InvalidMass(f"mass {a!r} outside [0, 1]")
        if not (0.0 <= x <= 1.0):
            raise InvalidPosition(f"position {x!r} outside [0, 1]")
    total = sum(a for a, _ in pairs)
    if abs(total - 1.0) >= MASS_SUM_TOL:
        raise MassSum(f"masses sum to {total!r}, expected 1")

    pairs.sort(key=lambda p: p[1])
    merged: list[list[float]] = []
    for a, x in pairs:
        if merged and x - merged[-1][1] < MERGE_TOL:
            merged[-1][0] += a
        else:
            merged.append([a, x])
    kept = [(a, x) for a, x in merged if a >= DROP_TOL]
    if not kept:
        raise MassSum("no mass left after dropping negligible masses")
    alphas = np.array([a for a, _ in kept])
    alphas = alphas / alphas.sum()
    xs = np.array([x for _, x in kept])
    return DiscreteChannel(alphas, xs)


def bsc(epsilon: float) -> DiscreteChannel:
    """Binary symmetric channel: a single mass at ``1 - 2*epsilon``."""
    if not (0.0 < epsilon <= 0.5):
        raise InvalidParameter(f"crossover probability must be in (0, 0.5], got {epsilon!r}")
    return new_channel([(1.0, 1.0 - 2.0 * epsilon)])


def bec(erasure: float) -> DiscreteChannel:
    """Binary erasure channel: mass ``erasure`` at 0 and the rest at 1."""
    if not (0.0 <= erasure <= 1.0):
        raise InvalidParameter(f"erasure probability must be in [0, 1], got {erasure!r}")
    return new_channel([(erasure, 0.0), (1.0 - erasure, 1.0)])


def binary_entropy(p):
    """h2(p) in bits, with h2(0) = h2(1) = 0 exactly. Accepts arrays."""
    p = np.asarray(p, dtype=float)
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -(p * np.log2(p) + q * np.log2(q))
    out = np.where((p <= 0.0) | (p >= 1.0), 0.0, out)
    return out[()] if out.ndim == 0 else out


def _kernel_h(x):
    # h2((1 - x)/2) without the domain check; q = (1 + x)/2 keeps precision near x = 1
    x = np.asarray(x, dtype=float)
    p = 0.5 * (1.0 - x)
    q = 0.5 * (1.0 + x)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -(p * np.log2(p) + q * np.log2(q))
    out = np.where(p <= 0.0, 0.0, out)
    return out[()] if out.ndim == 0 else out


def kernel_h(x):
    """Entropy kernel ``h2((1 - x)/2)`` on [0, 1]; decreasing and concave."""
    arr = np.asarray(x, dtype=float)
    if np.any(~((arr >= 0.0) & (arr <= 1.0))):
        raise DomainError(f"kernel_h is defined on [0, 1], got {x!r}")
    return _kernel_h(arr)


def entropy(ch: DiscreteChannel) -> float:
    return float(np.dot(ch.alphas, _kernel_h(ch.xs)))


def capacity(ch: DiscreteChannel) -> float:
    """Capacity in bits per channel use, ``1 - entropy``."""
    return 1.0 - entropy(ch)


def bhattacharyya(ch: DiscreteChannel) -> float:
    return float(np.dot(ch.alphas, np.sqrt(1.0 - ch.xs**2)))


def error_probability(ch: DiscreteChannel) -> float:
    """MAP bit error probability, ``sum alpha_i (1 - x_i) / 2``."""
    return float(np.dot(ch.alphas, 0.5 * (1.0 - ch.xs)))


# -- serialization ---------------------------------------------------------

def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def channel_to_json(ch: DiscreteChannel) -> str:
    """``{"masses": [{"alpha": ..., "x": ...}, ...]}`` with 17 significant digits."""
    items = ", ".join(f'{{"alpha": {_fmt(a)}, "x": {_fmt(x)}}}' for a, x in zip(ch.alphas, ch.xs))
    return f'{{"masses": [{items}]}}'


def channel_from_obj(obj) -> DiscreteChannel:
    try:
        pairs = [(m["alpha"], m["x"]) for m in obj["masses"]]
    except (KeyError, TypeError) as exc:
        raise BMSError(f"malformed channel object: {exc}") from exc
    return new_channel(pairs)


def channel_from_json(text: str) -> DiscreteChannel:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BMSError(f"invalid JSON: {exc}") from exc
    return channel_from_obj(obj)


def save_channel(ch: DiscreteChannel, path) -> None:
    Path(path).write_text(channel_to_json(ch) + "\n")


def load_channel(path) -> DiscreteChannel:
    return channel_from_json(Path(path).read_text())
