import numpy as np
import pytest

from bmsorder.sampler import SamplerConfig, make_rng, sample_channel


def random_channels(count, seed, capacities=(0.2, 0.5, 0.8)):
    """Mixed two- and three-mass channels over a few capacities, one stream."""
    rng = make_rng(seed)
    out = []
    for i in range(count):
        c = capacities[i % len(capacities)]
        n = 2 + (i // len(capacities)) % 2
        out.append(sample_channel(SamplerConfig(c, n, seed), rng))
    return out


@pytest.fixture(scope="session")
def mixed_channels():
    return random_channels(1000, seed=2024)
