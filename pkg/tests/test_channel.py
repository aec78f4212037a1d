import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bmsorder.channel import (bec, bhattacharyya, bsc, capacity, channel_from_json,
                              channel_to_json, entropy, error_probability, kernel_h,
                              load_channel, new_channel, save_channel)
from bmsorder.errors import (DomainError, InvalidMass, InvalidParameter, InvalidPosition,
                             MassSum)

H2_QUARTER = 0.8112781244591328  # -p log2 p - (1-p) log2 (1-p) at p = 1/4


def test_new_channel_bec_like():
    ch = new_channel([(0.5, 0.0), (0.5, 1.0)])
    assert ch.n == 2
    assert ch.masses == ((0.5, 0.0), (0.5, 1.0))


def test_new_channel_merges_duplicates():
    ch = new_channel([(0.3, 0.4), (0.3, 0.4), (0.4, 0.9)])
    assert ch.n == 2
    np.testing.assert_allclose(ch.alphas, [0.6, 0.4])
    np.testing.assert_allclose(ch.xs, [0.4, 0.9])


def test_new_channel_sorts_drops_and_renormalizes():
    ch = new_channel([(0.5, 0.9), (1e-16, 0.5), (0.5 - 1e-10, 0.1)])
    assert list(ch.xs) == [0.1, 0.9]
    assert ch.alphas.sum() == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("pairs, err", [
    ([(0.5, 0.0), (0.6, 1.0)], MassSum),
    ([(1.2, 0.0)], InvalidMass),
    ([(-0.1, 0.0), (1.1, 0.5)], InvalidMass),
    ([(1.0, 1.5)], InvalidPosition),
    ([], MassSum),
])
def test_new_channel_errors(pairs, err):
    with pytest.raises(err):
        new_channel(pairs)


def test_channel_is_immutable():
    ch = bec(0.3)
    with pytest.raises(ValueError):
        ch.alphas[0] = 0.5


def test_bsc_positions():
    assert bsc(0.5).masses == ((1.0, 0.0),)
    assert bsc(0.25).masses == ((1.0, 0.5),)
    ch = bsc(0.110028)
    assert ch.xs[0] == pytest.approx(0.779944, abs=1e-12)
    assert capacity(ch) == pytest.approx(0.5, abs=1e-5)


@pytest.mark.parametrize("eps", [0.0, -0.1, 0.6])
def test_bsc_invalid(eps):
    with pytest.raises(InvalidParameter):
        bsc(eps)


def test_bec():
    ch = bec(0.5)
    assert ch.masses == ((0.5, 0.0), (0.5, 1.0))
    assert capacity(ch) == 0.5
    assert bec(0.0).masses == ((1.0, 1.0),)
    assert capacity(bec(0.0)) == 1.0
    assert bec(1.0).masses == ((1.0, 0.0),)
    assert capacity(bec(1.0)) == 0.0
    with pytest.raises(InvalidParameter):
        bec(1.5)


def test_kernel_h():
    assert kernel_h(0.0) == 1.0
    assert kernel_h(1.0) == 0.0
    assert kernel_h(0.5) == pytest.approx(H2_QUARTER, abs=1e-15)
    with pytest.raises(DomainError):
        kernel_h(1.0001)
    with pytest.raises(DomainError):
        kernel_h(np.array([0.2, -0.1]))


def test_functionals_examples():
    assert entropy(bec(0.5)) == 0.5
    assert entropy(bsc(0.110028)) == pytest.approx(0.5, abs=1e-5)
    assert entropy(new_channel([(1.0, 1.0)])) == 0.0
    assert capacity(bsc(0.25)) == pytest.approx(1 - H2_QUARTER, abs=1e-12)
    assert capacity(new_channel([(1.0, 0.0)])) == 0.0
    assert bhattacharyya(bec(0.5)) == 0.5
    assert bhattacharyya(bsc(0.11)) == pytest.approx(0.6257795138864807, abs=1e-12)
    assert bhattacharyya(new_channel([(1.0, 1.0)])) == 0.0
    assert error_probability(new_channel([(1.0, 0.0)])) == 0.5
    assert error_probability(bsc(0.11)) == pytest.approx(0.11, abs=1e-15)
    assert error_probability(bec(0.5)) == 0.25


@st.composite
def channels(draw, max_masses=6):
    n = draw(st.integers(1, max_masses))
    xs = draw(st.lists(st.floats(0.0, 1.0), min_size=n, max_size=n))
    ws = draw(st.lists(st.floats(0.01, 1.0), min_size=n, max_size=n))
    total = sum(ws)
    return new_channel([(w / total, x) for w, x in zip(ws, xs)])


@settings(max_examples=200, deadline=None)
@given(channels())
def test_functional_ranges(ch):
    assert np.all(np.diff(ch.xs) > 0)
    assert ch.alphas.sum() == pytest.approx(1.0, abs=1e-12)
    assert 0.0 <= capacity(ch) <= 1.0
    assert 0.0 <= bhattacharyya(ch) <= 1.0
    assert 0.0 <= error_probability(ch) <= 0.5
    assert capacity(ch) + entropy(ch) == 1.0


def test_bsc_identities_random():
    rng = np.random.default_rng(7)
    for eps in rng.uniform(1e-6, 0.5, 100):
        ch = bsc(eps)
        assert bhattacharyya(ch) == pytest.approx(2 * math.sqrt(eps * (1 - eps)), abs=1e-12)
        assert error_probability(ch) == pytest.approx(eps, abs=1e-12)


def test_json_roundtrip(tmp_path):
    ch = new_channel([(0.3, 0.123456789012345678), (0.7, 0.9)])
    text = channel_to_json(ch)
    obj = json.loads(text)
    assert [m["x"] for m in obj["masses"]] == sorted(m["x"] for m in obj["masses"])
    assert "0.12345678901234568" in text
    assert channel_from_json(text) == ch
    save_channel(ch, tmp_path / "ch.json")
    assert load_channel(tmp_path / "ch.json") == ch


def test_json_malformed():
    from bmsorder.errors import BMSError
    with pytest.raises(BMSError):
        channel_from_json('{"mass": []}')
    with pytest.raises(BMSError):
        channel_from_json("not json")
