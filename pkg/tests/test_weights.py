import math

import pytest
from hypothesis import given, strategies as st

from ranklevel.weights import (
    Weight,
    enumerate_weights,
    level1_label,
    level1_weight,
    weight_dagger,
    weight_from_json,
    weight_to_json,
)

from oracles import all_weights


def W(*labels):
    return Weight(len(labels) + 1, labels)


def test_enumerate_small_cases():
    assert enumerate_weights(2, 2) == [W(0), W(1), W(2)]
    assert enumerate_weights(2, 1) == [W(0), W(1)]
    assert len(enumerate_weights(3, 4)) == 15


def test_rank_one_is_a_single_empty_weight():
    assert enumerate_weights(1, 5) == [Weight(1, ())]


@pytest.mark.parametrize("r", range(1, 7))
@pytest.mark.parametrize("l", range(0, 7))
def test_enumeration_count_and_order(r, l):
    ws = enumerate_weights(r, l)
    assert len(ws) == math.comb(l + r - 1, r - 1)
    assert [w.labels for w in ws] == sorted(all_weights(r, l))
    assert all(w.in_level(l) for w in ws)


def test_dagger_examples():
    assert weight_dagger(W(0, 0)) == W(0, 0)
    assert weight_dagger(W(2, 1)) == W(1, 2)
    assert level1_label(weight_dagger(level1_weight(1, 12))) == 11


@pytest.mark.parametrize("r,l", [(2, 3), (3, 3), (4, 2), (5, 2)])
def test_dagger_involutive_and_closed(r, l):
    ws = set(enumerate_weights(r, l))
    for w in ws:
        assert weight_dagger(weight_dagger(w)) == w
        assert weight_dagger(w) in ws


@pytest.mark.parametrize("r", range(2, 13))
def test_level1_identification(r):
    assert level1_label(Weight.zero(r)) == 0
    for i in range(r):
        w = level1_weight(i, r)
        assert level1_label(w) == i
        assert level1_label(weight_dagger(w)) == (r - i if i else 0)


def test_level1_examples():
    assert level1_label(level1_weight(5, 12)) == 5
    assert level1_weight(11, 12).labels == (0,) * 10 + (1,)


def test_level1_rejects_higher_weights():
    with pytest.raises(ValueError):
        level1_label(W(1, 1))
    with pytest.raises(ValueError):
        level1_weight(3, 3)


def test_invalid_weights():
    with pytest.raises(ValueError):
        Weight(3, (1,))
    with pytest.raises(ValueError):
        Weight(2, (-1,))
    with pytest.raises(ValueError):
        Weight(0, ())


def test_json_round_trip():
    w = W(2, 0, 1)
    assert weight_to_json(w) == {"rank": 4, "labels": [2, 0, 1]}
    assert weight_from_json(weight_to_json(w)) == w
    assert weight_from_json(3, rank=12) == level1_weight(3, 12)
    with pytest.raises(ValueError):
        weight_from_json(3)


@given(st.lists(st.integers(0, 5), min_size=0, max_size=6))
def test_dagger_preserves_level(labels):
    w = Weight(len(labels) + 1, tuple(labels))
    assert weight_dagger(w).level == w.level
    assert weight_dagger(weight_dagger(w)) == w
