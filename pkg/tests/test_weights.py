"""Weight derivation: crisp geometric mean and the fuzzy variant."""

import numpy as np
import pytest

from fahp.matrix import FuzzyComparisonMatrix
from fahp.tfn import TFN
from fahp.weights import (
    DerivationMethod,
    WeightVector,
    derive_buckley,
    derive_gm_middle,
    derive_weights,
)

from conftest import matrix_from_pairs, random_score_matrix

MAIN_EXPECTED = (0.125, 0.416, 0.353, 0.046, 0.060)
POLITICAL_EXPECTED = (0.080, 0.229, 0.207, 0.484)
SOCIAL_EXPECTED = (0.100, 0.900)


def assert_close(vector, expected, tol):
    assert len(vector.values) == len(expected)
    for got, want in zip(vector.values, expected):
        assert got == pytest.approx(want, abs=tol)


def test_gm_middle_main_criteria(model):
    assert_close(derive_gm_middle(model.judgments["goal"]), MAIN_EXPECTED, 0.002)


def test_gm_middle_social(model):
    assert_close(derive_gm_middle(model.judgments["C4"]), SOCIAL_EXPECTED, 0.001)


def test_gm_middle_political(model):
    assert_close(derive_gm_middle(model.judgments["C3"]), POLITICAL_EXPECTED, 0.002)


def test_gm_middle_uniform_matrix():
    pairs = {(i, j): 1 for i in range(4) for j in range(i + 1, 4)}
    vec = derive_gm_middle(matrix_from_pairs(list("abcd"), pairs))
    assert_close(vec, (0.25, 0.25, 0.25, 0.25), 1e-12)


def test_buckley_uniform_matrix():
    pairs = {(i, j): 1 for i in range(3) for j in range(i + 1, 3)}
    vec = derive_buckley(matrix_from_pairs(list("abc"), pairs))
    assert_close(vec, (1 / 3, 1 / 3, 1 / 3), 1e-12)


def test_buckley_political_close_to_gm(model):
    vec = derive_buckley(model.judgments["C3"])
    # frozen from an independent fuzzy-geometric-mean computation
    assert_close(vec, (0.0825, 0.2344, 0.2057, 0.4774), 5e-4)
    for got, want in zip(vec.values, POLITICAL_EXPECTED):
        assert got == pytest.approx(want, abs=0.05)


def test_buckley_two_by_two_closed_form():
    vec = derive_buckley(matrix_from_pairs(["x", "y"], {(0, 1): 9}))
    # closed form: r1=(sqrt(8),3,3), r2=(sqrt(1/9),1/3,sqrt(1/8)), w_i = centroid(r_i/(sum r)), normalized
    assert vec.values[0] == pytest.approx(0.8963802451880575, abs=1e-12)
    assert vec.values[1] == pytest.approx(0.10361975481194247, abs=1e-12)
    assert sum(vec.values) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("method", list(DerivationMethod))
def test_consistent_embedded_matrix_recovers_weights(method):
    w = np.array([0.42, 0.08, 0.3, 0.2])
    rows = [
        [TFN(w[i] / w[j], w[i] / w[j], w[i] / w[j]) for j in range(4)]
        for i in range(4)
    ]
    matrix = FuzzyComparisonMatrix(list("abcd"), rows)
    vec = derive_weights(matrix, method)
    for got, want in zip(vec.values, w):
        assert got == pytest.approx(want, abs=1e-9)


@pytest.mark.parametrize("method", list(DerivationMethod))
def test_permutation_equivariance(method):
    m = random_score_matrix(np.random.default_rng(21), 5)
    base = derive_weights(m, method)
    perm = [4, 2, 0, 3, 1]
    permuted = derive_weights(m.permuted(perm), method)
    for k, p in enumerate(perm):
        assert permuted.values[k] == pytest.approx(base.values[p], abs=1e-12)


@pytest.mark.parametrize("method", list(DerivationMethod))
def test_always_positive_and_normalized(method):
    rng = np.random.default_rng(31)
    for _ in range(25):
        n = int(rng.integers(2, 10))
        vec = derive_weights(random_score_matrix(rng, n), method)
        assert all(v > 0 for v in vec.values)
        assert sum(vec.values) == pytest.approx(1.0, abs=1e-9)


def test_power_scaling_keeps_gm_middle_ranking():
    # raising every entry to a positive power is the only entrywise scaling
    # that stays reciprocal with a unit diagonal; it must not change the order
    rng = np.random.default_rng(17)
    for t in (0.3, 0.7, 1.5, 2.0):
        m = random_score_matrix(rng, 6)
        scaled_rows = [
            [TFN(c.l**t, c.m**t, c.u**t) for c in row] for row in m.entries
        ]
        scaled = FuzzyComparisonMatrix(m.item_ids, scaled_rows)
        base_order = np.argsort(derive_gm_middle(m).values)
        scaled_order = np.argsort(derive_gm_middle(scaled).values)
        assert base_order.tolist() == scaled_order.tolist()


def test_weight_vector_validation():
    with pytest.raises(ValueError):
        WeightVector("n", "m", ("a", "b"), (0.6, 0.6))
    with pytest.raises(ValueError):
        WeightVector("n", "m", ("a", "b"), (1.2, -0.2))
    vec = WeightVector("n", "m", ("a", "b"), (0.25, 0.75))
    assert vec["b"] == 0.75
    assert vec.as_dict() == {"a": 0.25, "b": 0.75}


def test_symmetric_tfns_bring_buckley_near_gm_middle():
    pairs = {(0, 1): 3, (0, 2): 5, (1, 2): 2}
    m = matrix_from_pairs(list("abc"), pairs)
    gm = derive_gm_middle(m).values
    bk = derive_buckley(m).values
    for a, b in zip(gm, bk):
        assert a == pytest.approx(b, abs=0.02)
