import itertools

import numpy as np
import pytest

from cvxmatroid import solve_balanced_clustering, solve_quadratic_assignment, variance_sum


def brute_qa(W):
    W = np.asarray(W, float)
    n = W.shape[1]
    return max(
        float(np.sum((W @ np.array(x)) ** 2)) for x in itertools.product((0, 1), repeat=n)
    )


def balanced_partitions(n):
    # fix element 0 in C1 so each unordered pairing appears once
    for rest in itertools.combinations(range(1, n), n // 2 - 1):
        C1 = (0,) + rest
        yield C1, tuple(j for j in range(n) if j not in C1)


def test_qa_identity():
    x, value = solve_quadratic_assignment(np.eye(2))
    assert x.tolist() == [1, 1]
    assert value == 2


def test_qa_three_columns():
    W = np.array([[1, 1, -1], [0, 0, 1]])
    assert brute_qa(W) == 4
    x, value = solve_quadratic_assignment(W)
    assert x.tolist() == [1, 1, 0]
    assert value == 4


def test_qa_zero_matrix():
    x, value = solve_quadratic_assignment(np.zeros((2, 3)))
    assert x.tolist() == [0, 0, 0]
    assert value == 0


def test_qa_rejects_vector():
    with pytest.raises(ValueError):
        solve_quadratic_assignment([1.0, 2.0])


def test_qa_matches_brute_force():
    rng = np.random.default_rng(21)
    for _ in range(25):
        d, n = int(rng.integers(1, 4)), int(rng.integers(1, 9))
        W = rng.uniform(-3, 3, (d, n))
        x, value = solve_quadratic_assignment(W)
        assert value == pytest.approx(brute_qa(W), rel=1e-9)
        assert value == pytest.approx(np.sum((W @ x) ** 2), rel=1e-12)


def test_qa_zero_column_changes_nothing():
    rng = np.random.default_rng(22)
    for _ in range(10):
        W = rng.uniform(-3, 3, (2, int(rng.integers(1, 6))))
        _, v = solve_quadratic_assignment(W)
        _, v0 = solve_quadratic_assignment(np.c_[W, np.zeros(2)])
        assert v0 == pytest.approx(v, rel=1e-12)


@pytest.mark.parametrize(
    "partition, expected", [(((0, 2), (1, 3)), 2.0), (((0, 1), (2, 3)), 0.5), (((1, 2), (0, 3)), 2.5)]
)
def test_variance_sum_examples(partition, expected):
    pts = [0, 1, 2, 3]
    assert variance_sum(partition, pts) == pytest.approx(expected)
    assert variance_sum(partition[::-1], pts) == pytest.approx(expected)


@pytest.mark.parametrize(
    "partition", [((0,), (1, 2, 3)), ((0, 1), (1, 2)), ((0, 1), (2, 4))]
)
def test_variance_sum_rejects_malformed(partition):
    with pytest.raises(ValueError):
        variance_sum(partition, [0, 1, 2, 3])


def test_clustering_examples():
    (C1, C2), v = solve_balanced_clustering([0, 0, 10, 10])
    assert v == 0
    assert {C1, C2} == {(0, 1), (2, 3)}
    (C1, C2), v = solve_balanced_clustering([0, 1, 2, 3])
    assert v == pytest.approx(0.5)
    assert {C1, C2} == {(0, 1), (2, 3)}
    _, v = solve_balanced_clustering(np.ones((6, 2)))
    assert v == 0


def test_clustering_refuses_odd():
    with pytest.raises(ValueError):
        solve_balanced_clustering([0, 1, 2])


def test_clustering_is_exhaustive_minimum():
    rng = np.random.default_rng(23)
    for _ in range(20):
        n = 2 * int(rng.integers(1, 6))
        d = int(rng.integers(1, 4))
        P = rng.uniform(-5, 5, (n, d))
        _, v = solve_balanced_clustering(P)
        best = min(variance_sum(p, P) for p in balanced_partitions(n))
        assert v == pytest.approx(best, rel=1e-9, abs=1e-9)
