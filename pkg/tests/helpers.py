"""Random instance generators shared by the test modules."""

import numpy as np

from cvxmatroid import Balanced, Graphic, Linear, MaxLin, PNorm, Partition, SqNorm, Uniform

MATROID_KINDS = ("uniform", "graphic", "partition", "linear")
OBJECTIVE_KINDS = ("sqnorm", "pnorm", "maxlin", "balanced")


def random_matroid(rng, n, kind):
    if kind == "uniform":
        return Uniform(n, int(rng.integers(0, n + 1)))
    if kind == "graphic":
        V = int(rng.integers(2, 6))
        edges = [tuple(int(v) for v in rng.integers(0, V, size=2)) for _ in range(n)]
        return Graphic(V, edges)
    if kind == "partition":
        k = int(rng.integers(1, 4))
        blocks = rng.integers(0, k, size=n).tolist()
        caps = [int(rng.integers(0, blocks.count(b) + 1)) for b in range(k)]
        return Partition(blocks, caps)
    if kind == "linear":
        rows = int(rng.integers(1, 5))
        # small integers so that genuine dependencies occur
        return Linear(rng.integers(-1, 3, size=(rows, n)))
    raise ValueError(kind)


def random_objective(rng, d, kind, weights=None):
    if kind == "sqnorm":
        return SqNorm()
    if kind == "pnorm":
        return PNorm([1, 1.5, 2, 3, np.inf][int(rng.integers(0, 5))])
    if kind == "maxlin":
        return MaxLin(rng.uniform(-2, 2, size=(int(rng.integers(1, 4)), d)))
    if kind == "balanced":
        total = weights.sum(axis=0) if weights is not None else rng.uniform(-5, 5, d)
        return Balanced(total)
    raise ValueError(kind)


def brute_max_weight(bases, b):
    return max(sum(b[j] for j in B) for B in bases)
