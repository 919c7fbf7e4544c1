"""Convex functionals c : R^d -> R presented as evaluation oracles."""

import math

import numpy as np

from .errors import DimensionError
from .geometry import as_vector


class Objective:
    """Base class.  `dim` is None when any dimension is accepted.

    Convexity is trusted, not checked.  Set `expensive = True` to let the
    solver deduplicate candidate points before evaluating.
    """

    dim = None
    expensive = False

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        x = as_vector(x)
        if self.dim is not None and x.shape[0] != self.dim:
            raise DimensionError(f"objective expects dimension {self.dim}, got {x.shape[0]}")
        return float(self._value(x))

    def _value(self, x):
        raise NotImplementedError


class SqNorm(Objective):
    def _value(self, x):
        return x @ x

    def __eq__(self, other):
        return isinstance(other, SqNorm)

    def __repr__(self):
        return "SqNorm()"


class PNorm(Objective):
    def __init__(self, p):
        p = float(p)
        if not p >= 1:
            raise ValueError(f"p-norm needs p >= 1, got {p}")
        self.p = p

    def _value(self, x):
        return np.linalg.norm(x, ord=self.p)

    def __eq__(self, other):
        return isinstance(other, PNorm) and self.p == other.p

    def __repr__(self):
        return f"PNorm({'inf' if math.isinf(self.p) else self.p})"


class MaxLin(Objective):
    """x -> max over rows r of r . x (a convex piecewise-linear function)."""

    def __init__(self, rows):
        R = np.array(rows, dtype=float)
        if R.ndim != 2 or R.shape[0] < 1:
            raise ValueError("maxlin needs a nonempty k x d matrix")
        R.flags.writeable = False
        self.rows = R
        self.dim = R.shape[1]

    def _value(self, x):
        return np.max(self.rows @ x)

    def __eq__(self, other):
        return (
            isinstance(other, MaxLin)
            and self.rows.shape == other.rows.shape
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"MaxLin({self.rows.tolist()})"


class Balanced(Objective):
    """x -> ||x||^2 + ||total - x||^2, the two-cluster objective."""

    def __init__(self, total):
        t = as_vector(total).copy()
        t.flags.writeable = False
        self.total = t
        self.dim = t.shape[0]

    def _value(self, x):
        y = self.total - x
        return x @ x + y @ y

    def __eq__(self, other):
        return isinstance(other, Balanced) and np.array_equal(self.total, other.total)

    def __repr__(self):
        return f"Balanced({self.total.tolist()})"


def evaluate(obj, x):
    return obj.evaluate(x)
