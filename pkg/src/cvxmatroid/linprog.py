"""
Maximum-margin strict feasibility for open polyhedral cones.

Given signed normals (sigma_i, h_i), solve

    max t  s.t.  sigma_i * (a . h_i) >= t,   -1 <= a_k <= 1

with a dense tableau simplex.  Writing a = p - q with 0 <= p, q <= 1 and
restricting t >= 0 (a = 0, t = 0 is always feasible) makes the slack basis
feasible from the start, so no phase one is needed.
"""

from dataclasses import dataclass

import numpy as np

from .errors import LPConvergenceError
from .geometry import EPS

COST_TOL = 1e-12
# pivot entries below this (relative to the column's largest) are unsafe
PIVOT_TOL = 1e-9
MAX_PIVOTS = 5000


@dataclass(frozen=True)
class SignedConstraint:
    normal: np.ndarray
    sign: int


@dataclass(frozen=True, eq=False)
class MarginResult:
    margin: float
    witness: np.ndarray

    @property
    def feasible(self):
        return self.margin > EPS


def _simplex_max(A, b, c):
    """max c.x s.t. A x <= b, x >= 0 with b >= 0; Bland's rule.

    Returns x.  Raises LPConvergenceError if the pivot cap is hit or the
    problem turns out unbounded (the callers' problems never are).
    """
    rows, cols = A.shape
    T = np.zeros((rows + 1, cols + rows + 1))
    T[:rows, :cols] = A
    T[:rows, cols:cols + rows] = np.eye(rows)
    T[:rows, -1] = b
    T[-1, :cols] = -c
    basis = np.arange(cols, cols + rows)

    for _ in range(MAX_PIVOTS):
        cost = T[-1, :-1]
        entering = np.flatnonzero(cost < -COST_TOL)
        if entering.size == 0:
            break
        e = entering[0]
        col = T[:rows, e]
        pos = col > PIVOT_TOL * max(1.0, np.max(np.abs(col)))
        if not pos.any():
            raise LPConvergenceError("margin LP reported unbounded")
        ratios = np.full(rows, np.inf)
        ratios[pos] = T[:rows, -1][pos] / col[pos]
        best = ratios.min()
        ties = np.flatnonzero(ratios <= best + COST_TOL * max(1.0, abs(best)))
        leave = ties[np.argmin(basis[ties])]

        T[leave] /= T[leave, e]
        others = np.arange(rows + 1) != leave
        T[others] -= np.outer(T[others, e], T[leave])
        basis[leave] = e
    else:
        raise LPConvergenceError(f"margin LP did not converge in {MAX_PIVOTS} pivots")

    x = np.zeros(cols + rows)
    x[basis] = T[:rows, -1]
    return x[:cols]


def max_margin(constraints, d):
    """Maximum-margin witness for {a : sign_i (a . normal_i) > 0} in the unit box.

    `constraints` is a sequence of SignedConstraint or (sign, normal) pairs.
    margin <= EPS means infeasible or boundary-only.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    rows = []
    for con in constraints:
        if isinstance(con, SignedConstraint):
            sign, normal = con.sign, con.normal
        else:
            sign, normal = con
        h = np.asarray(normal, dtype=float).reshape(-1)
        if h.shape[0] != d:
            raise ValueError(f"constraint normal has dimension {h.shape[0]}, expected {d}")
        rows.append(sign * h)
    if not rows:
        a = np.zeros(d)
        a[0] = 1.0
        return MarginResult(1.0, a)
    H = np.array(rows)
    m = H.shape[0]

    # variables [p (d), q (d), t]
    A = np.zeros((m + 2 * d, 2 * d + 1))
    A[:m, :d] = -H
    A[:m, d:2 * d] = H
    A[:m, -1] = 1.0
    A[m:m + d, :d] = np.eye(d)
    A[m + d:, d:2 * d] = np.eye(d)
    b = np.zeros(m + 2 * d)
    b[m:] = 1.0
    c = np.zeros(2 * d + 1)
    c[-1] = 1.0

    x = _simplex_max(A, b, c)
    a = np.clip(x[:d] - x[d:2 * d], -1.0, 1.0)
    achieved = float(np.min(H @ a))
    return MarginResult(min(float(x[-1]), achieved), a)
