"""
Two reductions to convex matroid optimization over uniform matroids.

Quadratic assignment: maximize ||W x||^2 over x in {0,1}^n.  For each support
size r solve over U_n^r with weights the columns of W and c = ||.||^2.

Balanced clustering: split 2m points into two clusters of size m with least
total variance.  Since

    var(C1) + var(C2) = (1/m) sum_j ||w_j||^2 - (1/m^2) (||w(C1)||^2 + ||w(C2)||^2)

and w(C2) = w(N) - w(C1), this is maximizing ||x||^2 + ||w(N) - x||^2 at
x = w(C1) over the bases of U_n^m.
"""

import numpy as np

from .chambers import enumerate_chambers
from .errors import ConvexMatroidError
from .geometry import Instance, build_generators
from .matroid import Uniform
from .objective import Balanced, SqNorm
from .solver import solve

IDENTITY_TOL = 1e-9
TIE_RTOL = 1e-12


class ReductionIdentityError(ConvexMatroidError, RuntimeError):
    pass


def solve_quadratic_assignment(W, strategy="auto"):
    """Maximize ||W x||^2 over binary x.  Returns (x, value).

    Among supports of (numerically) equal value the lexicographically
    smallest sorted index tuple is returned.
    """
    W = np.array(W, dtype=float)
    if W.ndim != 2:
        raise ValueError("W must be a d x n matrix")
    d, n = W.shape
    inst = Instance(W.T, d=d)
    chambers = enumerate_chambers(build_generators(inst), strategy)
    best_support, best_value = None, None
    for r in range(n + 1):
        sol = solve(inst, Uniform(n, r), SqNorm(), chambers=chambers)
        support, value = sol.best.basis, sol.best.value
        if best_value is None:
            best_support, best_value = support, value
            continue
        scale = max(1.0, abs(value), abs(best_value))
        if value > best_value + TIE_RTOL * scale:
            best_support, best_value = support, value
        elif abs(value - best_value) <= TIE_RTOL * scale and support < best_support:
            best_support = support
    x = np.zeros(n, dtype=int)
    x[list(best_support)] = 1
    return x, float(best_value)


def _check_partition(partition, n):
    C1, C2 = (sorted(int(j) for j in C) for C in partition)
    if n % 2 or len(C1) != n // 2 or len(C2) != n // 2:
        raise ValueError(f"clusters must both have size n/2 = {n / 2}")
    if sorted(C1 + C2) != list(range(n)):
        raise ValueError("clusters must be disjoint and cover all points")
    return C1, C2


def variance_sum(partition, points):
    """Sum over both clusters of (1/m) sum ||w_j - mean||^2."""
    P = np.asarray(points, dtype=float)
    if P.ndim == 1:
        P = P[:, None]
    C1, C2 = _check_partition(partition, len(P))
    m = len(P) // 2
    total = 0.0
    for C in (C1, C2):
        Q = P[C]
        total += np.sum((Q - Q.mean(axis=0)) ** 2) / m
    return float(total)


def solve_balanced_clustering(points, strategy="auto"):
    """Balanced 2-clustering of an even number of points.

    Returns ((C1, C2), variance_sum) with C1, C2 sorted index tuples.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim == 1:
        P = P[:, None]
    n = len(P)
    if n < 2 or n % 2:
        raise ValueError(f"balanced clustering needs an even number >= 2 of points, got {n}")
    m = n // 2
    inst = Instance(P)
    total = P.sum(axis=0)
    sol = solve(inst, Uniform(n, m), Balanced(total), strategy=strategy)
    C1 = tuple(sol.best.basis)
    C2 = tuple(j for j in range(n) if j not in set(C1))
    direct = variance_sum((C1, C2), P)

    s1, s2 = P[list(C1)].sum(axis=0), P[list(C2)].sum(axis=0)
    via_sums = np.sum(P**2) / m - (s1 @ s1 + s2 @ s2) / m**2
    if abs(direct - via_sums) > IDENTITY_TOL * max(1.0, abs(direct), np.sum(P**2) / m):
        raise ReductionIdentityError(
            f"variance identity violated: direct {direct!r} vs cluster sums {via_sums!r}"
        )
    return (C1, C2), direct
