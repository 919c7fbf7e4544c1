"""
Vector primitives, problem instances and the generator set of the pairwise
difference zonotope

    P_w = sum_{i<j} [-1, 1] * (w(i) - w(j)).

Elements are 0-based internally.  Zero differences are dropped and parallel
differences are merged into one canonical hyperplane normal each.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NonGenericWitnessError

# absolute tolerance on dot-product signs
EPS = 1e-9
# unit directions closer than this (max-norm) are merged as parallel
PARALLEL_TOL = 1e-9
# coordinates this small relative to the vector's max are treated as zero
ZERO_COORD_TOL = 1e-12


def as_vector(x, d=None):
    v = np.asarray(x, dtype=float).reshape(-1)
    if d is not None and v.shape[0] != d:
        raise DimensionError(f"expected a vector of dimension {d}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


class Instance:
    """Ground set {0..n-1} with a weight vector w(j) in R^d per element."""

    def __init__(self, weights, d=None):
        w = np.asarray(weights, dtype=float)
        if w.size == 0:
            if d is None:
                d = w.shape[1] if w.ndim == 2 else 1
            w = np.zeros((0, d))
        elif w.ndim == 1:
            # a flat sequence is read as n scalar weights
            w = w.reshape(-1, 1)
        if w.ndim != 2:
            raise DimensionError("weights must be an n x d array")
        if d is not None and w.shape[1] != d:
            raise DimensionError(f"weights have dimension {w.shape[1]}, expected {d}")
        if w.shape[1] < 1:
            raise DimensionError("dimension must be at least 1")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        w = w.copy()
        w.flags.writeable = False
        self.weights = w

    @property
    def n(self):
        return self.weights.shape[0]

    @property
    def d(self):
        return self.weights.shape[1]

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.weights.shape == other.weights.shape and np.array_equal(
            self.weights, other.weights
        )

    def __repr__(self):
        return f"Instance(n={self.n}, d={self.d})"


def weight_sum(inst, J):
    """w(J) = sum of w(j) over j in J; the empty set gives the zero vector."""
    idx = np.fromiter(J, dtype=int)
    if idx.size and (idx.min() < 0 or idx.max() >= inst.n):
        raise IndexError(f"subset {sorted(J)} not contained in 0..{inst.n - 1}")
    if idx.size == 0:
        return np.zeros(inst.d)
    return inst.weights[idx].sum(axis=0)


def canonicalize(v):
    """Scale v so its first nonzero coordinate is exactly +1.

    Returns (normal, sigma, scale) with v ~= scale * sigma * normal, scale > 0.
    """
    v = np.asarray(v, dtype=float)
    big = np.max(np.abs(v)) if v.size else 0.0
    if big == 0.0:
        raise ValueError("cannot canonicalize the zero vector")
    v = np.where(np.abs(v) <= ZERO_COORD_TOL * big, 0.0, v)
    lead = v[np.flatnonzero(v)[0]]
    normal = v / lead
    normal[np.flatnonzero(v)[0]] = 1.0
    return normal, (1 if lead > 0 else -1), abs(lead)


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Nonzero pairwise differences and their deduplicated hyperplane normals.

    pairs[r] = (i, j) with i < j and vectors[r] = w(i) - w(j).
    direction_of[r] = (k, sigma): vectors[r] is a positive multiple of
    sigma * normals[k].
    """

    d: int
    pairs: tuple
    vectors: np.ndarray
    normals: np.ndarray
    normal_index: np.ndarray
    orientation: np.ndarray

    @property
    def raw(self):
        return [(i, j, self.vectors[r]) for r, (i, j) in enumerate(self.pairs)]

    @property
    def direction_of(self):
        return {
            r: (int(k), int(s))
            for r, (k, s) in enumerate(zip(self.normal_index, self.orientation))
        }

    @property
    def m_prime(self):
        return self.normals.shape[0]


def _canonicalize_rows(G):
    big = np.max(np.abs(G), axis=1, keepdims=True)
    G = np.where(np.abs(G) <= ZERO_COORD_TOL * big, 0.0, G)
    first = np.argmax(G != 0.0, axis=1)
    rows = np.arange(len(G))
    lead = G[rows, first]
    C = G / lead[:, None]
    C[rows, first] = 1.0
    return C, np.where(lead > 0, 1, -1).astype(np.int8)


def _parallel_classes(C):
    """Label rows of C by direction; labels number classes by first occurrence.

    Unit directions are sorted along a fixed oblique axis, so parallel rows
    can only sit within PARALLEL_TOL of each other in that order.
    """
    R, d = C.shape
    U = C / np.linalg.norm(C, axis=1, keepdims=True)
    axis = np.sqrt(np.arange(1, d + 1, dtype=float))
    key = U @ (axis / np.linalg.norm(axis))
    order = np.argsort(key, kind="stable")
    ks = key[order]
    lo = np.searchsorted(ks, ks - PARALLEL_TOL, side="left")

    parent = list(range(R))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pos in np.flatnonzero(lo < np.arange(R)):
        i = order[pos]
        for j in order[lo[pos]:pos]:
            if np.max(np.abs(U[i] - U[j])) <= PARALLEL_TOL:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    roots = np.array([find(r) for r in range(R)], dtype=np.intp)
    reps, labels = np.unique(roots, return_inverse=True)
    return reps, labels


def build_generators(inst):
    w = inst.weights
    n, d = w.shape
    ii, jj = np.triu_indices(n, k=1)
    diffs = w[ii] - w[jj]
    keep = np.any(diffs != 0.0, axis=1)
    ii, jj, diffs = ii[keep], jj[keep], diffs[keep]

    if len(diffs):
        C, orient = _canonicalize_rows(diffs)
        reps, index = _parallel_classes(C)
        # roots are the smallest member of each class, so reps are in input order
        normals = C[reps]
    else:
        orient = np.zeros(0, dtype=np.int8)
        index = np.zeros(0, dtype=np.intp)
        normals = np.zeros((0, d))
    normals.flags.writeable = False
    diffs.flags.writeable = False
    return GeneratorSet(
        d=d,
        pairs=tuple(zip(ii.tolist(), jj.tolist())),
        vectors=diffs,
        normals=normals,
        normal_index=index.astype(np.intp),
        orientation=orient,
    )


def zonotope_vertex(gens, witness):
    """Vertex of P_w maximizing the functional `witness`: sum of sign(a.g) g."""
    a = as_vector(witness, gens.d)
    if len(gens.vectors) == 0:
        return np.zeros(gens.d)
    dots = gens.vectors @ a
    bad = np.flatnonzero(np.abs(dots) <= EPS)
    if bad.size:
        i, j = gens.pairs[bad[0]]
        raise NonGenericWitnessError(
            f"witness is orthogonal (within {EPS}) to generator w({i}) - w({j})"
        )
    return np.sign(dots) @ gens.vectors
