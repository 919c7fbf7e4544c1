"""
Matroids presented by independence oracles.

Elements are 0..n-1.  Each concrete matroid validates subsets in
`is_independent` and exposes an unchecked `_independent` used by the greedy
scan, which only ever builds subsets of valid indices.
"""

import itertools
from math import comb

import numpy as np

from .errors import EnumerationLimitError

PIVOT_TOL = 1e-9
DEFAULT_MAX_N = 20
DEFAULT_MAX_BASES = 10**6


class Matroid:
    n = 0

    def ground_size(self):
        return self.n

    def is_independent(self, J):
        J = list(J)
        for j in J:
            if not 0 <= j < self.n:
                raise IndexError(f"element {j} outside ground set 0..{self.n - 1}")
        if len(set(J)) != len(J):
            raise ValueError("subset has repeated elements")
        return self._independent(J)

    def _independent(self, J):
        raise NotImplementedError


class Uniform(Matroid):
    """U_n^r: every subset of size at most r is independent."""

    def __init__(self, n, r):
        if not 0 <= r <= n:
            raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        self.n, self.r = n, r

    def _independent(self, J):
        return len(J) <= self.r

    def __eq__(self, other):
        return isinstance(other, Uniform) and (self.n, self.r) == (other.n, other.r)

    def __repr__(self):
        return f"Uniform({self.n}, {self.r})"


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge the classes of x and y; False if they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


class Graphic(Matroid):
    """Cycle matroid of a multigraph: element j is edge edges[j]."""

    def __init__(self, num_vertices, edges):
        edges = tuple((int(u), int(v)) for u, v in edges)
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u}, {v}) references a vertex outside 0..{num_vertices - 1}")
        self.num_vertices = num_vertices
        self.edges = edges
        self.n = len(edges)

    def _independent(self, J):
        uf = UnionFind(self.num_vertices)
        for j in J:
            if not uf.union(*self.edges[j]):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Graphic) and (self.num_vertices, self.edges) == (
            other.num_vertices,
            other.edges,
        )

    def __repr__(self):
        return f"Graphic({self.num_vertices}, {list(self.edges)})"


class Partition(Matroid):
    """At most capacities[k] elements may be taken from block k."""

    def __init__(self, blocks, capacities):
        blocks = tuple(int(b) for b in blocks)
        capacities = tuple(int(c) for c in capacities)
        if any(c < 0 for c in capacities):
            raise ValueError("partition capacities must be nonnegative")
        if any(not 0 <= b < len(capacities) for b in blocks):
            raise ValueError("block id without a capacity")
        self.blocks, self.capacities = blocks, capacities
        self.n = len(blocks)

    def _independent(self, J):
        used = [0] * len(self.capacities)
        for j in J:
            b = self.blocks[j]
            used[b] += 1
            if used[b] > self.capacities[b]:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Partition) and (self.blocks, self.capacities) == (
            other.blocks,
            other.capacities,
        )

    def __repr__(self):
        return f"Partition({list(self.blocks)}, {list(self.capacities)})"


class Linear(Matroid):
    """Column matroid of a real matrix."""

    def __init__(self, matrix):
        A = np.array(matrix, dtype=float)
        if A.ndim != 2:
            raise ValueError("linear matroid needs a 2-D matrix")
        if not np.all(np.isfinite(A)):
            raise ValueError("linear matroid matrix must be finite")
        A.flags.writeable = False
        self.matrix = A
        self.n = A.shape[1]

    def _independent(self, J):
        if len(J) > self.matrix.shape[0]:
            return False
        return column_rank(self.matrix[:, list(J)]) == len(J)

    def __eq__(self, other):
        return (
            isinstance(other, Linear)
            and self.matrix.shape == other.matrix.shape
            and np.array_equal(self.matrix, other.matrix)
        )

    def __repr__(self):
        return f"Linear({self.matrix.tolist()})"


def column_rank(A, tol=PIVOT_TOL):
    """Rank by Gaussian elimination with partial pivoting."""
    A = np.array(A, dtype=float)
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        p = rank + int(np.argmax(np.abs(A[rank:, c])))
        if abs(A[p, c]) <= tol:
            continue
        A[[rank, p]] = A[[p, rank]]
        A[rank + 1:] -= np.outer(A[rank + 1:, c] / A[rank, c], A[rank])
        rank += 1
    return rank


def rank(m):
    """Size of a maximal independent set found by one greedy pass over 0..n-1."""
    B = []
    for j in range(m.ground_size()):
        if m._independent(B + [j]):
            B.append(j)
    return len(B)


def greedy_scan(m, order, target=None):
    """Add elements in `order` while independence is kept.

    Stops early once `target` elements are taken (pass the rank).  Returns the
    sorted basis and the number of oracle queries made.
    """
    B = []
    queries = 0
    if target == 0:
        return (), 0
    for j in order:
        queries += 1
        B.append(j)
        if m._independent(B):
            if len(B) == target:
                break
        else:
            B.pop()
    return tuple(sorted(B)), queries


def greedy_order(b):
    # decreasing b, ties by increasing index
    return np.argsort(-np.asarray(b, dtype=float), kind="stable")


def greedy_max_basis(m, b):
    """Maximum b-weight basis, lexicographically first under the tie-broken order."""
    b = np.asarray(b, dtype=float)
    if b.shape != (m.ground_size(),):
        raise ValueError(f"need {m.ground_size()} scalar weights, got shape {b.shape}")
    basis, _ = greedy_scan(m, greedy_order(b).tolist())
    return basis


def enumerate_bases(m, max_n=DEFAULT_MAX_N, max_bases=DEFAULT_MAX_BASES):
    """All bases in lexicographic order; refuses oversized ground sets."""
    n = m.ground_size()
    if n > max_n:
        raise EnumerationLimitError(f"ground set of size {n} exceeds the enumeration limit {max_n}")
    r = rank(m)
    if comb(n, r) > max_bases:
        raise EnumerationLimitError(
            f"C({n}, {r}) = {comb(n, r)} candidate subsets exceeds the cap {max_bases}"
        )
    return [J for J in itertools.combinations(range(n), r) if m._independent(list(J))]
