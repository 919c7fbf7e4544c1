"""
Convex matroid optimization: maximize c(w(B)) over bases B.

For every chamber of the pairwise-difference arrangement take its witness a,
scalarize b(j) = a . w(j), run the greedy scan to get the max-b basis B(a)
and keep the candidate with the largest c(w(B(a))).  Every vertex of
conv{w(B)} is hit by some B(a), so for convex c the best candidate is
optimal.  brute_force_solve and vertex_coverage_check are the exhaustive
checks used to verify that claim on small instances.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .chambers import enumerate_chambers
from .errors import DimensionError
from .geometry import build_generators, weight_sum
from .hull import convex_hull_2d
from .matroid import enumerate_bases, greedy_order, greedy_scan, rank

VALUE_RTOL = 1e-9
COVER_TOL = 1e-9
_CHUNK = 2048


@dataclass(frozen=True, eq=False)
class Candidate:
    witness: np.ndarray
    basis: tuple
    point: np.ndarray
    value: float


@dataclass(frozen=True, eq=False)
class Solution:
    """Best candidate plus work counters.

    `operations` counts arithmetic steps under a simple cost model (one per
    multiply-add, n*ceil(log2 n) per sort); `oracle_queries` counts actual
    independence and evaluation calls.
    """

    best: Candidate
    candidates_examined: int
    chambers: int
    operations: int
    oracle_queries: int


def values_match(a, b, rtol=VALUE_RTOL):
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def _log2ceil(k):
    return max(1, math.ceil(math.log2(k))) if k > 1 else 1


def _check_inputs(inst, m, obj):
    if m.ground_size() != inst.n:
        raise DimensionError(f"matroid has {m.ground_size()} elements, instance has {inst.n}")
    if obj.dim is not None and obj.dim != inst.d:
        raise DimensionError(f"objective has dimension {obj.dim}, instance has {inst.d}")


def _scan(W, witnesses, m, obj, target, dedup):
    """Greedy + evaluation for a block of witnesses.

    Returns (candidates, queries, ops).
    """
    n, d = W.shape
    B = witnesses @ W.T
    orders = np.argsort(-B, axis=1, kind="stable") if n else np.zeros((len(witnesses), 0), int)
    cache = {} if dedup else None
    out = []
    queries = 0
    ops = len(witnesses) * (n * d + n * _log2ceil(n))
    for a, order in zip(witnesses, orders.tolist()):
        basis, q = greedy_scan(m, order, target)
        queries += q
        point = W[list(basis)].sum(axis=0) if basis else np.zeros(d)
        ops += len(basis) * d
        if cache is not None:
            key = point.tobytes()
            value = cache.get(key)
            if value is None:
                value = cache[key] = obj.evaluate(point)
                queries += 1
        else:
            value = obj.evaluate(point)
            queries += 1
        out.append(Candidate(a, basis, point, value))
    return out, queries, ops


def scan_witnesses(inst, m, obj, witnesses, dedup=False):
    """All candidates B(a) for the given functionals, in order."""
    _check_inputs(inst, m, obj)
    witnesses = np.asarray(witnesses, dtype=float).reshape(-1, inst.d)
    out, _, _ = _scan(inst.weights, witnesses, m, obj, rank(m), dedup)
    return out


def solve(inst, m, obj, chambers=None, strategy="auto", threads=1, dedup=None):
    """Maximize obj(w(B)) over the bases of m.

    `chambers` may be passed in to reuse one enumeration across several
    matroids on the same weights.  Results do not depend on `threads`.
    """
    _check_inputs(inst, m, obj)
    n, d = inst.n, inst.d
    gens = build_generators(inst)
    ops = len(gens.pairs) * d
    if chambers is None:
        chambers = enumerate_chambers(gens, strategy)
    K = len(chambers)
    ops += gens.m_prime * d + K * _log2ceil(K) + K * d
    witnesses = np.array([c.witness for c in chambers], dtype=float).reshape(K, d)

    target = rank(m)
    queries = n
    if dedup is None:
        dedup = obj.expensive

    blocks = [witnesses[s:s + _CHUNK] for s in range(0, K, _CHUNK)]

    def work(block):
        cands, q, o = _scan(inst.weights, block, m, obj, target, dedup)
        best = None
        for c in cands:
            if best is None or c.value > best.value:
                best = c
        return best, q, o

    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, blocks))
    else:
        results = [work(b) for b in blocks]

    best = None
    for cand, q, o in results:
        queries += q
        ops += o
        if best is None or cand.value > best.value:
            best = cand
    return Solution(best, K, K, int(ops), int(queries))


def brute_force_solve(inst, m, obj, **limits):
    """Exact optimum by evaluating every basis; the lexicographically first
    maximizer wins ties."""
    _check_inputs(inst, m, obj)
    bases = enumerate_bases(m, **limits)
    best = None
    for B in bases:
        point = weight_sum(inst, B)
        value = obj.evaluate(point)
        if best is None or value > best.value:
            best = Candidate(None, B, point, value)
    queries = len(bases) + inst.n
    return Solution(best, len(bases), 0, len(bases) * (inst.n + inst.d), queries)


@dataclass(frozen=True, eq=False)
class CoverageReport:
    ok: bool
    hull_vertices: np.ndarray
    candidate_points: np.ndarray
    missing: list

    def __bool__(self):
        return self.ok


def vertex_coverage_check(inst, m, chambers=None, **limits):
    """Check every vertex of conv{w(B)} is some greedy candidate point (d = 2)."""
    if inst.d != 2:
        raise DimensionError("coverage check uses a planar hull and needs d = 2")
    if m.ground_size() != inst.n:
        raise DimensionError(f"matroid has {m.ground_size()} elements, instance has {inst.n}")
    pts = np.array([weight_sum(inst, B) for B in enumerate_bases(m, **limits)]).reshape(-1, 2)
    hull = convex_hull_2d(pts)

    if chambers is None:
        chambers = enumerate_chambers(build_generators(inst))
    witnesses = np.array([c.witness for c in chambers]).reshape(-1, 2)
    W = inst.weights
    target = rank(m)
    cand = []
    for order in np.argsort(-(witnesses @ W.T), axis=1, kind="stable").tolist():
        basis, _ = greedy_scan(m, order, target)
        cand.append(W[list(basis)].sum(axis=0) if basis else np.zeros(2))
    cand = np.array(cand).reshape(-1, 2)

    missing = [
        v for v in hull if not np.any(np.max(np.abs(cand - v), axis=1) <= COVER_TOL)
    ]
    return CoverageReport(not missing, hull, cand, missing)
