"""Acceptance suite: nine end-to-end criteria, one PASS/FAIL line each.

Run with ``pytest -v tests/test_acceptance.py`` (lines appear in the summary)
or directly as
``python3 tests/test_acceptance.py``.
"""

import itertools
import math
import os
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cvxmatroid import (  # noqa: E402
    Instance,
    Uniform,
    brute_force_solve,
    build_generators,
    chamber_count_bound,
    enumerate_bases,
    enumerate_chambers,
    greedy_max_basis,
    solve,
    solve_balanced_clustering,
    solve_quadratic_assignment,
    variance_sum,
    vertex_coverage_check,
)
from cvxmatroid.applications import ReductionIdentityError  # noqa: E402
from cvxmatroid.solver import values_match  # noqa: E402
from helpers import (  # noqa: E402
    MATROID_KINDS,
    OBJECTIVE_KINDS,
    brute_max_weight,
    random_matroid,
    random_objective,
)

pytestmark = pytest.mark.acceptance


def report(k, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail}"
    if __name__ == "__main__":
        print(line, flush=True)
    else:
        from conftest import ACCEPTANCE_LINES

        ACCEPTANCE_LINES.append(line)
    return ok


def criterion_1():
    rng = np.random.default_rng(1001)
    t0 = time.perf_counter()
    count, bad = 0, []
    for trial in range(512):
        n = int(rng.integers(2, 9))
        d = 2 + trial % 2
        w = rng.uniform(-5, 5, (n, d))
        m = random_matroid(rng, n, MATROID_KINDS[trial % 4])
        obj = random_objective(rng, d, OBJECTIVE_KINDS[(trial // 4) % 4], w)
        inst = Instance(w)
        got, ref = solve(inst, m, obj).best.value, brute_force_solve(inst, m, obj).best.value
        count += 1
        if not values_match(got, ref, 1e-9):
            bad.append((trial, got, ref))
    dt = time.perf_counter() - t0
    ok = not bad and count >= 500 and dt < 120
    return report(1, ok, f"oracle equivalence on {count} instances, {len(bad)} mismatches, {dt:.1f}s")


def criterion_2():
    rng = np.random.default_rng(1002)
    t0 = time.perf_counter()
    notes, ok = [], True
    for n in (5, 10, 20, 40):
        g = build_generators(Instance(rng.uniform(-5, 5, (n, 2))))
        K = len(enumerate_chambers(g))
        ok &= K == 2 * g.m_prime <= 2 * math.comb(n, 2) <= n * n
        notes.append(f"d=2 n={n}: {K}=2*{g.m_prime}")
    for n in (4, 8, 12):
        g = build_generators(Instance(rng.uniform(-5, 5, (n, 3))))
        K = len(enumerate_chambers(g))
        bound = chamber_count_bound(g.m_prime, 3)
        ok &= K <= bound
        notes.append(f"d=3 n={n}: {K}<={bound}")
    dt = time.perf_counter() - t0
    ok &= dt < 30
    return report(2, ok, f"chamber counts ({'; '.join(notes)}), {dt:.1f}s")


def criterion_3():
    rng = np.random.default_rng(1003)
    t0 = time.perf_counter()
    fails = 0
    for trial in range(220):
        n = int(rng.integers(2, 9))
        inst = Instance(rng.uniform(-5, 5, (n, 2)))
        m = random_matroid(rng, n, MATROID_KINDS[trial % 4])
        if not vertex_coverage_check(inst, m):
            fails += 1
    dt = time.perf_counter() - t0
    ok = fails == 0 and dt < 60
    return report(3, ok, f"hull-vertex coverage on 220 instances, {fails} failures, {dt:.1f}s")


def criterion_4():
    rng = np.random.default_rng(1004)
    fails = 0
    for trial in range(600):
        n = int(rng.integers(1, 9))
        m = random_matroid(rng, n, MATROID_KINDS[trial % 4])
        # integer scores keep the comparison exact and produce ties
        b = rng.integers(-10, 11, n)
        B = greedy_max_basis(m, b)
        bases = enumerate_bases(m)
        if B not in bases or sum(int(b[j]) for j in B) != brute_max_weight(bases, b.tolist()):
            fails += 1
    return report(4, fails == 0, f"greedy optimality on 600 (matroid, b) pairs, {fails} failures")


def criterion_5():
    rng = np.random.default_rng(1005)
    checks = fails = 0
    for trial in range(220):
        n = int(rng.integers(2, 8))
        d = 2 + trial % 2
        if trial % 3 == 0:
            # repeated weight vectors give several max-b bases with one w(B)
            w = rng.integers(-2, 3, (n, d)).astype(float)
        else:
            w = rng.uniform(-5, 5, (n, d))
        inst = Instance(w)
        m = random_matroid(rng, n, MATROID_KINDS[trial % 4])
        bases = enumerate_bases(m)
        pts = np.array([w[list(B)].sum(axis=0) if B else np.zeros(d) for B in bases])
        for ch in enumerate_chambers(build_generators(inst)):
            vals = pts @ ch.witness
            top = vals >= vals.max() - 1e-9 * max(1.0, abs(vals.max()))
            checks += 1
            if np.max(np.abs(pts[top] - pts[top][0])) > 1e-9:
                fails += 1
    return report(5, fails == 0, f"unique max-b vertex on 220 instances ({checks} chambers), {fails} failures")


def _balanced_pairings(n):
    for rest in itertools.combinations(range(1, n), n // 2 - 1):
        C1 = (0,) + rest
        yield C1, tuple(j for j in range(n) if j not in C1)


def criterion_6():
    rng = np.random.default_rng(1006)
    fails = fired = 0
    for trial in range(110):
        n = 2 * int(rng.integers(1, 6))
        d = 1 + trial % 3
        P = rng.uniform(-5, 5, (n, d))
        try:
            _, v = solve_balanced_clustering(P)
        except ReductionIdentityError:
            fired += 1
            continue
        best = min(variance_sum(p, P) for p in _balanced_pairings(n))
        if abs(v - best) > 1e-9 * max(1.0, abs(best)):
            fails += 1
    ok = fails == 0 and fired == 0
    return report(6, ok, f"balanced clustering on 110 point sets, {fails} mismatches, identity fired {fired}x")


def criterion_7():
    rng = np.random.default_rng(1007)
    t0 = time.perf_counter()
    fails = 0
    for trial in range(110):
        d = 1 + trial % 3
        n = int(rng.integers(1, 13))
        W = rng.uniform(-3, 3, (d, n))
        X = np.array(list(itertools.product((0, 1), repeat=n)), dtype=float)
        brute = float(np.max(np.sum((X @ W.T) ** 2, axis=1)))
        _, value = solve_quadratic_assignment(W)
        if abs(value - brute) > 1e-9 * max(1.0, abs(brute)):
            fails += 1
    dt = time.perf_counter() - t0
    return report(7, fails == 0, f"quadratic assignment on 110 matrices vs 2^n search, {fails} mismatches, {dt:.1f}s")


def criterion_8():
    rng = np.random.default_rng(1008)
    ns = [20, 40, 80, 160]
    totals, times = [], []
    for n in ns:
        inst = Instance(rng.uniform(-5, 5, (n, 2)))
        t0 = time.perf_counter()
        sol = solve(inst, Uniform(n, n // 2), random_objective(rng, 2, "sqnorm"))
        times.append(time.perf_counter() - t0)
        totals.append(sol.operations + sol.oracle_queries)
    slope = float(np.polyfit(np.log(ns), np.log(totals), 1)[0])
    inst3 = Instance(rng.uniform(-5, 5, (30, 3)))
    t0 = time.perf_counter()
    solve(inst3, Uniform(30, 15), random_objective(rng, 3, "sqnorm"))
    t3 = time.perf_counter() - t0
    ok = slope <= 3.3 and times[-1] < 10 and t3 < 60
    return report(
        8, ok,
        f"log-log exponent {slope:.2f} (totals {totals}); n=160 d=2 {times[-1]:.1f}s; n=30 d=3 {t3:.1f}s",
    )


def criterion_9():
    rng = np.random.default_rng(1009)
    checks = fails = 0
    for trial in range(800):
        n = int(rng.integers(1, 9))
        m = random_matroid(rng, n, MATROID_KINDS[trial % 4])
        subsets = [[j for j in range(n) if rng.random() < 0.5] for _ in range(12)]
        indep = [J for J in subsets if m.is_independent(J)]
        checks += 1
        fails += not m.is_independent([])
        for J in indep:
            for k in range(len(J)):
                checks += 1
                fails += not m.is_independent(J[:k] + J[k + 1:])
        for A in indep:
            for B in indep:
                if len(A) < len(B):
                    checks += 1
                    fails += not any(m.is_independent(A + [b]) for b in B if b not in A)
    pairs = 0
    for kind in OBJECTIVE_KINDS:
        for _ in range(20):
            d = int(rng.integers(1, 5))
            obj = random_objective(rng, d, kind)
            for _ in range(60):
                x, y = rng.uniform(-10, 10, (2, d))
                fx, fy = obj(x), obj(y)
                pairs += 1
                fails += obj((x + y) / 2) > (fx + fy) / 2 + 1e-9 * (1 + abs(fx) + abs(fy))
    per_obj = pairs // len(OBJECTIVE_KINDS)
    ok = fails == 0 and checks >= 10_000 and per_obj >= 1000
    return report(9, ok, f"{checks} axiom checks, {per_obj} convexity pairs per objective, {fails} failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k):
    assert CRITERIA[k - 1]()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
