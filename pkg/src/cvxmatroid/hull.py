"""Planar convex hull (Andrew's monotone chain) with tolerant orientation tests."""

import numpy as np


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _merge_close(points, tol):
    kept = []
    for p in points:
        if not any(abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol for q in kept):
            kept.append(p)
    return kept


def convex_hull_2d(points, merge_tol=1e-10, turn_tol=1e-12):
    """Hull vertices in counter-clockwise order, collinear points removed.

    Points closer than merge_tol (per coordinate) are merged first so that
    sums computed in different orders do not show up as separate vertices.
    A turn counts as strict only if |cross| exceeds turn_tol relative to the
    two edge lengths.
    """
    pts = [tuple(map(float, p)) for p in np.asarray(points, dtype=float).reshape(-1, 2)]
    pts = sorted(_merge_close(sorted(pts), merge_tol))
    if len(pts) <= 2:
        return np.array(pts).reshape(-1, 2)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                o, a = out[-2], out[-1]
                scale = np.hypot(a[0] - o[0], a[1] - o[1]) * np.hypot(p[0] - o[0], p[1] - o[1])
                if _cross(o, a, p) <= turn_tol * scale:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return np.array(hull).reshape(-1, 2)
