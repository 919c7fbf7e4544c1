"""
Chambers of the central arrangement {a : a . h = 0} over the canonical
normals of a generator set.  Chambers are in bijection with the vertices of
the zonotope P_w; each comes with a strictly interior witness functional a,
which is exactly what the greedy step needs.

Three strategies:

* enumerate_chambers_2d    - exact angular sweep, d = 2 only.
* enumerate_chambers_nd    - incremental insertion with one margin LP per
                             (chamber, new hyperplane); any d, slow.
* enumerate_chambers_rays  - localizes around every 1-dimensional flat of the
                             arrangement; any d, vectorized, used for d >= 3.
"""

import itertools
import warnings
from math import comb

import numpy as np

from .errors import DegenerateArrangementError, DimensionError
from .geometry import EPS
from .linprog import max_margin

# relative tolerance deciding whether a hyperplane contains a flat
INCIDENCE_TOL = 1e-9
RANK_TOL = 1e-9
_CHUNK = 4096


class Chamber:
    """Open cell of the arrangement with an interior witness (||a||_inf <= 1).

    Signs over the normals are computed lazily from the witness unless given;
    for large 2-D arrangements the full sign table would be quadratic in size.
    """

    __slots__ = ("witness", "_normals", "_signs")

    def __init__(self, witness, normals, signs=None):
        self.witness = np.asarray(witness, dtype=float)
        self._normals = normals
        self._signs = None if signs is None else tuple(int(s) for s in signs)

    @property
    def signs(self):
        if self._signs is None:
            if len(self._normals) == 0:
                self._signs = ()
            else:
                self._signs = tuple(np.where(self._normals @ self.witness > 0, 1, -1).tolist())
        return self._signs

    def margin(self):
        """Smallest |a . h| over the normals (inf with no normals)."""
        if len(self._normals) == 0:
            return np.inf
        return float(np.min(np.abs(self._normals @ self.witness)))

    def __repr__(self):
        return f"Chamber(witness={self.witness.tolist()})"


def chamber_count_bound(m_prime, d):
    """Most chambers a central arrangement of m_prime hyperplanes in R^d can have."""
    if m_prime < 0 or d < 1:
        raise ValueError("need m_prime >= 0 and d >= 1")
    if m_prime == 0:
        return 1
    return 2 * sum(comb(m_prime - 1, k) for k in range(d))


def _unit_first(d):
    a = np.zeros(d)
    a[0] = 1.0
    return a


def _to_box(A):
    return A / np.max(np.abs(A), axis=1, keepdims=True)


def _sweep_witnesses(H):
    # boundary line of normal (h1, h2) points along (-h2, h1)
    theta = np.mod(np.arctan2(H[:, 0], -H[:, 1]), np.pi)
    rays = np.sort(np.concatenate([theta, theta + np.pi]))
    nxt = np.roll(rays, -1)
    nxt[-1] += 2 * np.pi
    if np.any(nxt - rays <= 0.0):
        raise DegenerateArrangementError("parallel normals reached the angular sweep")
    mid = 0.5 * (rays + nxt)
    return _to_box(np.column_stack([np.cos(mid), np.sin(mid)]))


def enumerate_chambers_2d(gens):
    """All 2k angular sectors cut out by k distinct lines through the origin."""
    if gens.d != 2:
        raise DimensionError(f"angular sweep needs d = 2, got d = {gens.d}")
    H = gens.normals
    if len(H) == 0:
        raise ValueError("no normals: the whole plane is a single chamber")
    return [Chamber(a, H) for a in _sweep_witnesses(H)]


def enumerate_chambers_nd(gens):
    """Insert normals one at a time, splitting chambers where an LP finds room."""
    d = gens.d
    H = gens.normals
    cells = [(_unit_first(d), [])]
    for k, h in enumerate(H):
        nxt = []
        for witness, signs in cells:
            constraints = [(s, H[i]) for i, s in enumerate(signs)]
            dot = float(witness @ h)
            if abs(dot) > EPS:
                side = 1 if dot > 0 else -1
                nxt.append((witness, signs + [side]))
                res = max_margin(constraints + [(-side, h)], d)
                if res.feasible:
                    nxt.append((res.witness, signs + [-side]))
                continue
            found = False
            for side in (1, -1):
                res = max_margin(constraints + [(side, h)], d)
                if res.feasible:
                    nxt.append((res.witness, signs + [side]))
                    found = True
            if not found:
                raise DegenerateArrangementError(
                    f"chamber lost while inserting normal {k}: no side has margin > {EPS}"
                )
        cells = nxt
    return [Chamber(a, H, signs) for a, signs in cells]


def _span_basis(H):
    _, S, Vt = np.linalg.svd(H, full_matrices=False)
    r = int(np.sum(S > RANK_TOL * S[0]))
    return Vt[:r]


def _unique_rows(P):
    """Index of the first occurrence of each distinct row of a uint8 array."""
    P = np.ascontiguousarray(P)
    if len(P) == 0:
        return np.zeros(0, dtype=np.intp)
    keys = P.view(np.dtype((np.void, P.shape[1]))).ravel()
    _, first = np.unique(keys, return_index=True)
    return first


def _orth_complement(r):
    # rows form an orthonormal basis of the hyperplane r^perp
    _, _, Vt = np.linalg.svd(r[None, :])
    return Vt[1:]


def _flats(H):
    """Directions of the 1-dimensional flats of an essential arrangement in R^d.

    Returns (directions, incidence) with one row per distinct flat.
    """
    m, d = H.shape
    if d == 3:
        ii, jj = np.triu_indices(m, k=1)
        R = np.cross(H[ii], H[jj])
    else:
        combos = np.array(list(itertools.combinations(range(m), d - 1)), dtype=np.intp)
        _, S, Vt = np.linalg.svd(H[combos], full_matrices=True)
        ok = S[:, -1] > RANK_TOL * S[:, 0]
        R = Vt[ok, -1, :]
    norms = np.linalg.norm(R, axis=1)
    R = R[norms > 0] / norms[norms > 0, None]
    hnorm = np.linalg.norm(H, axis=1)

    keys = []
    for s in range(0, len(R), _CHUNK):
        inc = np.abs(R[s:s + _CHUNK] @ H.T) <= INCIDENCE_TOL * hnorm
        keys.append(np.packbits(inc, axis=1))
    keys = np.concatenate(keys) if keys else np.zeros((0, (m + 7) // 8), np.uint8)
    first = np.sort(_unique_rows(keys))
    incidence = np.unpackbits(keys[first], axis=1, count=m).astype(bool)
    return R[first], incidence


def _lift_around(H, r, incident, U):
    """Witnesses near +-r: a = +-r + t u for each local direction u in U."""
    far = ~incident
    base = H[far] @ r
    Ud = U @ H[far].T
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.abs(base)[None, :] / np.abs(Ud)
    ratio[np.isnan(ratio)] = np.inf
    t = np.minimum(1.0, 0.5 * ratio.min(axis=1, initial=np.inf))
    step = t[:, None] * U
    return np.concatenate([r[None, :] + step, -r[None, :] + step])


def _ray_witnesses(H):
    """Candidate interior witnesses, covering every chamber at least once."""
    m, d = H.shape
    if m == 0:
        return _unit_first(d)[None, :]
    V = _span_basis(H)
    if V.shape[0] < d:
        # non-essential: chambers are prisms over those of the span
        return _ray_witnesses(H @ V.T) @ V
    if d == 1:
        return np.array([[1.0], [-1.0]])
    if d == 2:
        return _sweep_witnesses(H)

    R, incidence = _flats(H)
    counts = incidence.sum(axis=1)
    out = []

    simple = np.flatnonzero(counts == d - 1)
    if simple.size:
        # d-1 independent walls: local chambers are orthants, u solves
        # [H_I; r] u = [s; 0] for each sign pattern s
        patterns = np.array(list(itertools.product((1.0, -1.0), repeat=d - 1)))
        rhs = np.zeros((d, len(patterns)))
        rhs[:-1] = patterns.T
        for s in range(0, simple.size, _CHUNK):
            block = simple[s:s + _CHUNK]
            inc = incidence[block]
            walls = np.nonzero(inc)[1].reshape(len(block), d - 1)
            r = R[block]
            M = np.concatenate([H[walls], r[:, None, :]], axis=1)
            U = np.linalg.solve(M, np.broadcast_to(rhs, (len(block), d, len(patterns))))
            U = np.swapaxes(U, 1, 2)
            U /= np.max(np.abs(U), axis=2, keepdims=True)
            # step length keeps every non-incident sign equal to its sign at r
            base = np.abs(r @ H.T)
            Ud = np.abs(np.einsum("kld,md->klm", U, H))
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = base[:, None, :] / Ud
            ratio[np.isnan(ratio) | np.broadcast_to(inc[:, None, :], ratio.shape)] = np.inf
            t = np.minimum(1.0, 0.5 * ratio.min(axis=2))
            step = t[:, :, None] * U
            out.append(np.concatenate([r[:, None, :] + step, -r[:, None, :] + step], axis=1).reshape(-1, d))

    for k in np.flatnonzero(counts > d - 1):
        P = _orth_complement(R[k])
        local = _ray_witnesses(H[incidence[k]] @ P.T) @ P
        out.append(_lift_around(H, R[k], incidence[k], _to_box(local)))
    return np.concatenate(out)


def enumerate_chambers_rays(gens):
    """Enumerate chambers by walking around every ray of the arrangement.

    Each chamber of an essential central arrangement is a pointed cone, so it
    touches at least one 1-dimensional flat; the chambers incident to a flat
    are read off the lower-dimensional arrangement of the walls containing
    it.  Candidates are deduplicated by sign vector, keeping the one with
    the largest margin.
    """
    d = gens.d
    H = np.asarray(gens.normals)
    if len(H) == 0:
        return [Chamber(_unit_first(d), H, ())]
    A = _ray_witnesses(H)

    packed, margins = [], []
    for s in range(0, len(A), _CHUNK):
        block = A[s:s + _CHUNK]
        G = block @ H.T
        packed.append(np.packbits(G > 0, axis=1))
        margins.append(np.min(np.abs(G), axis=1) / np.max(np.abs(block), axis=1))
    packed = np.concatenate(packed)
    margins = np.concatenate(margins)
    order = np.argsort(-margins, kind="stable")
    pick = order[_unique_rows(packed[order])]

    chambers = []
    for idx in pick:
        a = A[idx] / np.max(np.abs(A[idx]))
        if margins[idx] <= EPS:
            signs = np.where(H @ a > 0, 1, -1)
            res = max_margin(list(zip(signs.tolist(), H)), d)
            if not res.feasible:
                warnings.warn(
                    f"dropping a sliver chamber with margin {res.margin:.3g} <= {EPS}",
                    RuntimeWarning,
                )
                continue
            a = res.witness
        chambers.append(Chamber(a, H))
    return chambers


def enumerate_chambers(gens, strategy="auto"):
    """Dispatch: sweep for d = 2, flat localization otherwise."""
    d = gens.d
    if len(gens.normals) == 0:
        return [Chamber(_unit_first(d), gens.normals, ())]
    if strategy == "auto":
        strategy = "sweep" if d == 2 else "rays"
    if strategy == "sweep":
        return enumerate_chambers_2d(gens)
    if strategy == "incremental":
        return enumerate_chambers_nd(gens)
    if strategy == "rays":
        return enumerate_chambers_rays(gens)
    raise ValueError(f"unknown chamber strategy {strategy!r}")
