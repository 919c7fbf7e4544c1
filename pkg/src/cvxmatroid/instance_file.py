"""
Line-oriented instance files.

    dim <d>
    n <n>
    <n lines of d numbers: w(1) .. w(n)>
    matroid uniform <r>
          | graphic <V>   + n lines "u v" (0-based vertices)
          | partition     + n lines with one block id each (0-based) + one line of capacities
          | linear <d'>   + d' rows of n numbers
    objective sqnorm | pnorm <p|inf> | balanced | maxlin <k> + k rows of d numbers

'#' starts a comment; blank lines are ignored.  Element indices in files
and CLI output are 1-based; the library itself is 0-based.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InstanceParseError
from .geometry import Instance
from .matroid import Graphic, Linear, Matroid, Partition, Uniform
from .objective import Balanced, MaxLin, Objective, PNorm, SqNorm


@dataclass(eq=True)
class InstanceFile:
    instance: Instance
    matroid: Matroid
    objective: Objective


class _Lines:
    def __init__(self, text):
        self.items = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            tokens = line.split("#", 1)[0].split()
            if tokens:
                self.items.append((lineno, tokens))
        self.pos = 0

    @property
    def lineno(self):
        if self.pos < len(self.items):
            return self.items[self.pos][0]
        return self.items[-1][0] if self.items else 1

    def next(self, what):
        if self.pos >= len(self.items):
            raise InstanceParseError(f"unexpected end of file, expected {what}", self.lineno)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self):
        return self.pos >= len(self.items)


def _number(tok, lineno):
    try:
        x = float(tok)
    except ValueError:
        raise InstanceParseError(f"expected a number, got {tok!r}", lineno) from None
    if not math.isfinite(x):
        raise InstanceParseError(f"non-finite number {tok!r}", lineno)
    return x


def _integer(tok, lineno, what):
    try:
        return int(tok)
    except ValueError:
        raise InstanceParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def _keyword(lines, key, nargs, what):
    lineno, toks = lines.next(what)
    if toks[0] != key:
        raise InstanceParseError(f"expected '{key}', got {toks[0]!r}", lineno)
    if len(toks) != 1 + nargs:
        raise InstanceParseError(f"'{key}' takes {nargs} argument(s), got {len(toks) - 1}", lineno)
    return lineno, toks[1:]


def _rows(lines, count, width, what):
    out = []
    for _ in range(count):
        lineno, toks = lines.next(what)
        if len(toks) != width:
            raise InstanceParseError(f"{what}: expected {width} numbers, got {len(toks)}", lineno)
        out.append([_number(t, lineno) for t in toks])
    return np.array(out, dtype=float).reshape(count, width)


def _parse_matroid(lines, n):
    lineno, toks = lines.next("a matroid line")
    if toks[0] != "matroid" or len(toks) < 2:
        raise InstanceParseError(f"expected 'matroid <kind> ...', got {' '.join(toks)!r}", lineno)
    kind, args = toks[1], toks[2:]

    def arity(k):
        if len(args) != k:
            raise InstanceParseError(f"'matroid {kind}' takes {k} argument(s), got {len(args)}", lineno)

    if kind == "uniform":
        arity(1)
        r = _integer(args[0], lineno, "uniform rank")
        if not 0 <= r <= n:
            raise InstanceParseError(f"uniform rank must satisfy 0 <= r <= n = {n}, got r = {r}", lineno)
        return Uniform(n, r)
    if kind == "graphic":
        arity(1)
        V = _integer(args[0], lineno, "vertex count")
        if V < 1:
            raise InstanceParseError("graphic matroid needs at least one vertex", lineno)
        edges = []
        for _ in range(n):
            ln, et = lines.next("an edge 'u v'")
            if len(et) != 2:
                raise InstanceParseError(f"edge line needs 2 vertices, got {len(et)}", ln)
            u, v = (_integer(t, ln, "vertex") for t in et)
            if not (0 <= u < V and 0 <= v < V):
                raise InstanceParseError(f"edge ({u}, {v}) has a vertex outside 0..{V - 1}", ln)
            edges.append((u, v))
        return Graphic(V, edges)
    if kind == "partition":
        arity(0)
        blocks = []
        for _ in range(n):
            ln, bt = lines.next("a block id")
            if len(bt) != 1:
                raise InstanceParseError(f"block line needs 1 id, got {len(bt)}", ln)
            b = _integer(bt[0], ln, "block id")
            if b < 0:
                raise InstanceParseError("block ids must be nonnegative", ln)
            blocks.append(b)
        ln, ct = lines.next("a line of capacities")
        caps = [_integer(t, ln, "capacity") for t in ct]
        if any(c < 0 for c in caps):
            raise InstanceParseError("capacities must be nonnegative", ln)
        if blocks and max(blocks) >= len(caps):
            raise InstanceParseError(
                f"block id {max(blocks)} has no capacity ({len(caps)} given)", ln
            )
        return Partition(blocks, caps)
    if kind == "linear":
        arity(1)
        rows = _integer(args[0], lineno, "row count")
        if rows < 0:
            raise InstanceParseError("row count must be nonnegative", lineno)
        return Linear(_rows(lines, rows, n, "linear matroid row"))
    raise InstanceParseError(f"unknown matroid kind {kind!r}", lineno)


def _parse_objective(lines, weights):
    lineno, toks = lines.next("an objective line")
    if toks[0] != "objective" or len(toks) < 2:
        raise InstanceParseError(f"expected 'objective <kind> ...', got {' '.join(toks)!r}", lineno)
    kind, args = toks[1], toks[2:]
    d = weights.shape[1]
    nargs = {"sqnorm": 0, "balanced": 0, "pnorm": 1, "maxlin": 1}
    if kind not in nargs:
        raise InstanceParseError(f"unknown objective {kind!r}", lineno)
    if len(args) != nargs[kind]:
        raise InstanceParseError(f"'objective {kind}' takes {nargs[kind]} argument(s)", lineno)
    if kind == "sqnorm":
        return SqNorm()
    if kind == "balanced":
        return Balanced(weights.sum(axis=0))
    if kind == "pnorm":
        p = math.inf if args[0].lower() == "inf" else _number(args[0], lineno)
        if not p >= 1:
            raise InstanceParseError(f"pnorm needs p >= 1, got {args[0]}", lineno)
        return PNorm(p)
    k = _integer(args[0], lineno, "row count")
    if k < 1:
        raise InstanceParseError("maxlin needs at least one row", lineno)
    return MaxLin(_rows(lines, k, d, "maxlin row"))


def parse_instance(text):
    lines = _Lines(text)
    lineno, (dtok,) = _keyword(lines, "dim", 1, "'dim <d>'")
    d = _integer(dtok, lineno, "dim")
    if d < 1:
        raise InstanceParseError("dim must be at least 1", lineno)
    lineno, (ntok,) = _keyword(lines, "n", 1, "'n <n>'")
    n = _integer(ntok, lineno, "n")
    if n < 0:
        raise InstanceParseError("n must be nonnegative", lineno)
    weights = _rows(lines, n, d, "weight")
    matroid = _parse_matroid(lines, n)
    objective = _parse_objective(lines, weights)
    if not lines.done():
        raise InstanceParseError("trailing content after the objective", lines.lineno)
    return InstanceFile(Instance(weights, d=d), matroid, objective)


def _fmt(x):
    return repr(float(x))


def format_instance(f):
    """Serialize an InstanceFile; parse_instance(format_instance(f)) == f."""
    inst, m, obj = f.instance, f.matroid, f.objective
    out = [f"dim {inst.d}", f"n {inst.n}"]
    out += [" ".join(_fmt(x) for x in row) for row in inst.weights]
    if isinstance(m, Uniform):
        out.append(f"matroid uniform {m.r}")
    elif isinstance(m, Graphic):
        out.append(f"matroid graphic {m.num_vertices}")
        out += [f"{u} {v}" for u, v in m.edges]
    elif isinstance(m, Partition):
        out.append("matroid partition")
        out += [str(b) for b in m.blocks]
        out.append(" ".join(str(c) for c in m.capacities))
    elif isinstance(m, Linear):
        out.append(f"matroid linear {m.matrix.shape[0]}")
        out += [" ".join(_fmt(x) for x in row) for row in m.matrix]
    else:
        raise TypeError(f"cannot serialize matroid {m!r}")
    if isinstance(obj, SqNorm):
        out.append("objective sqnorm")
    elif isinstance(obj, PNorm):
        out.append(f"objective pnorm {'inf' if math.isinf(obj.p) else _fmt(obj.p)}")
    elif isinstance(obj, Balanced):
        if not np.array_equal(obj.total, inst.weights.sum(axis=0)):
            raise ValueError("balanced objective total must equal the sum of all weights")
        out.append("objective balanced")
    elif isinstance(obj, MaxLin):
        out.append(f"objective maxlin {obj.rows.shape[0]}")
        out += [" ".join(_fmt(x) for x in row) for row in obj.rows]
    else:
        raise TypeError(f"cannot serialize objective {obj!r}")
    return "\n".join(out) + "\n"


def parse_table(text, what="row"):
    """Whitespace-separated numeric rows of equal length ('#' comments allowed)."""
    lines = _Lines(text)
    rows = []
    width = None
    while not lines.done():
        lineno, toks = lines.next(what)
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise InstanceParseError(f"{what}: expected {width} numbers, got {len(toks)}", lineno)
        rows.append([_number(t, lineno) for t in toks])
    if not rows:
        raise InstanceParseError(f"no {what}s found", 1)
    return np.array(rows, dtype=float)
