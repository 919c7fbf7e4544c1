"""Command-line front end.

Exit codes: 0 success (or verify match), 1 usage/parse error,
2 verify mismatch, 3 enumeration limit exceeded.
"""

import argparse
import json
import sys

from .applications import solve_balanced_clustering, solve_quadratic_assignment
from .chambers import enumerate_chambers
from .errors import ConvexMatroidError, EnumerationLimitError
from .geometry import build_generators
from .instance_file import parse_instance, parse_table
from .matroid import DEFAULT_MAX_BASES
from .solver import brute_force_solve, scan_witnesses, solve, values_match

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(x):
    return format(float(x), ".17g")


def _nums(xs):
    return " ".join(_num(x) for x in xs)


def _solution_dict(sol):
    best = sol.best
    return {
        "best": {
            "witness": None if best.witness is None else [float(x) for x in best.witness],
            "basis": [j + 1 for j in best.basis],
            "point": [float(x) for x in best.point],
            "value": float(best.value),
        },
        "candidates_examined": sol.candidates_examined,
        "chambers": sol.chambers,
        "operations": sol.operations,
        "oracle_queries": sol.oracle_queries,
    }


def _print_solution(sol, out, prefix=""):
    print(f"{prefix}basis: {' '.join(str(j + 1) for j in sol.best.basis)}", file=out)
    print(f"{prefix}point: {_nums(sol.best.point)}", file=out)
    print(f"{prefix}value: {_num(sol.best.value)}", file=out)
    print(f"{prefix}chambers: {sol.chambers}", file=out)
    print(f"{prefix}candidates_examined: {sol.candidates_examined}", file=out)


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_solve(args, out):
    f = parse_instance(_read(args.file))
    sol = solve(f.instance, f.matroid, f.objective, threads=args.threads)
    if args.json:
        json.dump(_solution_dict(sol), out)
        out.write("\n")
    else:
        _print_solution(sol, out)
        print(f"operations: {sol.operations}", file=out)
        print(f"oracle_queries: {sol.oracle_queries}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    f = parse_instance(_read(args.file))
    sol = solve(f.instance, f.matroid, f.objective, threads=args.threads)
    ref = brute_force_solve(f.instance, f.matroid, f.objective, max_bases=args.max_enum)
    match = values_match(sol.best.value, ref.best.value)
    if args.json:
        json.dump({"solve": _solution_dict(sol), "brute_force": _solution_dict(ref), "match": match}, out)
        out.write("\n")
    else:
        _print_solution(sol, out, "solve ")
        _print_solution(ref, out, "brute_force ")
        print(f"match: {'yes' if match else 'no'}", file=out)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_chambers(args, out):
    f = parse_instance(_read(args.file))
    gens = build_generators(f.instance)
    chambers = enumerate_chambers(gens)
    if args.points:
        cands = scan_witnesses(f.instance, f.matroid, f.objective, [c.witness for c in chambers])
        d = f.instance.d
        print(",".join([f"x{k + 1}" for k in range(d)] + ["value"]), file=out)
        for c in cands:
            print(",".join([_num(x) for x in c.point] + [_num(c.value)]), file=out)
        return EXIT_OK
    if args.json:
        json.dump(
            {
                "chambers": len(chambers),
                "normals": gens.normals.tolist(),
                "cells": [{"signs": list(c.signs), "witness": c.witness.tolist()} for c in chambers],
            },
            out,
        )
        out.write("\n")
        return EXIT_OK
    print(f"chambers: {len(chambers)}", file=out)
    print(f"normals: {gens.m_prime}", file=out)
    for k, c in enumerate(chambers, start=1):
        signs = " ".join("+" if s > 0 else "-" for s in c.signs)
        print(f"{k}: signs [{signs}] witness {_nums(c.witness)}", file=out)
    return EXIT_OK


def cmd_cluster(args, out):
    points = parse_table(_read(args.file), "point")
    (C1, C2), vs = solve_balanced_clustering(points)
    if args.json:
        json.dump({"clusters": [[j + 1 for j in C1], [j + 1 for j in C2]], "variance_sum": vs}, out)
        out.write("\n")
    else:
        print(f"cluster1: {' '.join(str(j + 1) for j in C1)}", file=out)
        print(f"cluster2: {' '.join(str(j + 1) for j in C2)}", file=out)
        print(f"variance_sum: {_num(vs)}", file=out)
    return EXIT_OK


def cmd_qassign(args, out):
    W = parse_table(_read(args.file), "matrix row")
    x, value = solve_quadratic_assignment(W)
    if args.json:
        json.dump({"x": x.tolist(), "value": value}, out)
        out.write("\n")
    else:
        print(f"x: {' '.join(str(int(v)) for v in x)}", file=out)
        print(f"value: {_num(value)}", file=out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="reserved; all algorithms are deterministic")
    common.add_argument("--max-enum", type=int, default=argparse.SUPPRESS,
                        help="cap on subsets enumerated by brute force")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for the per-chamber loop")

    parser = _Parser(prog="cvxmatroid", parents=[common],
                     description="Convex matroid optimization over oracle-presented matroids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, helptext, argname in [
        ("solve", cmd_solve, "maximize c(w(B)) over bases", "instance file"),
        ("verify", cmd_verify, "compare against exhaustive enumeration", "instance file"),
        ("chambers", cmd_chambers, "dump arrangement chambers and witnesses", "instance file"),
        ("cluster", cmd_cluster, "balanced 2-clustering of a points file", "points file, one point per line"),
        ("qassign", cmd_qassign, "maximize ||Wx||^2 over binary x", "matrix file, d rows of n numbers"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help=argname)
        if name == "chambers":
            p.add_argument("--points", action="store_true",
                           help="emit CSV of candidate points w(B(v)) instead")
        p.set_defaults(func=fn)
    return parser


def run(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.json = getattr(args, "json", False)
    args.threads = getattr(args, "threads", 1)
    args.max_enum = getattr(args, "max_enum", DEFAULT_MAX_BASES)
    try:
        return args.func(args, out)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ConvexMatroidError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
