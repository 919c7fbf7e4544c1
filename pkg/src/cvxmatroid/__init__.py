"""Maximize a convex function of the weight sum over the bases of a matroid."""

from .applications import solve_balanced_clustering, solve_quadratic_assignment, variance_sum
from .chambers import (
    Chamber,
    chamber_count_bound,
    enumerate_chambers,
    enumerate_chambers_2d,
    enumerate_chambers_nd,
    enumerate_chambers_rays,
)
from .geometry import Instance, build_generators, weight_sum, zonotope_vertex
from .linprog import max_margin
from .matroid import (
    Graphic,
    Linear,
    Partition,
    Uniform,
    enumerate_bases,
    greedy_max_basis,
    rank,
)
from .objective import Balanced, MaxLin, PNorm, SqNorm
from .solver import Candidate, Solution, brute_force_solve, solve, vertex_coverage_check

__all__ = [
    "Balanced", "Candidate", "Chamber", "Graphic", "Instance", "Linear", "MaxLin",
    "PNorm", "Partition", "Solution", "SqNorm", "Uniform", "brute_force_solve",
    "build_generators", "chamber_count_bound", "enumerate_bases", "enumerate_chambers",
    "enumerate_chambers_2d", "enumerate_chambers_nd", "enumerate_chambers_rays",
    "greedy_max_basis", "max_margin", "rank", "solve", "solve_balanced_clustering",
    "solve_quadratic_assignment", "variance_sum", "vertex_coverage_check", "weight_sum",
    "zonotope_vertex",
]
