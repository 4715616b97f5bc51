"""Solvers and instance generators for vertex-surjective graph homomorphisms."""

from .errors import (
    CoverBudgetExceeded,
    GraphParseError,
    InvalidInstanceError,
    PreconditionError,
    SizeGuardError,
)
from .graph import Graph, format_graph, parse_graph
from .oracle import SearchBudget, enumerate_homs, find_surjective_hom, verify
from .poly import solve_complete_guest, solve_path_host
from .result import Result, Verdict
from .solve import solve
from .treedp import solve_tree_to_tree
from .vcfpt import solve_vc

__all__ = [
    "CoverBudgetExceeded",
    "Graph",
    "GraphParseError",
    "InvalidInstanceError",
    "PreconditionError",
    "Result",
    "SearchBudget",
    "SizeGuardError",
    "Verdict",
    "enumerate_homs",
    "find_surjective_hom",
    "format_graph",
    "parse_graph",
    "solve",
    "solve_complete_guest",
    "solve_path_host",
    "solve_tree_to_tree",
    "solve_vc",
    "verify",
]
