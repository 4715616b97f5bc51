"""Algorithm selection for a guest/host pair."""

from __future__ import annotations

from .errors import PreconditionError
from .graph import Graph, is_complete, min_vertex_cover, path_order, recognize
from .oracle import SearchBudget, find_surjective_hom
from .poly import solve_complete_guest, solve_path_host
from .result import Result
from .treedp import solve_tree_to_tree
from .vcfpt import solve_vc

ALGORITHMS = ("auto", "oracle", "complete-guest", "path-host", "tree-dp", "vc")
DEFAULT_COVER_BUDGET = 10


def _via_path_host(g: Graph, h: Graph) -> Result:
    order = path_order(h)
    if order is None:
        raise PreconditionError("host is not a path")
    r = solve_path_host(g, len(order))
    if r.mapping is None:
        return r
    return Result.yes([order[i] for i in r.mapping], r.algorithm)


def choose_algorithm(g: Graph, h: Graph, k: int = DEFAULT_COVER_BUDGET) -> str:
    """complete guest, then path host, then two trees, then small covers, else the oracle."""
    if g.n and is_complete(g):
        return "complete-guest"
    if path_order(h) is not None:
        return "path-host"
    if g.n and recognize(g).tree and recognize(h).tree:
        return "tree-dp"
    if min_vertex_cover(g, k) is not None and min_vertex_cover(h, k) is not None:
        return "vc"
    return "oracle"


def solve(g: Graph, h: Graph, algo: str = "auto", k: int | None = None,
          budget: SearchBudget | None = None) -> Result:
    """Run one algorithm (or pick one with ``algo="auto"``).

    Raises PreconditionError when the chosen algorithm does not apply.
    """
    k = DEFAULT_COVER_BUDGET if k is None else k
    if algo == "auto":
        algo = choose_algorithm(g, h, k)
    if algo == "oracle":
        return find_surjective_hom(g, h, budget)
    if algo == "complete-guest":
        return solve_complete_guest(g, h)
    if algo == "path-host":
        return _via_path_host(g, h)
    if algo == "tree-dp":
        return solve_tree_to_tree(g, h)
    if algo == "vc":
        return solve_vc(g, h, k)
    raise ValueError(f"unknown algorithm {algo!r}")
