"""Polynomial special cases: complete guests and path hosts."""

from __future__ import annotations

from .errors import PreconditionError
from .graph import (
    Graph,
    bfs_distances,
    components,
    eccentricities,
    is_bipartite,
    is_complete,
    path_graph,
)
from .oracle import verify
from .result import Result


def solve_complete_guest(g: Graph, h: Graph) -> Result:
    """A complete guest maps surjectively onto ``h`` iff ``h`` is the same complete graph."""
    if not is_complete(g):
        raise PreconditionError("guest is not complete")
    if h.n != g.n:
        return Result.no("size mismatch", "complete-guest")
    if not is_complete(h):
        return Result.no("host not complete", "complete-guest")
    return Result.yes(range(g.n), "complete-guest")


def fold_onto_path(f_graph: Graph, base: int, s: int) -> list[int]:
    """Map a connected bipartite graph onto the path ``0..s-1`` by BFS layer.

    Layer ``d`` (distance from ``base``) goes to ``d`` while ``d <= s-2``;
    deeper layers alternate between ``s-1`` and ``s-2`` by parity. For
    ``1 <= s-1 <= ecc(base)`` the result is a surjective homomorphism.
    """
    dist = bfs_distances(f_graph, base)
    out = []
    for d in dist:
        d = int(d)
        if d <= s - 2:
            out.append(d)
        elif (d - s + 1) % 2 == 0:
            out.append(s - 1)
        else:
            out.append(s - 2)
    return out


def subpath_lengths(diams: list[int], ell: int) -> list[int]:
    """Per-component image lengths whose subpaths can cover ``P_ell``.

    Each length starts at its minimum (1 for a single vertex, else 2) and
    slack is added greedily in component order, never beyond ``diam + 1``
    or ``ell``, until the total reaches ``ell``.
    """
    lengths = [min(1, d) + 1 for d in diams]
    deficit = ell - sum(lengths)
    for i, d in enumerate(diams):
        if deficit <= 0:
            break
        add = min(d + 1 - lengths[i], deficit, ell - lengths[i])
        lengths[i] += add
        deficit -= add
    return lengths


def solve_path_host(g: Graph, ell: int) -> Result:
    """Decide whether ``g`` maps surjectively onto the path ``0-1-...-(ell-1)``.

    For ``ell >= 2`` the answer is YES iff ``g`` is bipartite and the
    component diameters plus the number of components reach ``ell``.
    """
    if ell < 1:
        raise PreconditionError("host path needs at least one vertex")
    if g.n < ell:
        return Result.no("guest smaller than host", "path-host")
    if ell == 1:
        if g.num_edges:
            return Result.no("guest has an edge", "path-host")
        return Result.yes([0] * g.n, "path-host")
    if not is_bipartite(g)[0]:
        return Result.no("not bipartite", "path-host")

    comps = components(g).sets
    subs, bases, diams = [], [], []
    for c in comps:
        sub = g.induced(c)
        ecc = eccentricities(sub)
        d = max(ecc)
        subs.append(sub)
        bases.append(ecc.index(d))
        diams.append(d)
    if sum(diams) + len(comps) < ell:
        return Result.no("diameter sum too small", "path-host")

    lengths = subpath_lengths(diams, ell)
    mapping = [0] * g.n
    cursor = 0
    for c, sub, base, s in zip(comps, subs, bases, lengths):
        start = min(cursor, ell - s)
        local = fold_onto_path(sub, base, s)
        for i, v in enumerate(c):
            mapping[v] = start + local[i]
        cursor = start + s
    assert verify(g, path_graph(ell), mapping)
    return Result.yes(mapping, "path-host")
