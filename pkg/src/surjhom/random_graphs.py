"""Seeded random graphs for cross-validation."""

from __future__ import annotations

import itertools
import random

from .graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random recursive tree: vertex ``i`` hangs off a uniform earlier vertex."""
    return Graph(n, frozenset((rng.randrange(i), i) for i in range(1, n)))


def random_tree_max_leaves(n: int, max_leaves: int, rng: random.Random) -> Graph:
    """Random tree with at most ``max_leaves`` leaves (``max_leaves >= 2``).

    New vertices attach to a current leaf (keeping the leaf count) once the
    budget of leaves is used up, and anywhere before that.
    """
    if n <= 2:
        return random_tree(n, rng)
    deg = [0] * n
    edges = [(0, 1)]
    deg[0] = deg[1] = 1
    for i in range(2, n):
        leaves = [v for v in range(i) if deg[v] == 1]
        if len(leaves) < max_leaves:
            parent = rng.randrange(i)
        else:
            parent = rng.choice(leaves)
        edges.append((parent, i))
        deg[parent] += 1
        deg[i] = 1
    return Graph(n, frozenset(edges))


def random_bipartite_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Connected bipartite graph: a random tree plus random cross edges."""
    t = random_tree(n, rng)
    side = [0] * n
    for u, v in sorted(t.edges, key=lambda e: e[1]):
        side[v] = 1 - side[u]
    extra = {(u, v) for u, v in itertools.combinations(range(n), 2)
             if side[u] != side[v] and rng.random() < p}
    return Graph(n, frozenset(t.edges | extra))
