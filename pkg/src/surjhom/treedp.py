"""Dynamic programming for surjective homomorphisms between trees.

The guest tree is rooted at vertex 0. For a guest vertex ``u`` the table
holds every pair ``(x, S)`` -- ``x`` a host vertex, ``S`` a set of host
leaves -- such that some homomorphism of the subtree below ``u`` sends ``u``
to ``x`` and covers ``S``. A homomorphism of a tree onto a tree is surjective
iff it covers all host leaves, so the answer is read off the root table.

Tables are boolean arrays of shape ``(m, 2**k)`` indexed by host vertex and
leaf bitmask. Combining two child tables takes the union of leaf sets on a
common host vertex; this is done as an OR-convolution via subset-sum
transforms, which gives the same records as pairing every ``S'`` with every
``S''``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import PreconditionError
from .graph import Graph, recognize
from .oracle import verify
from .result import Result


@dataclass(frozen=True)
class DpTable:
    owner: tuple
    data: np.ndarray  # bool, shape (m, 2**k)

    @property
    def num_leaves(self) -> int:
        return self.data.shape[1].bit_length() - 1

    def records(self) -> set[tuple[int, int]]:
        xs, masks = np.nonzero(self.data)
        return set(zip(xs.tolist(), masks.tolist()))

    def __contains__(self, record) -> bool:
        x, mask = record
        return bool(self.data[x, mask])

    def __len__(self) -> int:
        return int(self.data.sum())

    @classmethod
    def from_records(cls, owner, m: int, k: int, records: Iterable[tuple[int, int]]) -> "DpTable":
        data = np.zeros((m, 1 << k), dtype=bool)
        for x, mask in records:
            data[x, mask] = True
        return cls(owner, data)


def host_leaves(h: Graph) -> tuple[list[int], list[int]]:
    """Leaves of ``h`` in index order, and each vertex's bit (0 for non-leaves)."""
    leaves = [x for x in range(h.n) if h.degree(x) == 1]
    bits = [0] * h.n
    for i, x in enumerate(leaves):
        bits[x] = 1 << i
    return leaves, bits


def _adjacency_matrix(h: Graph) -> np.ndarray:
    a = np.zeros((h.n, h.n), dtype=bool)
    for u, v in h.edges:
        a[u, v] = a[v, u] = True
    return a


def base_table(owner, m: int, leaf_mask_of: Sequence[int], k: int) -> DpTable:
    """Table of a single guest vertex: ``(x, {})`` always, ``(x, {x})`` for leaves."""
    data = np.zeros((m, 1 << k), dtype=bool)
    data[:, 0] = True
    for x, bit in enumerate(leaf_mask_of):
        if bit:
            data[x, bit] = True
    return DpTable(owner, data)


def edge_table(child_table: DpTable, h: Graph, leaf_mask_of: Sequence[int],
               owner=None, adjacency: np.ndarray | None = None) -> DpTable:
    """Lift the table of a child ``v`` to the edge ``uv``.

    ``(x, S)`` is recorded if a neighbour ``y`` of ``x`` has ``(y, S)`` in
    the child table, or if ``x`` is a leaf and a neighbour ``y`` has
    ``(y, S - {x})``.
    """
    a = _adjacency_matrix(h) if adjacency is None else adjacency
    child = child_table.data
    lifted = a @ child
    out = lifted.copy()
    masks = np.arange(child.shape[1])
    for x, bit in enumerate(leaf_mask_of):
        if bit:
            with_bit = masks[(masks & bit) != 0]
            out[x, with_bit] |= lifted[x, with_bit ^ bit]
    return DpTable(owner if owner is not None else ("edge",) + tuple(child_table.owner[1:]), out)


def _zeta(counts: np.ndarray, k: int) -> np.ndarray:
    m = counts.shape[0]
    for i in range(k):
        step = 1 << i
        view = counts.reshape(m, -1, 2, step)
        view[:, :, 1, :] += view[:, :, 0, :]
    return counts


def _moebius(counts: np.ndarray, k: int) -> np.ndarray:
    m = counts.shape[0]
    for i in range(k):
        step = 1 << i
        view = counts.reshape(m, -1, 2, step)
        view[:, :, 1, :] -= view[:, :, 0, :]
    return counts


def merge_tables(acc: DpTable, nxt: DpTable, owner=None) -> DpTable:
    """Records ``(x, S' | S'')`` with ``(x, S')`` in ``acc`` and ``(x, S'')`` in ``nxt``."""
    k = acc.num_leaves
    a = _zeta(acc.data.astype(np.int64), k)
    b = _zeta(nxt.data.astype(np.int64), k)
    pairs = _moebius(a * b, k)
    return DpTable(owner if owner is not None else acc.owner, pairs > 0)


class TreeDP:
    """All tables for one guest/host pair of trees (host with at least one edge)."""

    def __init__(self, g: Graph, h: Graph, root: int = 0):
        self.g, self.h, self.root = g, h, root
        self.leaves, self.bits = host_leaves(h)
        self.k = len(self.leaves)
        self.full = (1 << self.k) - 1
        adjacency = _adjacency_matrix(h)

        parent = [-1] * g.n
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        self.parent = parent
        self.children = [[] for _ in range(g.n)]
        for v in order[1:]:
            self.children[parent[v]].append(v)

        self.vertex: dict[int, DpTable] = {}
        self.edge: dict[tuple[int, int], DpTable] = {}
        self.aux: dict[tuple[int, int], DpTable] = {}
        for u in reversed(order):
            kids = self.children[u]
            if not kids:
                self.vertex[u] = base_table(("vertex", u), h.n, self.bits, self.k)
                continue
            acc = None
            for i, v in enumerate(kids):
                e = edge_table(self.vertex[v], h, self.bits, ("edge", u, v), adjacency)
                self.edge[(u, v)] = e
                acc = e if acc is None else merge_tables(acc, e, ("aux", u, i))
                self.aux[(u, i)] = acc
            self.vertex[u] = DpTable(("vertex", u), acc.data)

    def accepting_host_vertex(self) -> int | None:
        hits = np.nonzero(self.vertex[self.root].data[:, self.full])[0]
        return int(hits[0]) if len(hits) else None

    def reconstruct(self, z: int) -> list[int]:
        """Walk the tables down from ``(z, all leaves)`` at the root."""
        f = [-1] * self.g.n
        adj = self.h.adj
        masks = np.arange(1 << self.k)
        stack = [(self.root, z, self.full)]
        while stack:
            u, x, s = stack.pop()
            f[u] = x
            kids = self.children[u]
            for i in range(len(kids) - 1, -1, -1):
                v = kids[i]
                e = self.edge[(u, v)].data[x]
                if i == 0:
                    s_edge = s
                else:
                    prev = self.aux[(u, i - 1)].data[x]
                    sub = (masks | s) == s
                    a_idx = masks[prev & sub]
                    b_idx = masks[e & sub]
                    hit = np.nonzero((a_idx[:, None] | b_idx[None, :]) == s)
                    ai, bi = int(hit[0][0]), int(hit[1][0])
                    s, s_edge = int(a_idx[ai]), int(b_idx[bi])
                stack.append(self._edge_step(v, x, s_edge, adj))
        return f

    def _edge_step(self, v: int, x: int, s: int, adj) -> tuple[int, int, int]:
        child = self.vertex[v].data
        for y in sorted(adj[x]):
            if child[y, s]:
                return v, y, s
        bit = self.bits[x]
        if bit and s & bit:
            for y in sorted(adj[x]):
                if child[y, s ^ bit]:
                    return v, y, s ^ bit
        raise AssertionError("inconsistent DP tables")


def solve_tree_to_tree(g: Graph, h: Graph) -> Result:
    """Surjective homomorphism between trees, in ``O(4^k n m^2)`` for ``k`` host leaves."""
    if g.n == 0 or not recognize(g).tree:
        raise PreconditionError("guest is not a tree")
    if h.n == 0 or not recognize(h).tree:
        raise PreconditionError("host is not a tree")
    if h.n == 1:
        if g.n == 1:
            return Result.yes([0], "tree-dp")
        return Result.no("guest edge cannot map to a single vertex", "tree-dp")
    dp = TreeDP(g, h)
    z = dp.accepting_host_vertex()
    if z is None:
        return Result.no("no root record covers all leaves", "tree-dp")
    f = dp.reconstruct(z)
    assert verify(g, h, f), "tree DP produced an invalid witness"
    return Result.yes(f, "tree-dp")
