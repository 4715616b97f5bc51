"""Surjective homomorphism for guest and host of bounded vertex cover number.

Both graphs are split into neighbourhood classes: each cover vertex is a
singleton class, and the remaining (independent) vertices are grouped by
their exact neighbourhood. A mapping is described by how many vertices of
each guest class go to each host class. A set of allowed (guest class, host
class) pairs is usable when guest class adjacency is mirrored on the host
side; for such a set the remaining question is a transportation system
(exact row sums, lower-bounded column sums), decided here by max-flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .errors import CoverBudgetExceeded, PreconditionError
from .graph import Graph, VertexCoverWitness, min_vertex_cover
from .oracle import verify
from .result import Result


@dataclass(frozen=True)
class ClassPartition:
    cover: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    adjacent: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def class_of(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.classes)
        for i, c in enumerate(self.classes):
            for v in c:
                out[v] = i
        return out


def build_classes(g: Graph, cover: VertexCoverWitness | Sequence[int]) -> ClassPartition:
    """Cover singletons (in cover order), then classes ``N(X)`` ordered by sorted ``X``."""
    cov = tuple(cover.vertices if isinstance(cover, VertexCoverWitness) else cover)
    cset = set(cov)
    if len(cset) != len(cov) or any(u not in cset and v not in cset for u, v in g.edges):
        raise PreconditionError("not a vertex cover")
    groups: dict[tuple[int, ...], list[int]] = {}
    for u in range(g.n):
        if u not in cset:
            groups.setdefault(tuple(sorted(g.adj[u])), []).append(u)
    classes = [(u,) for u in cov] + [tuple(groups[x]) for x in sorted(groups)]
    adjacent = []
    for ci in classes:
        row = []
        for cj in classes:
            row.append(g.has_edge(ci[0], cj[0]))
        adjacent.append(tuple(row))
    for i, c in enumerate(classes):
        assert not adjacent[i][i]
        assert len({g.adj[v] for v in c}) == 1 or len(c) == 1
    return ClassPartition(cov, tuple(classes), tuple(adjacent))


@dataclass(frozen=True)
class TransportSystem:
    """``sum_j x[i][j] == rows[i]``, ``sum_i x[i][j] >= cols[j]``, ``x`` zero outside ``allowed``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    allowed: frozenset[tuple[int, int]]

    def satisfied_by(self, x) -> bool:
        p, q = len(self.rows), len(self.cols)
        for i in range(p):
            for j in range(q):
                if x[i][j] < 0 or (x[i][j] and (i, j) not in self.allowed):
                    return False
        if any(sum(x[i]) != self.rows[i] for i in range(p)):
            return False
        return all(sum(x[i][j] for i in range(p)) >= self.cols[j] for j in range(q))


def feasibility(ts: TransportSystem) -> list[list[int]] | None:
    """Integral solution of the transportation system, or None.

    Source -> row ``i`` (capacity ``rows[i]``) -> column ``j`` for allowed
    pairs -> sink (capacity ``cols[j]``). The system is feasible iff the
    max-flow meets every column demand and every row with positive demand
    has an allowed column; leftover row supply is parked on the first
    allowed column.
    """
    p, q = len(ts.rows), len(ts.cols)
    if any(d < 0 for d in ts.rows + ts.cols):
        raise ValueError("demands must be nonnegative")
    row_cols = [sorted(j for (i2, j) in ts.allowed if i2 == i) for i in range(p)]
    if any(ts.rows[i] > 0 and not row_cols[i] for i in range(p)):
        return None
    need = sum(ts.cols)
    x = [[0] * q for _ in range(p)]
    if need:
        source, sink = 0, p + q + 1
        big = max(sum(ts.rows), 1)
        src, dst, cap = [], [], []
        for i in range(p):
            src.append(source), dst.append(1 + i), cap.append(ts.rows[i])
            for j in row_cols[i]:
                src.append(1 + i), dst.append(1 + p + j), cap.append(big)
        for j in range(q):
            src.append(1 + p + j), dst.append(sink), cap.append(ts.cols[j])
        size = p + q + 2
        net = csr_matrix((np.array(cap, dtype=np.int32), (src, dst)), shape=(size, size))
        res = maximum_flow(net, source, sink)
        if res.flow_value < need:
            return None
        flow = res.flow.toarray()
        for i in range(p):
            for j in range(q):
                x[i][j] = max(int(flow[1 + i, 1 + p + j]), 0)
    for i in range(p):
        extra = ts.rows[i] - sum(x[i])
        if extra:
            x[i][row_cols[i][0]] += extra
    assert ts.satisfied_by(x)
    return x


def compatible(gp: ClassPartition, hp: ClassPartition, a: tuple[int, int], b: tuple[int, int]) -> bool:
    (i, j), (i2, j2) = a, b
    return not gp.adjacent[i][i2] or hp.adjacent[j][j2]


def enumerate_supports(gp: ClassPartition, hp: ClassPartition) -> Iterator[frozenset[tuple[int, int]]]:
    """Maximal sets of pairwise compatible (guest class, host class) pairs.

    These are the maximal cliques of the compatibility graph on all pairs,
    listed by Bron-Kerbosch with pivoting in a deterministic order.
    """
    pairs = [(i, j) for i in range(gp.size) for j in range(hp.size)]
    n = len(pairs)
    nbr = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if compatible(gp, hp, pairs[a], pairs[b]):
                nbr[a] |= 1 << b
                nbr[b] |= 1 << a

    def bits(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (bin(nbr[u] & p).count("1"), -u))
        for v in list(bits(p & ~nbr[pivot])):
            yield from bk(r | (1 << v), p & nbr[v], x & nbr[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n == 0:
        yield frozenset()
        return
    for clique in bk(0, (1 << n) - 1, 0):
        yield frozenset(pairs[v] for v in bits(clique))


def solve_vc(g: Graph, h: Graph, k: int) -> Result:
    """Decide surjective homomorphism when both graphs have a vertex cover of size <= k."""
    cg = min_vertex_cover(g, k)
    ch = min_vertex_cover(h, k)
    if cg is None:
        raise CoverBudgetExceeded(f"guest vertex cover number exceeds {k}")
    if ch is None:
        raise CoverBudgetExceeded(f"host vertex cover number exceeds {k}")
    if g.n < h.n:
        return Result.no("guest smaller than host", "vc")
    if h.n == 0:
        return Result.yes([], "vc") if g.n == 0 else Result.no("empty host", "vc")
    gp, hp = build_classes(g, cg), build_classes(h, ch)
    rows = tuple(len(c) for c in gp.classes)
    cols = tuple(len(c) for c in hp.classes)
    tried = 0
    for support in enumerate_supports(gp, hp):
        tried += 1
        if {i for i, _ in support} != set(range(gp.size)):
            continue
        x = feasibility(TransportSystem(rows, cols, support))
        if x is not None:
            f = _witness(gp, hp, x)
            assert verify(g, h, f), "vc witness failed verification"
            return Result.yes(f, "vc", tried)
    return Result.no("no feasible support", "vc", tried)


def _witness(gp: ClassPartition, hp: ClassPartition, x: list[list[int]]) -> list[int]:
    n = sum(len(c) for c in gp.classes)
    f = [-1] * n
    turn = [0] * hp.size
    for i, members in enumerate(gp.classes):
        it = iter(members)
        for j, amount in enumerate(x[i]):
            targets = hp.classes[j]
            for _ in range(amount):
                f[next(it)] = targets[turn[j] % len(targets)]
                turn[j] += 1
    return f
