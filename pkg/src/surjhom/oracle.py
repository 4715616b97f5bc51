"""Exact backtracking search for surjective homomorphisms between small graphs.

This is the ground truth the specialised solvers are checked against, so the
search favours sound, easy-to-audit pruning over raw speed:

* per-vertex candidate domains, narrowed by every assigned neighbour;
* surjectivity counting: unassigned guest vertices >= uncovered host vertices;
* every uncovered host vertex must still occur in some open domain;
* at guest-component boundaries, a covering relaxation (each remaining guest
  component lands inside one host component and covers at most its own
  size there) plus a cache of covered-sets already shown to fail;
* value symmetry: among uncovered host twins (equal open or closed
  neighbourhoods) only the smallest index is tried.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Graph, components, is_bipartite
from .result import Result, Verdict


@dataclass(frozen=True)
class SearchBudget:
    """Node-expansion and wall-clock limits; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None


class _Exhausted(Exception):
    pass


def check_mapping(g: Graph, h: Graph, f: Sequence[int]) -> str | None:
    """Describe the first defect of ``f`` as a surjective homomorphism, or None.

    Raises ValueError if ``f`` does not assign every guest vertex a host vertex.
    """
    if len(f) != g.n:
        raise ValueError(f"mapping has {len(f)} entries, guest has {g.n} vertices")
    for u, x in enumerate(f):
        if not 0 <= x < h.n:
            raise ValueError(f"guest vertex {u} maps to {x}, outside 0..{h.n - 1}")
    for u, v in g.sorted_edges():
        if not h.has_edge(f[u], f[v]):
            return f"edge {u}-{v} maps to {f[u]}-{f[v]}, which is not a host edge"
    image = set(f)
    for x in range(h.n):
        if x not in image:
            return f"host vertex {x} is not covered"
    return None


def verify(g: Graph, h: Graph, f: Sequence[int]) -> bool:
    return check_mapping(g, h, f) is None


def search_order(g: Graph) -> tuple[list[int], list[int]]:
    """Guest vertex order and the positions where a new component starts.

    Components come in order of their smallest vertex. Each starts at a
    vertex of maximum degree; afterwards the vertex with most already-ordered
    neighbours is taken next (ties: higher degree, then lower index).
    """
    order: list[int] = []
    starts: list[int] = []
    for comp in components(g).sets:
        starts.append(len(order))
        remaining = set(comp)
        placed_nbrs = dict.fromkeys(comp, 0)
        first = min(comp, key=lambda u: (-g.degree(u), u))
        while remaining:
            if first is not None:
                u, first = first, None
            else:
                u = min(remaining, key=lambda w: (-placed_nbrs[w], -g.degree(w), w))
            remaining.discard(u)
            order.append(u)
            for w in g.adj[u]:
                if w in remaining:
                    placed_nbrs[w] += 1
    return order, starts


def _twin_masks(h: Graph) -> list[int]:
    groups: dict[tuple[str, frozenset[int]], list[int]] = {}
    for x in range(h.n):
        groups.setdefault(("open", h.adj[x]), []).append(x)
        groups.setdefault(("closed", h.adj[x] | {x}), []).append(x)
    masks = [1 << x for x in range(h.n)]
    for members in groups.values():
        if len(members) > 1:
            m = 0
            for x in members:
                m |= 1 << x
            for x in members:
                masks[x] = m
    return masks


def _comp_kind(g: Graph, vertices: Sequence[int]) -> tuple[bool, bool]:
    sub = g.induced(vertices)
    return sub.num_edges > 0, is_bipartite(sub)[0]


class _Search:
    def __init__(self, g: Graph, h: Graph, budget: SearchBudget | None):
        self.g, self.h = g, h
        self.budget = budget or SearchBudget()
        self.deadline = (
            None if self.budget.max_seconds is None else time.monotonic() + self.budget.max_seconds
        )
        self.nodes = 0
        self.full = (1 << h.n) - 1
        self.hadj = [sum(1 << y for y in h.adj[x]) for x in range(h.n)]
        self.twins = _twin_masks(h)

        self.order, starts = search_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        self.later = [[w for w in g.adj[v] if pos[w] > pos[v]] for v in range(g.n)]

        gcomps = components(g).sets
        self.boundary = {s: ci for ci, s in enumerate(starts)}
        self.gcomp_info = [(len(c),) + _comp_kind(g, c) for c in gcomps]
        hcomps = components(h).sets
        self.hcomp_masks = [sum(1 << x for x in c) for c in hcomps]
        self.hcomp_kind = [_comp_kind(h, c) for c in hcomps]
        self.failed: set[tuple[int, int]] = set()

        self.f = [-1] * g.n
        self.count = [0] * h.n
        self.covered = 0
        self.doms = [self.full] * g.n

    def tick(self):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise _Exhausted
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise _Exhausted

    def cover_relaxation_ok(self, comp_index: int) -> bool:
        """Can the remaining guest components, placed whole, cover what is left?"""
        uncovered = self.full & ~self.covered
        deficits = tuple(bin(m & uncovered).count("1") for m in self.hcomp_masks)
        states = {deficits}
        for size, has_edge, bip in self.gcomp_info[comp_index:]:
            allowed = [
                j for j, (h_edge, h_bip) in enumerate(self.hcomp_kind)
                if (h_edge or not has_edge) and (bip or not h_bip)
            ]
            if not allowed:
                return False
            nxt = set()
            for st in states:
                for j in allowed:
                    lst = list(st)
                    lst[j] = max(0, lst[j] - size)
                    nxt.add(tuple(lst))
            states = nxt
            if len(states) > 50_000:
                return True  # relaxation too wide to evaluate cheaply; skip it
        return any(not any(st) for st in states)

    def run(self, i: int) -> bool:
        g_n = self.g.n
        if i == g_n:
            return self.covered == self.full
        comp_index = self.boundary.get(i)
        if comp_index is not None and i > 0:
            key = (i, self.covered)
            if key in self.failed:
                return False
            if not self.cover_relaxation_ok(comp_index):
                self.failed.add(key)
                return False
        v = self.order[i]
        dom = self.doms[v]
        f, count, doms, hadj, later = self.f, self.count, self.doms, self.hadj, self.later
        remaining_after = g_n - i - 1
        while dom:
            low = dom & -dom
            x = low.bit_length() - 1
            dom ^= low
            if not self.covered & low and self.twins[x] & (low - 1) & ~self.covered:
                continue
            self.tick()
            f[v] = x
            count[x] += 1
            old_covered = self.covered
            self.covered |= low
            saved = []
            ok = remaining_after >= bin(self.full & ~self.covered).count("1")
            if ok:
                for w in later[v]:
                    saved.append((w, doms[w]))
                    doms[w] &= hadj[x]
                    if not doms[w]:
                        ok = False
                        break
            if ok:
                ok = self._uncovered_reachable(i + 1)
            if ok and self.run(i + 1):
                return True
            for w, d in reversed(saved):
                doms[w] = d
            count[x] -= 1
            self.covered = old_covered
            f[v] = -1
        if comp_index is not None and i > 0:
            self.failed.add((i, self.covered))
        return False

    def _uncovered_reachable(self, start: int) -> bool:
        need = self.full & ~self.covered
        if not need:
            return True
        union = 0
        for w in self.order[start:]:
            union |= self.doms[w]
            if union & need == need:
                return True
        return False


def find_surjective_hom(g: Graph, h: Graph, budget: SearchBudget | None = None) -> Result:
    """Search for a surjective homomorphism from ``g`` onto ``h``.

    Returns YES with a verified mapping, NO after exhaustive search, or
    UNKNOWN if the budget ran out first.
    """
    if g.n < h.n:
        return Result.no("guest smaller than host", "oracle")
    if h.n == 0:
        return Result.yes([], "oracle") if g.n == 0 else Result.no("empty host", "oracle")
    if g.num_edges and not h.num_edges:
        return Result.no("guest has an edge, host has none", "oracle")
    s = _Search(g, h, budget)
    limit = sys.getrecursionlimit()
    if limit < g.n + 200:
        sys.setrecursionlimit(g.n + 200)
    try:
        found = s.run(0)
    except _Exhausted:
        return Result(Verdict.UNKNOWN, None, "budget exhausted", "oracle", s.nodes)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return Result.no("exhausted", "oracle", s.nodes)
    mapping = tuple(s.f)
    assert verify(g, h, mapping), "oracle produced an invalid witness"
    return Result.yes(mapping, "oracle", s.nodes)


class HomEnumeration(NamedTuple):
    homs: list[tuple[int, ...]]
    truncated: bool


def enumerate_homs(g: Graph, h: Graph, cap: int | None = None) -> HomEnumeration:
    """All homomorphisms ``g -> h`` (surjective or not), sorted lexicographically.

    With ``cap`` set, at most ``cap`` are returned and ``truncated`` tells
    whether more exist.
    """
    if g.n == 0:
        return HomEnumeration([()], False)
    order, _ = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in g.adj[v] if pos[w] < pos[v]] for v in order]
    limit = None if cap is None else cap + 1
    f = [-1] * g.n
    out: list[tuple[int, ...]] = []

    def rec(i: int) -> bool:
        if i == g.n:
            out.append(tuple(f))
            return limit is not None and len(out) >= limit
        v = order[i]
        cands = range(h.n)
        for w in earlier[i]:
            cands = [x for x in cands if x in h.adj[f[w]]]
        for x in cands:
            f[v] = x
            if rec(i + 1):
                return True
        f[v] = -1
        return False

    rec(0)
    truncated = cap is not None and len(out) > cap
    if truncated:
        del out[cap:]
    out.sort()
    return HomEnumeration(out, truncated)
