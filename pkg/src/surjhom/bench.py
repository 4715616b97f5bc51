"""Seeded cross-validation suites: every solver against an independent check.

Each suite returns a :class:`SuiteReport`. Reports contain no timings, so a
repeated run with the same seed renders byte-identically; ``digest`` hashes
every verdict and witness the suite saw.
"""

from __future__ import annotations

import hashlib
import inspect
import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .graph import Graph, complete_graph, components, min_vertex_cover, path_graph
from .hardness import (
    PARTITION_TAGS,
    check_certificates,
    construct_witness,
    gen_hampath,
    generate,
    three_partition_brute,
    validate_multiset,
)
from .oracle import SearchBudget, enumerate_homs, find_surjective_hom, verify
from .poly import solve_complete_guest, solve_path_host
from .random_graphs import random_graph, random_tree
from .result import Verdict
from .treedp import TreeDP, host_leaves, solve_tree_to_tree
from .vcfpt import TransportSystem, feasibility, solve_vc


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    _hash: "hashlib._Hash" = field(default_factory=hashlib.sha256, repr=False)

    def record(self, *items) -> None:
        self._hash.update(repr(items).encode())

    def fail(self, message: str) -> None:
        self.failures.append(message)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()[:16]

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} disagreements, digest {self.digest}"


# --- independent checks ---------------------------------------------------------

def brute_surjective(g: Graph, h: Graph) -> bool:
    """Try all ``|V_H| ** |V_G|`` mappings at once with numpy."""
    if h.n == 0:
        return g.n == 0
    if g.n == 0:
        return False
    total = h.n ** g.n
    idx = np.arange(total)
    maps = np.stack([(idx // h.n ** v) % h.n for v in range(g.n)], axis=1)
    adj = np.zeros((h.n, h.n), dtype=bool)
    for u, v in h.edges:
        adj[u, v] = adj[v, u] = True
    ok = np.ones(total, dtype=bool)
    for u, v in g.edges:
        ok &= adj[maps[:, u], maps[:, v]]
    for x in range(h.n):
        ok &= (maps == x).any(axis=1)
    return bool(ok.any())


def brute_transport(ts: TransportSystem) -> bool:
    """Enumerate every row's distributions over its allowed cells, tracking capped column sums."""
    p, q = len(ts.rows), len(ts.cols)
    states = {tuple([0] * q)}
    for i in range(p):
        cells = sorted(j for (r, j) in ts.allowed if r == i)
        if not cells:
            if ts.rows[i]:
                return False
            continue
        new = set()
        for dist in _compositions(ts.rows[i], len(cells)):
            for st in states:
                s = list(st)
                for j, amount in zip(cells, dist):
                    s[j] = min(ts.cols[j], s[j] + amount)
                new.add(tuple(s))
        states = new
    return tuple(ts.cols) in states


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def has_hamiltonian_path(h: Graph) -> bool:
    return any(all(h.has_edge(a, b) for a, b in zip(perm, perm[1:]))
               for perm in itertools.permutations(range(h.n)))


def atlas_graphs(max_n: int, connected: bool = False) -> list[Graph]:
    """All graphs up to isomorphism with 1..max_n vertices (max_n <= 7)."""
    return [g for g in _atlas() if 1 <= g.n <= max_n and (not connected or _connected(g))]


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    from networkx.generators.atlas import graph_atlas_g

    return tuple(Graph.from_edges(a.number_of_nodes(), a.edges()) for a in graph_atlas_g())


def _connected(g: Graph) -> bool:
    return len(components(g)) == 1


def table_semantics_mismatches(dp: TreeDP) -> list[str]:
    """Compare every DP table with the records implied by enumerated homomorphisms."""
    g, h = dp.g, dp.h
    _, bits = host_leaves(h)
    out = []

    def below(v):
        stack, seen = [v], []
        while stack:
            x = stack.pop()
            seen.append(x)
            stack.extend(dp.children[x])
        return seen

    def expected(u, verts):
        verts = [u] + sorted(set(verts) - {u})
        homs = enumerate_homs(g.induced(verts), h).homs
        recs = set()
        for f in homs:
            img = 0
            for x in f:
                img |= bits[x]
            sub = img
            while True:
                recs.add((f[0], sub))
                if sub == 0:
                    break
                sub = (sub - 1) & img
        return recs

    for u in range(g.n):
        if dp.vertex[u].records() != expected(u, below(u)):
            out.append(f"vertex table {u}")
        acc = [u]
        for i, v in enumerate(dp.children[u]):
            sub = below(v)
            if dp.edge[(u, v)].records() != expected(u, [u] + sub):
                out.append(f"edge table {u}-{v}")
            acc += sub
            if dp.aux[(u, i)].records() != expected(u, acc):
                out.append(f"aux table {u}/{i}")
    return out


# --- suites -------------------------------------------------------------------------

Solver = Callable[..., object]


def suite_oracle(seed: int, count: int = 2000, oracle: Solver = find_surjective_hom) -> SuiteReport:
    rep = SuiteReport("oracle-completeness")
    rng = random.Random(seed)
    for _ in range(count):
        ng = rng.randint(1, 6)
        nh = rng.randint(1, min(4, ng)) if rng.random() < 0.9 else rng.randint(1, 4)
        g, h = random_graph(ng, rng.random(), rng), random_graph(nh, rng.random(), rng)
        r = oracle(g, h)
        truth = brute_surjective(g, h)
        rep.checked += 1
        rep.record(r.verdict.value, r.mapping)
        if (r.verdict is Verdict.YES) != truth or r.verdict is Verdict.UNKNOWN:
            rep.fail(f"{sorted(g.edges)} n={g.n} -> {sorted(h.edges)} n={h.n}: {r.verdict.value}")
        elif r.mapping is not None and not verify(g, h, r.mapping):
            rep.fail(f"invalid witness for {g} -> {h}")
    return rep


def suite_complete_guest(seed: int, solver: Solver = solve_complete_guest) -> SuiteReport:
    rep = SuiteReport("complete-guest")
    for n in range(2, 6):
        g = complete_graph(n)
        for h in atlas_graphs(5):
            r = solver(g, h)
            o = find_surjective_hom(g, h)
            rep.checked += 1
            rep.record(r.verdict.value, r.mapping)
            if r.verdict != o.verdict:
                rep.fail(f"K_{n} -> {sorted(h.edges)} n={h.n}")
    return rep


def suite_path_host(seed: int, count: int = 500, solver: Solver = solve_path_host) -> SuiteReport:
    rep = SuiteReport("path-host")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng.randint(1, 7), rng.random() * 0.6, rng)
        for ell in range(1, 7):
            host = path_graph(ell)
            r = solver(g, ell)
            o = find_surjective_hom(g, host)
            rep.checked += 1
            rep.record(r.verdict.value, r.mapping)
            if r.verdict != o.verdict:
                rep.fail(f"{sorted(g.edges)} n={g.n} -> P_{ell}: {r.verdict.value} vs {o.verdict.value}")
            elif r.mapping is not None and not verify(g, host, r.mapping):
                rep.fail(f"invalid witness {sorted(g.edges)} n={g.n} -> P_{ell}")
    return rep


def suite_tree_dp(seed: int, count: int = 200, solver: Solver = solve_tree_to_tree) -> SuiteReport:
    rep = SuiteReport("tree-dp")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_tree(rng.randint(1, 7), rng)
        h = random_tree(rng.randint(1, 5), rng)
        if h.n >= 2:
            bad = table_semantics_mismatches(TreeDP(g, h))
            for b in bad:
                rep.fail(f"{sorted(g.edges)} -> {sorted(h.edges)}: {b}")
        r = solver(g, h)
        o = find_surjective_hom(g, h)
        rep.checked += 1
        rep.record(r.verdict.value, r.mapping)
        if r.verdict != o.verdict:
            rep.fail(f"{sorted(g.edges)} n={g.n} -> {sorted(h.edges)} n={h.n}")
        elif r.mapping is not None and not verify(g, h, r.mapping):
            rep.fail("invalid witness")
    return rep


def suite_vc(seed: int, count: int = 500, solver: Solver = solve_vc, k: int = 3) -> SuiteReport:
    rep = SuiteReport("vertex-cover")
    rng = random.Random(seed)
    while rep.checked < count:
        ng = rng.randint(1, 7)
        nh = rng.randint(1, min(5, ng)) if rng.random() < 0.9 else rng.randint(1, 5)
        g, h = random_graph(ng, rng.random(), rng), random_graph(nh, rng.random(), rng)
        if min_vertex_cover(g, k) is None or min_vertex_cover(h, k) is None:
            continue
        r = solver(g, h, k)
        o = find_surjective_hom(g, h)
        rep.checked += 1
        rep.record(r.verdict.value, r.mapping)
        if r.verdict != o.verdict:
            rep.fail(f"{sorted(g.edges)} n={g.n} -> {sorted(h.edges)} n={h.n}")
        elif r.mapping is not None and not verify(g, h, r.mapping):
            rep.fail("invalid witness")
    return rep


def random_transport(rng: random.Random) -> TransportSystem:
    p, q = rng.randint(1, 4), rng.randint(1, 4)
    rows = tuple(rng.randint(0, 5) for _ in range(p))
    cols = tuple(rng.randint(0, 5) for _ in range(q))
    density = rng.random()
    allowed = frozenset((i, j) for i in range(p) for j in range(q) if rng.random() < density)
    return TransportSystem(rows, cols, allowed)


def suite_feasibility(seed: int, count: int = 1000, solver: Solver = feasibility) -> SuiteReport:
    rep = SuiteReport("transport-feasibility")
    rng = random.Random(seed)
    for _ in range(count):
        ts = random_transport(rng)
        x = solver(ts)
        truth = brute_transport(ts)
        rep.checked += 1
        rep.record(x)
        if (x is not None) != truth:
            rep.fail(f"{ts}: flow says {x is not None}, enumeration says {truth}")
        elif x is not None and not ts.satisfied_by(x):
            rep.fail(f"{ts}: returned solution violates the system")
    return rep


def desk_multisets(max_m: int = 2, max_B: int = 6):
    """Every (m, B)-positive multiset with ``m <= max_m``, ``B <= max_B``, ``max a_i <= B``."""
    for m in range(1, max_m + 1):
        for B in range(1, max_B + 1):
            def rec(prefix, remaining, left, lo):
                if left == 0:
                    if remaining == 0:
                        yield tuple(prefix)
                    return
                for x in range(lo, min(B, remaining) + 1):
                    yield from rec(prefix + [x], remaining - x, left - 1, x)
            yield from rec([], m * B, 3 * m, 1)


def suite_hardness(seed: int, max_m: int = 2, max_B: int = 6, seconds_per_instance: float = 60.0,
                   oracle: Solver = find_surjective_hom) -> SuiteReport:
    rep = SuiteReport("hardness-equivalence")
    for a in desk_multisets(max_m, max_B):
        inst = validate_multiset(a)
        part = three_partition_brute(inst)
        for tag in PARTITION_TAGS:
            out = generate(tag, inst)
            rep.checked += 1
            if not check_certificates(out):
                rep.fail(f"{a} {tag}: certificate rejected")
            if part is not None:
                f = construct_witness(out, part)
                rep.record(tag, a, hashlib.sha256(repr(f).encode()).hexdigest())
                if not verify(out.guest, out.host, f):
                    rep.fail(f"{a} {tag}: constructed witness rejected")
            if tag in ("linear-forest", "union-cliques"):
                r = oracle(out.guest, out.host, SearchBudget(max_seconds=seconds_per_instance))
                rep.record(tag, a, r.verdict.value, r.mapping)
                if r.verdict is Verdict.UNKNOWN:
                    rep.fail(f"{a} {tag}: oracle ran out of budget")
                elif (r.verdict is Verdict.YES) != (part is not None):
                    rep.fail(f"{a} {tag}: oracle {r.verdict.value}, 3-partition {part is not None}")
    return rep


def suite_hampath(seed: int, oracle: Solver = find_surjective_hom) -> SuiteReport:
    rep = SuiteReport("hampath")
    for h in atlas_graphs(6, connected=True):
        out = gen_hampath(h)
        r = oracle(out.guest, out.host)
        rep.checked += 1
        rep.record(r.verdict.value, r.mapping)
        if (r.verdict is Verdict.YES) != has_hamiltonian_path(h):
            rep.fail(f"{sorted(h.edges)} n={h.n}")
    return rep


SUITES = {
    "oracle": suite_oracle,
    "complete-guest": suite_complete_guest,
    "path-host": suite_path_host,
    "tree-dp": suite_tree_dp,
    "vc": suite_vc,
    "feasibility": suite_feasibility,
    "hardness": suite_hardness,
    "hampath": suite_hampath,
}

_COUNTED = {"oracle", "path-host", "tree-dp", "vc", "feasibility"}


def run_bench(seed: int = 0, scale: float = 1.0, only=None, overrides: dict | None = None,
              budget_seconds: float = 60.0) -> list[SuiteReport]:
    """Run the suites in a fixed order; ``scale`` multiplies the random-instance counts."""
    reports = []
    for offset, (name, fn) in enumerate(SUITES.items()):
        if only and name not in only:
            continue
        kwargs = dict((overrides or {}).get(name, {}))
        if name in _COUNTED:
            default = inspect.signature(fn).parameters["count"].default
            kwargs.setdefault("count", max(1, int(default * scale)))
        if name == "hardness":
            kwargs.setdefault("seconds_per_instance", budget_seconds)
        reports.append(fn(seed + offset, **kwargs))
    return reports
