"""Hard instance families built from 3-Partition (and Hamiltonian Path).

Each generator returns a guest/host pair together with certificates that the
pair lies in the advertised graph class. Given a 3-partition of the source
multiset, :func:`construct_witness` builds a surjective homomorphism for the
generated pair.

The constructions are polynomial only when the multiset is written in unary:
the graphs have size proportional to the numbers themselves. Generators
refuse outputs above ``MAX_VERTICES`` vertices or ``MAX_EDGES`` edges.

Vertex numbering (``p_i`` is the size of the ``i``-th guest block, ``q`` the
size of each host block):

* linear-forest, union-cliques: guest block ``i`` occupies consecutive
  indices in order; host block ``j`` is ``j*q .. j*q+q-1``.
* cograph: as union-cliques, plus one universal vertex at the end of each side.
* tree-pw2: guest ``u``-blocks first, then ``v_1..v_n``, then ``w``; host
  ``x``-blocks, then ``y_1..y_m``, then ``z``.
* split: guest ``u``-blocks then ``v_1..v_n``; host ``x``-blocks then
  ``y_j^(1..3)`` as ``mq + 3j + t``.
* proper-interval: guest clique ``U_1``, the inner vertices of the joining
  path, ``U_2``, ... in one run; host cliques ``X^(1), X^(2), ...``.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInstanceError, SizeGuardError
from .graph import (
    Graph,
    PathDecompositionWitness,
    components,
    find_induced_p4,
    is_complete,
    is_split,
    is_split_partition,
    is_umbrella_free_order,
    path_graph,
    recognize,
    validate_path_decomposition,
)

MAX_VERTICES = 10**6
MAX_EDGES = 10**7

TAGS = ("hampath", "linear-forest", "union-cliques", "cograph", "tree-pw2", "split", "proper-interval")
ROMAN = dict(zip(("i", "ii", "iii", "iv", "v", "vi", "vii"), TAGS))
PARTITION_TAGS = TAGS[1:]


def normalize_tag(tag: str) -> str:
    tag = tag.strip().lower().strip("()")
    tag = ROMAN.get(tag, tag)
    if tag not in TAGS:
        raise ValueError(f"unknown construction {tag!r}; expected one of {', '.join(TAGS)}")
    return tag


@dataclass(frozen=True)
class MultisetInstance:
    a: tuple[int, ...]
    m: int
    B: int

    def to_dict(self) -> dict:
        return {"a": list(self.a), "m": self.m, "B": self.B}


@dataclass(frozen=True)
class ThreePartition:
    triples: tuple[tuple[int, int, int], ...]  # 0-based indices into ``a``

    def is_valid_for(self, inst: MultisetInstance) -> bool:
        used = sorted(i for t in self.triples for i in t)
        if used != list(range(len(inst.a))) or len(self.triples) != inst.m:
            return False
        return all(len(t) == 3 and sum(inst.a[i] for i in t) == inst.B for t in self.triples)


def validate_multiset(a: Sequence[int]) -> MultisetInstance:
    a = tuple(int(x) for x in a)
    n = len(a)
    if n == 0 or n % 3:
        raise InvalidInstanceError(f"multiset size {n} is not a positive multiple of 3")
    if any(x <= 0 for x in a):
        raise InvalidInstanceError("all elements must be positive")
    m = n // 3
    if sum(a) % m:
        raise InvalidInstanceError(f"sum {sum(a)} is not divisible by m={m}")
    return MultisetInstance(a, m, sum(a) // m)


def three_partition_brute(inst: MultisetInstance, max_m: int = 4) -> ThreePartition | None:
    """Exhaustive search; the smallest unused index is always placed first."""
    if inst.m > max_m:
        raise SizeGuardError(f"brute-force 3-partition limited to m <= {max_m}")
    n, a, B = len(inst.a), inst.a, inst.B
    used = [False] * n
    triples: list[tuple[int, int, int]] = []

    def rec() -> bool:
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        for j in range(i + 1, n):
            if used[j] or a[i] + a[j] >= B:
                continue
            used[j] = True
            for k in range(j + 1, n):
                if not used[k] and a[i] + a[j] + a[k] == B:
                    used[k] = True
                    triples.append((i, j, k))
                    if rec():
                        return True
                    triples.pop()
                    used[k] = False
            used[j] = False
        used[i] = False
        return False

    if not rec():
        return None
    part = ThreePartition(tuple(triples))
    assert part.is_valid_for(inst)
    return part


@dataclass(frozen=True)
class ReductionOutput:
    tag: str
    guest: Graph
    host: Graph
    instance: MultisetInstance | None = None
    certificates: dict = field(default_factory=dict)
    layout: dict = field(default_factory=dict, repr=False)

    def manifest(self, guest_file=None, host_file=None, expected=None, partition=None, witness=None) -> dict:
        return {
            "schema": 1,
            "construction": self.tag,
            "instance": self.instance.to_dict() if self.instance else None,
            "guest": {"file": guest_file, "n": self.guest.n, "edges": self.guest.num_edges},
            "host": {"file": host_file, "n": self.host.n, "edges": self.host.num_edges},
            "certificates": self.certificates,
            "expected": expected,
            "partition": [list(t) for t in partition.triples] if partition else None,
            "witness": list(witness) if witness is not None else None,
        }


def manifest_json(manifest: dict) -> str:
    return json.dumps(manifest, indent=2, sort_keys=True) + "\n"


# --- helpers -------------------------------------------------------------------

def _guard(n_vertices: int, n_edges: int):
    if n_vertices > MAX_VERTICES:
        raise SizeGuardError(f"construction would have {n_vertices} vertices (limit {MAX_VERTICES})")
    if n_edges > MAX_EDGES:
        raise SizeGuardError(f"construction would have {n_edges} edges (limit {MAX_EDGES})")


def _blocks(sizes: Sequence[int], start: int = 0) -> list[tuple[int, int]]:
    out = []
    for s in sizes:
        out.append((start, s))
        start += s
    return out


def _path_edges(start: int, size: int):
    return [(start + t, start + t + 1) for t in range(size - 1)]


def _clique_edges(start: int, size: int):
    return itertools.combinations(range(start, start + size), 2)


def _instance(inst) -> MultisetInstance:
    return inst if isinstance(inst, MultisetInstance) else validate_multiset(inst)


def _pq(inst: MultisetInstance) -> tuple[list[int], int]:
    return [x + inst.B for x in inst.a], 4 * inst.B


# --- generators -----------------------------------------------------------------

def gen_hampath(h: Graph) -> ReductionOutput:
    """``P_n`` maps surjectively onto an ``n``-vertex ``h`` iff ``h`` has a Hamiltonian path."""
    if h.n == 0:
        raise ValueError("host must be nonempty")
    return ReductionOutput("hampath", path_graph(h.n), h, certificates={"guest_path": True})


def _block_forest(inst: MultisetInstance, clique: bool, tag: str) -> ReductionOutput:
    p, q = _pq(inst)
    n_g = sum(p)
    if clique:
        _guard(n_g + inst.m * q, sum(s * (s - 1) // 2 for s in p) + inst.m * q * (q - 1) // 2)
    else:
        _guard(n_g + inst.m * q, n_g + inst.m * q)
    gblocks = _blocks(p)
    hblocks = _blocks([q] * inst.m)
    make = _clique_edges if clique else _path_edges
    g = Graph(n_g, frozenset(e for s, size in gblocks for e in make(s, size)))
    h = Graph(inst.m * q, frozenset(e for s, size in hblocks for e in make(s, size)))
    kind = "union_of_cliques" if clique else "linear_forest"
    certs = {kind: True, "guest_blocks": [list(b) for b in gblocks], "host_blocks": [list(b) for b in hblocks]}
    return ReductionOutput(tag, g, h, inst, certs, {"gblocks": gblocks, "hblocks": hblocks})


def gen_linear_forest(inst) -> ReductionOutput:
    """Guest: paths on ``a_i + B`` vertices; host: ``m`` paths on ``4B`` vertices."""
    return _block_forest(_instance(inst), False, "linear-forest")


def gen_union_cliques(inst) -> ReductionOutput:
    return _block_forest(_instance(inst), True, "union-cliques")


def gen_cograph(inst) -> ReductionOutput:
    """Union of cliques plus one universal vertex on each side."""
    inst = _instance(inst)
    base = _block_forest(inst, True, "cograph")
    g, h = base.guest, base.host
    _guard(g.n + h.n + 2, g.num_edges + h.num_edges + g.n + h.n)
    g2 = Graph(g.n + 1, g.edges | frozenset((u, g.n) for u in range(g.n)))
    h2 = Graph(h.n + 1, h.edges | frozenset((x, h.n) for x in range(h.n)))
    certs = dict(base.certificates)
    del certs["union_of_cliques"]
    certs.update({"connected_cograph": True, "guest_universal": g.n, "host_universal": h.n})
    layout = dict(base.layout, v=g.n, x=h.n)
    return ReductionOutput("cograph", g2, h2, inst, certs, layout)


def gen_trees_pw2(inst) -> ReductionOutput:
    """Two-level spiders: ``v_i`` with ``p_i`` pendant ``u``'s, all ``v_i`` joined to ``w``."""
    inst = _instance(inst)
    p, q = _pq(inst)
    n, m = len(p), inst.m
    n_u, n_x = sum(p), m * q
    _guard(n_u + n + 1 + n_x + m + 1, 2 * (n_u + n_x) + n + m)
    gblocks, hblocks = _blocks(p), _blocks([q] * m)
    v = [n_u + i for i in range(n)]
    w = n_u + n
    y = [n_x + j for j in range(m)]
    z = n_x + m
    gedges = [(u, v[i]) for i, (s, size) in enumerate(gblocks) for u in range(s, s + size)]
    gedges += [(v[i], w) for i in range(n)]
    hedges = [(x, y[j]) for j, (s, size) in enumerate(hblocks) for x in range(s, s + size)]
    hedges += [(y[j], z) for j in range(m)]
    g = Graph.from_edges(w + 1, gedges)
    h = Graph.from_edges(z + 1, hedges)
    gbags = [[u, v[i], w] for i, (s, size) in enumerate(gblocks) for u in range(s, s + size)]
    hbags = [[x, y[j], z] for j, (s, size) in enumerate(hblocks) for x in range(s, s + size)]
    certs = {"guest_path_decomposition": gbags, "host_path_decomposition": hbags, "width": 2}
    layout = {"gblocks": gblocks, "hblocks": hblocks, "v": v, "w": w, "y": y, "z": z}
    return ReductionOutput("tree-pw2", g, h, inst, certs, layout)


def gen_split(inst) -> ReductionOutput:
    """Clique of all ``u``'s with pendant-like ``v_i``; host has three ``y``'s per block."""
    inst = _instance(inst)
    p, q = _pq(inst)
    n, m = len(p), inst.m
    n_u = sum(p)
    _guard(n_u + n + m * q + 3 * m, n_u * (n_u - 1) + n_u + 3 * m * q)
    gblocks, hblocks = _blocks(p), _blocks([q] * m)
    v = [n_u + i for i in range(n)]
    y = [[n_u + 3 * j + t for t in range(3)] for j in range(m)]
    gedges = set(_clique_edges(0, n_u))
    gedges.update((u, v[i]) for i, (s, size) in enumerate(gblocks) for u in range(s, s + size))
    hedges = set(_clique_edges(0, n_u))
    hedges.update((x, yy) for j, (s, size) in enumerate(hblocks) for x in range(s, s + size) for yy in y[j])
    g = Graph(n_u + n, frozenset(gedges))
    h = Graph(n_u + 3 * m, frozenset(hedges))
    certs = {
        "guest_split": {"clique": list(range(n_u)), "independent": v},
        "host_split": {"clique": list(range(n_u)), "independent": [t for ys in y for t in ys]},
    }
    layout = {"gblocks": gblocks, "hblocks": hblocks, "v": v, "y": y}
    return ReductionOutput("split", g, h, inst, certs, layout)


def gen_proper_interval(inst) -> ReductionOutput:
    """Cliques of ``6m^2(a_i+B)`` chained by paths of length ``2m-1``; host cliques of ``24m^2B`` chained by edges."""
    inst = _instance(inst)
    m, B = inst.m, inst.B
    p = [6 * m * m * (x + B) for x in inst.a]
    q = 24 * m * m * B
    n = len(p)
    inner = 2 * m - 2
    n_g = sum(p) + (n - 1) * inner
    _guard(n_g + m * q, sum(s * (s - 1) // 2 for s in p) + m * q * (q - 1) // 2 + n * 2 * m)

    gedges = []
    cliques, paths = [], []
    cursor = 0
    for i, size in enumerate(p):
        if i > 0:
            prev_last = cliques[-1][0] + cliques[-1][1] - 1
            chain = [prev_last] + list(range(cursor, cursor + inner)) + [cursor + inner]
            paths.append(chain[1:-1])
            gedges.extend(zip(chain, chain[1:]))
            cursor += inner
        cliques.append((cursor, size))
        gedges.extend(_clique_edges(cursor, size))
        cursor += size
    g = Graph(n_g, frozenset(gedges))

    hblocks = _blocks([q] * m)
    hedges = [e for s, size in hblocks for e in _clique_edges(s, size)]
    hedges += [(hblocks[j - 1][0] + q - 1, hblocks[j][0]) for j in range(1, m)]
    h = Graph(m * q, frozenset(hedges))
    certs = {"guest_order": list(range(g.n)), "host_order": list(range(h.n)),
             "path_length": 2 * m - 1, "clique_sizes": p, "host_clique_size": q}
    layout = {"gblocks": cliques, "paths": paths, "hblocks": hblocks}
    return ReductionOutput("proper-interval", g, h, inst, certs, layout)


GENERATORS = {
    "linear-forest": gen_linear_forest,
    "union-cliques": gen_union_cliques,
    "cograph": gen_cograph,
    "tree-pw2": gen_trees_pw2,
    "split": gen_split,
    "proper-interval": gen_proper_interval,
}


def generate(tag: str, inst) -> ReductionOutput:
    tag = normalize_tag(tag)
    if tag == "hampath":
        raise ValueError("hampath takes a host graph; use gen_hampath")
    return GENERATORS[tag](inst)


# --- certificates ----------------------------------------------------------------

def check_certificates(out: ReductionOutput) -> bool:
    """Re-check the class claims of a generated pair with the graph-core tests."""
    g, h, c = out.guest, out.host, out.certificates
    if out.tag == "hampath":
        return recognize(g).path
    if out.tag == "linear-forest":
        return recognize(g).linear_forest and recognize(h).linear_forest
    if out.tag == "union-cliques":
        return all(is_complete(x.induced(s)) for x in (g, h) for s in components(x).sets)
    if out.tag == "cograph":
        return all(len(components(x)) == 1 and find_induced_p4(x) is None for x in (g, h))
    if out.tag == "tree-pw2":
        return (
            recognize(g).tree and recognize(h).tree
            and validate_path_decomposition(g, PathDecompositionWitness.of(c["guest_path_decomposition"]), 2)
            and validate_path_decomposition(h, PathDecompositionWitness.of(c["host_path_decomposition"]), 2)
        )
    if out.tag == "split":
        return (
            is_split_partition(g, c["guest_split"]["clique"], c["guest_split"]["independent"])
            and is_split_partition(h, c["host_split"]["clique"], c["host_split"]["independent"])
            and is_split(g) and is_split(h)
        )
    if out.tag == "proper-interval":
        return all(
            len(components(x)) == 1 and is_umbrella_free_order(x, order)
            for x, order in ((g, c["guest_order"]), (h, c["host_order"]))
        )
    raise ValueError(out.tag)


# --- forward-direction witnesses --------------------------------------------------

def construct_witness(out: ReductionOutput, part: ThreePartition) -> list[int]:
    """Surjective homomorphism for ``out`` built from a 3-partition of its instance.

    Within triple ``S_j`` the members are taken in index order; their guest
    blocks fill host block ``j`` consecutively.
    """
    inst = out.instance
    if inst is None or not part.is_valid_for(inst):
        raise InvalidInstanceError("not a 3-partition of the instance")
    lay = out.layout
    gblocks, hblocks = lay["gblocks"], lay["hblocks"]
    f = [-1] * out.guest.n
    # host vertices assigned to each guest block, in fill order
    targets: dict[int, list[int]] = {}
    for j, triple in enumerate(part.triples):
        start = hblocks[j][0]
        for i in sorted(triple):
            size = gblocks[i][1]
            targets[i] = list(range(start, start + size))
            start += size
        assert start == hblocks[j][0] + hblocks[j][1]

    if out.tag == "proper-interval":
        return _route_proper_interval(out, part, targets)

    for i, (s, size) in enumerate(gblocks):
        for t in range(size):
            f[s + t] = targets[i][t]
    if out.tag == "cograph":
        f[lay["v"]] = lay["x"]
    elif out.tag == "tree-pw2":
        f[lay["w"]] = lay["z"]
        for j, triple in enumerate(part.triples):
            for i in triple:
                f[lay["v"][i]] = lay["y"][j]
    elif out.tag == "split":
        for j, triple in enumerate(part.triples):
            for t, i in enumerate(sorted(triple)):
                f[lay["v"][i]] = lay["y"][j][t]
    return f


def _route_proper_interval(out: ReductionOutput, part: ThreePartition, targets) -> list[int]:
    g, h, lay = out.guest, out.host, out.layout
    gblocks, paths = lay["gblocks"], lay["paths"]
    length = 2 * out.instance.m - 1
    f = [-1] * g.n
    s0, size0 = gblocks[0]
    for t in range(size0):
        f[s0 + t] = targets[0][t]
    for i in range(1, len(gblocks)):
        prev_s, prev_size = gblocks[i - 1]
        y = f[prev_s + prev_size - 1]
        chunk = targets[i]
        route = _shortest_path_to(h, y, set(chunk))
        entry = route[-1]
        spare = [x for x in chunk if x != entry]
        route += spare[: length - (len(route) - 1)]
        assert len(route) == length + 1
        for vertex, x in zip(paths[i - 1], route[1:-1]):
            f[vertex] = x
        z = route[-1]
        s, size = gblocks[i]
        f[s] = z
        rest = [x for x in chunk if x != z]
        for t in range(1, size):
            f[s + t] = rest[t - 1]
    return f


def _shortest_path_to(h: Graph, source: int, goal: set[int]) -> list[int]:
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u in goal:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in sorted(h.adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    raise ValueError("goal unreachable")
