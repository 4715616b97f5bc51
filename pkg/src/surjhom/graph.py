"""Simple undirected graphs on vertices ``0..n-1`` and structural queries."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    SelfLoopError,
    VertexRangeError,
)

INF = math.inf


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Vertices are the dense indices ``0..n-1``; ``edges`` holds each edge once
    as an ordered pair ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {(u, v)} for n={self.n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalising edge orientation.

        Self-loops and repeated edges raise ``ValueError``.
        """
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        es = set()
        for v in vertices:
            for w in self.adj[v]:
                if w in index and index[v] < index[w]:
                    es.add((index[v], index[w]))
        return Graph(len(vertices), frozenset(es))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# --- constructors -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    es = []
    for g in graphs:
        es.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(es))


# --- file format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Read the line-oriented graph format.

    ``# comment`` and blank lines are ignored; exactly one ``n <count>``
    header must precede the ``e <u> <v>`` edge lines. Edges may be written in
    either orientation but must not repeat.
    """
    n = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise MalformedLineError("second header line", lineno)
            if len(parts) != 2:
                raise MalformedLineError(f"expected 'n <count>', got {line!r}", lineno)
            n = _parse_int(parts[1], lineno)
            if n < 0:
                raise MalformedLineError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise MalformedLineError("edge before header", lineno)
            if len(parts) != 3:
                raise MalformedLineError(f"expected 'e <u> <v>', got {line!r}", lineno)
            u, v = _parse_int(parts[1], lineno), _parse_int(parts[2], lineno)
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexRangeError(f"vertex {x} out of range 0..{n - 1}", lineno)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}", lineno)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e[0]} {e[1]}", lineno)
            seen.add(e)
        else:
            raise MalformedLineError(f"unknown line {line!r}", lineno)
    if n is None:
        raise MalformedLineError("missing 'n <count>' header")
    return Graph(n, frozenset(seen))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedLineError(f"not an integer: {tok!r}", lineno) from None


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# --- components and distances -----------------------------------------------

@dataclass(frozen=True)
class ComponentDecomposition:
    labels: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.sets)


def components(g: Graph) -> ComponentDecomposition:
    """Connected components, numbered by their smallest vertex."""
    labels = [-1] * g.n
    sets = []
    for s in range(g.n):
        if labels[s] != -1:
            continue
        cid = len(sets)
        labels[s] = cid
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if labels[w] == -1:
                    labels[w] = cid
                    members.append(w)
                    queue.append(w)
        sets.append(tuple(sorted(members)))
    return ComponentDecomposition(tuple(labels), tuple(sets))


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path edge counts from ``source``; ``INF`` if unreachable."""
    if not 0 <= source < g.n:
        raise IndexError(source)
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_to_set(g: Graph, u: int, targets: Iterable[int]) -> float:
    dist = bfs_distances(g, u)
    return min((dist[t] for t in targets), default=INF)


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex of a connected graph."""
    out = []
    for u in range(g.n):
        m = max(bfs_distances(g, u))
        if m == INF:
            raise ValueError("graph is disconnected")
        out.append(int(m))
    return out


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    return max(eccentricities(g))


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, colouring)`` with a proper 0/1 colouring, or ``(False, None)``."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False, None
    return True, colour


# --- class recognition ---------------------------------------------------------

@dataclass(frozen=True)
class GraphClasses:
    complete: bool
    path: bool
    linear_forest: bool
    tree: bool
    forest: bool
    split: bool
    cograph: bool
    connected: bool


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def is_split(g: Graph) -> bool:
    """Degree-sequence test of Hammer and Simeone."""
    deg = sorted((g.degree(u) for u in range(g.n)), reverse=True)
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    return sum(deg[:m]) == m * (m - 1) + sum(deg[m:])


def find_induced_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """Some induced path a-b-c-d, or None if ``g`` is a cograph."""
    for b, c in g.sorted_edges():
        for b_, c_ in ((b, c), (c, b)):
            nb, nc = g.adj[b_], g.adj[c_]
            for a in sorted(nb - nc - {c_}):
                for d in sorted(nc - nb - {b_}):
                    if d not in g.adj[a]:
                        return a, b_, c_, d
    return None


def recognize(g: Graph) -> GraphClasses:
    comps = components(g)
    connected = len(comps) <= 1
    forest = g.num_edges == g.n - len(comps)
    max_deg = max((g.degree(u) for u in range(g.n)), default=0)
    linear = forest and max_deg <= 2
    tree = forest and connected and g.n >= 1
    return GraphClasses(
        complete=is_complete(g),
        path=linear and connected and g.n >= 1,
        linear_forest=linear,
        tree=tree,
        forest=forest,
        split=is_split(g),
        cograph=find_induced_p4(g) is None,
        connected=connected,
    )


def path_order(g: Graph) -> list[int] | None:
    """Vertices of a path graph in path order (from the smaller end), else None."""
    if g.n == 0 or not recognize_path(g):
        return None
    if g.n == 1:
        return [0]
    ends = [u for u in range(g.n) if g.degree(u) == 1]
    order = [min(ends)]
    prev = -1
    while len(order) < g.n:
        u = order[-1]
        nxt = [w for w in g.adj[u] if w != prev]
        prev = u
        order.append(nxt[0])
    return order


def recognize_path(g: Graph) -> bool:
    if g.n == 0 or g.num_edges != g.n - 1:
        return False
    if any(g.degree(u) > 2 for u in range(g.n)):
        return False
    return len(components(g)) == 1


# --- vertex cover -----------------------------------------------------------

@dataclass(frozen=True)
class VertexCoverWitness:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def covers(self, g: Graph) -> bool:
        s = set(self.vertices)
        return all(u in s or v in s for u, v in g.edges)


def min_vertex_cover(g: Graph, k: int) -> VertexCoverWitness | None:
    """Minimum vertex cover if its size is at most ``k``, else None.

    Iterative deepening over a bounded search tree that branches on the two
    endpoints of the first uncovered edge; vertices whose degree in the
    remaining graph exceeds the budget are forced.
    """
    if k < 0:
        raise ValueError("budget must be nonnegative")
    edges = g.sorted_edges()
    for budget in range(k + 1):
        if _matching_lower_bound(edges) > budget:
            continue
        found = _vc_branch(g, edges, budget, frozenset())
        if found is not None:
            w = VertexCoverWitness(tuple(sorted(found)))
            assert w.covers(g)
            return w
    return None


def _matching_lower_bound(edges: list[tuple[int, int]]) -> int:
    used: set[int] = set()
    size = 0
    for u, v in edges:
        if u not in used and v not in used:
            used.update((u, v))
            size += 1
    return size


def _vc_branch(g, edges, budget, chosen):
    rest = [(u, v) for u, v in edges if u not in chosen and v not in chosen]
    if not rest:
        return chosen
    if budget == 0 or _matching_lower_bound(rest) > budget:
        return None
    deg: dict[int, int] = {}
    for u, v in rest:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    forced = sorted(u for u, d in deg.items() if d > budget)
    if forced:
        if len(forced) > budget:
            return None
        return _vc_branch(g, rest, budget - len(forced), chosen | set(forced))
    u, v = rest[0]
    for pick in (u, v):
        found = _vc_branch(g, rest, budget - 1, chosen | {pick})
        if found is not None:
            return found
    return None


# --- decompositions and orderings ------------------------------------------------

@dataclass(frozen=True)
class PathDecompositionWitness:
    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, bags: Iterable[Iterable[int]]) -> "PathDecompositionWitness":
        return cls(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def validate_path_decomposition(g: Graph, w: PathDecompositionWitness, width: int) -> bool:
    bags = w.bags
    if not bags:
        return g.n == 0
    if set().union(*bags) != set(range(g.n)):
        return False
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    count: dict[int, int] = {}
    for i, bag in enumerate(bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
            count[v] = count.get(v, 0) + 1
    if any(last[v] - first[v] + 1 != count[v] for v in count):
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in bags[max(first[u], first[v]):min(last[u], last[v]) + 1]):
            return False
    return w.width <= width


def is_umbrella_free_order(g: Graph, order: Sequence[int]) -> bool:
    """True iff every closed neighbourhood is a contiguous block of ``order``.

    Such an ordering exists exactly for proper interval graphs.
    """
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in range(g.n):
        ps = [pos[w] for w in g.adj[v]] + [pos[v]]
        if max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def is_split_partition(g: Graph, clique: Iterable[int], independent: Iterable[int]) -> bool:
    clique, independent = set(clique), set(independent)
    if clique & independent or clique | independent != set(range(g.n)):
        return False
    if any(not g.has_edge(u, v) for u, v in itertools.combinations(sorted(clique), 2)):
        return False
    return all(not (g.adj[u] & independent) for u in independent)
