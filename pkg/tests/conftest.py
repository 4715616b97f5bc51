import itertools

import pytest
from hypothesis import strategies as st

from surjhom.graph import Graph


def brute_homs(g: Graph, h: Graph):
    """Every edge-preserving map, by plain enumeration of |V_H|^|V_G| tuples."""
    for f in itertools.product(range(h.n), repeat=g.n):
        if all(h.has_edge(f[u], f[v]) for u, v in g.edges):
            yield f


def brute_surjective_exists(g: Graph, h: Graph) -> bool:
    return any(set(f) == set(range(h.n)) for f in brute_homs(g, h))


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Graph.from_edges(n, [(p, i) for i, p in zip(range(1, n), parents)])


@pytest.fixture
def announce(capsys):
    """Print a line straight to the terminal, bypassing capture."""
    def _print(line: str) -> None:
        with capsys.disabled():
            print(f"\n{line}")
    return _print
