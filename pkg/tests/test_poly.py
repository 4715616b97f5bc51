import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surjhom.errors import PreconditionError
from surjhom.graph import (
    complete_graph,
    components,
    cycle_graph,
    diameter,
    disjoint_union,
    eccentricities,
    empty_graph,
    path_graph,
)
from surjhom.oracle import find_surjective_hom, verify
from surjhom.poly import fold_onto_path, solve_complete_guest, solve_path_host, subpath_lengths
from surjhom.random_graphs import random_bipartite_connected
from surjhom.result import Verdict

from conftest import graphs


def test_complete_guest_examples():
    r = solve_complete_guest(complete_graph(3), complete_graph(3))
    assert r.verdict is Verdict.YES and r.mapping == (0, 1, 2)
    r = solve_complete_guest(complete_graph(3), path_graph(3))
    assert r.verdict is Verdict.NO and r.reason == "host not complete"
    r = solve_complete_guest(complete_graph(2), complete_graph(3))
    assert r.verdict is Verdict.NO and r.reason == "size mismatch"


def test_complete_guest_precondition():
    with pytest.raises(PreconditionError):
        solve_complete_guest(path_graph(3), path_graph(3))


@pytest.mark.parametrize("n", range(1, 6))
@given(h=graphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_complete_guest_agrees_with_oracle(n, h):
    g = complete_graph(n)
    assert solve_complete_guest(g, h).verdict == find_surjective_hom(g, h).verdict


@pytest.mark.parametrize("g, ell, answer", [
    (path_graph(4), 4, True),
    (cycle_graph(3), 2, False),
    (empty_graph(3), 1, True),
    (disjoint_union(path_graph(2), path_graph(2)), 4, True),
    (path_graph(2), 4, False),
])
def test_path_host_examples(g, ell, answer):
    r = solve_path_host(g, ell)
    assert r.verdict is (Verdict.YES if answer else Verdict.NO)
    assert (find_surjective_hom(g, path_graph(ell)).verdict is Verdict.YES) == answer
    if answer:
        assert verify(g, path_graph(ell), r.mapping)


def test_path_host_reasons():
    assert solve_path_host(cycle_graph(3), 2).reason == "not bipartite"
    assert solve_path_host(path_graph(4), 5).reason == "guest smaller than host"
    assert solve_path_host(disjoint_union(path_graph(2), path_graph(2)), 4).verdict is Verdict.YES
    assert solve_path_host(path_graph(2), 1).reason == "guest has an edge"


def test_path_host_precondition():
    with pytest.raises(PreconditionError):
        solve_path_host(path_graph(2), 0)


@given(graphs(max_n=7), st.integers(1, 6))
@settings(max_examples=300, deadline=None)
def test_path_host_agrees_with_oracle(g, ell):
    r = solve_path_host(g, ell)
    o = find_surjective_hom(g, path_graph(ell))
    assert r.verdict == o.verdict
    if r.mapping is not None:
        assert verify(g, path_graph(ell), r.mapping)


@given(st.integers(0, 10**6), st.integers(1, 10), st.floats(0, 0.5))
@settings(max_examples=200, deadline=None)
def test_fold_is_surjective_hom_onto_subpath(seed, n, p):
    f_graph = random_bipartite_connected(n, p, random.Random(seed))
    d = diameter(f_graph)
    ecc = eccentricities(f_graph)
    base = ecc.index(d)
    for s in range(min(1, d) + 1, d + 2):
        f = fold_onto_path(f_graph, base, s)
        assert verify(f_graph, path_graph(s), f)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5), st.integers(1, 30))
def test_subpath_lengths_bounds(diams, ell):
    lengths = subpath_lengths(diams, ell)
    for d, s in zip(diams, lengths):
        assert min(1, d) + 1 <= s <= d + 1
    if sum(diams) + len(diams) >= ell:
        assert sum(lengths) >= ell or all(s == d + 1 for d, s in zip(diams, lengths))


def test_components_drive_diameter_sum():
    g = disjoint_union(path_graph(3), path_graph(1), cycle_graph(4))
    diams = [diameter(g.induced(c)) for c in components(g).sets]
    assert diams == [2, 0, 2]
    assert solve_path_host(g, 7).verdict is Verdict.YES
    assert solve_path_host(g, 8).verdict is Verdict.NO
