import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surjhom.errors import PreconditionError
from surjhom.graph import Graph, cycle_graph, path_graph, star_graph
from surjhom.oracle import find_surjective_hom, verify
from surjhom.poly import solve_path_host
from surjhom.random_graphs import random_tree, random_tree_max_leaves
from surjhom.result import Verdict
from surjhom.treedp import DpTable, TreeDP, edge_table, host_leaves, merge_tables, solve_tree_to_tree

from conftest import brute_homs, trees


@pytest.mark.parametrize("g, h, answer", [
    (path_graph(3), path_graph(2), True),
    (star_graph(3), path_graph(3), True),
    (path_graph(3), star_graph(3), False),
    (Graph.from_edges(1, []), Graph.from_edges(1, []), True),
])
def test_solve_examples(g, h, answer):
    r = solve_tree_to_tree(g, h)
    assert r.verdict is (Verdict.YES if answer else Verdict.NO)
    assert (find_surjective_hom(g, h).verdict is Verdict.YES) == answer
    if answer:
        assert verify(g, h, r.mapping)


def test_single_vertex_host_with_guest_edge():
    assert solve_tree_to_tree(path_graph(2), Graph.from_edges(1, [])).verdict is Verdict.NO


def test_preconditions():
    with pytest.raises(PreconditionError):
        solve_tree_to_tree(cycle_graph(3), path_graph(2))
    with pytest.raises(PreconditionError):
        solve_tree_to_tree(path_graph(3), Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(PreconditionError):
        solve_tree_to_tree(Graph.from_edges(0, []), path_graph(2))


def test_edge_table_example():
    h = path_graph(2)
    leaves, bits = host_leaves(h)
    assert leaves == [0, 1] and bits == [1, 2]
    child = DpTable.from_records(("vertex", 1), 2, 2, [(0, 0b01)])
    out = edge_table(child, h, bits)
    # neighbour rule: (1, {leaf0}); leaf rule at x=1: (1, {leaf0, leaf1})
    assert out.records() == {(1, 0b01), (1, 0b11)}


def test_edge_table_empty_child():
    h = path_graph(3)
    _, bits = host_leaves(h)
    assert len(edge_table(DpTable.from_records(("v",), 3, 2, []), h, bits)) == 0


def test_edge_table_host_k1():
    h = Graph.from_edges(1, [])
    child = DpTable.from_records(("v",), 1, 0, [(0, 0)])
    assert len(edge_table(child, h, [0])) == 0


def test_merge_examples():
    a, b = 0b01, 0b10
    t = lambda recs: DpTable.from_records(("aux",), 3, 2, recs)
    assert merge_tables(t([(0, a)]), t([(0, b)])).records() == {(0, a | b)}
    assert merge_tables(t([(0, a)]), t([(1, b)])).records() == set()
    assert merge_tables(t([(0, 0), (0, a)]), t([(0, a)])).records() == {(0, a)}


@given(st.integers(0, 3), st.integers(1, 4), st.data())
def test_merge_matches_pairwise_union(m_extra, k, data):
    m = 1 + m_extra
    recs = st.lists(st.tuples(st.integers(0, m - 1), st.integers(0, (1 << k) - 1)), max_size=12)
    a_recs, b_recs = data.draw(recs), data.draw(recs)
    a = DpTable.from_records(("a",), m, k, a_recs)
    b = DpTable.from_records(("b",), m, k, b_recs)
    expected = {(x, s | t) for x, s in a_recs for y, t in b_recs if x == y}
    assert merge_tables(a, b).records() == expected


def _subtree(dp, u):
    out, stack = [], [u]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(dp.children[v])
    return sorted(out)


def _expected_records(dp, u):
    g, h = dp.g, dp.h
    verts = _subtree(dp, u)
    sub = g.induced(verts)
    pos = verts.index(u)
    found = set()
    for f in brute_homs(sub, h):
        image = 0
        for x in f:
            image |= dp.bits[x]
        # every subset of the covered leaves is a valid S
        s = image
        while True:
            found.add((f[pos], s))
            if s == 0:
                break
            s = (s - 1) & image
    return found


@given(trees(max_n=6), trees(min_n=2, max_n=5))
@settings(max_examples=80, deadline=None)
def test_table_semantics(g, h):
    dp = TreeDP(g, h)
    for u in range(g.n):
        assert dp.vertex[u].records() == _expected_records(dp, u)
        assert len(dp.vertex[u]) <= h.n * (1 << dp.k)


@given(trees(max_n=7), trees(max_n=5))
@settings(max_examples=150, deadline=None)
def test_agrees_with_oracle(g, h):
    r = solve_tree_to_tree(g, h)
    assert r.verdict == find_surjective_hom(g, h).verdict
    if r.mapping is not None:
        assert verify(g, h, r.mapping)


@given(trees(max_n=8), st.integers(1, 6))
@settings(max_examples=150, deadline=None)
def test_three_way_agreement_with_path_hosts(g, ell):
    assert solve_tree_to_tree(g, path_graph(ell)).verdict == solve_path_host(g, ell).verdict


def test_witness_on_medium_instance():
    rng = random.Random(7)
    g = random_tree(300, rng)
    h = random_tree_max_leaves(20, 4, rng)
    r = solve_tree_to_tree(g, h)
    if r.mapping is not None:
        assert verify(g, h, r.mapping)


def test_tables_are_boolean_arrays():
    dp = TreeDP(star_graph(3), path_graph(3))
    t = dp.vertex[0]
    assert t.data.dtype == np.bool_ and t.data.shape == (3, 4)
    assert dp.accepting_host_vertex() == 1
