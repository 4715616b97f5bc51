import pytest
from hypothesis import given, settings

from surjhom.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from surjhom.hardness import gen_linear_forest, validate_multiset
from surjhom.oracle import SearchBudget, check_mapping, enumerate_homs, find_surjective_hom, verify
from surjhom.result import Verdict

from conftest import brute_homs, brute_surjective_exists, graphs


def test_verify_examples():
    assert verify(complete_graph(2), complete_graph(2), [0, 1])
    assert verify(path_graph(3), complete_graph(2), [0, 1, 0])
    assert not verify(path_graph(3), complete_graph(2), [0, 0, 1])


def test_check_mapping_reports_first_defect():
    assert "edge" in check_mapping(path_graph(3), complete_graph(2), [0, 0, 1])
    assert check_mapping(complete_graph(2), complete_graph(3), [0, 1]) == "host vertex 2 is not covered"
    assert check_mapping(path_graph(3), complete_graph(2), [0, 1, 0]) is None


def test_verify_arity_and_range():
    with pytest.raises(ValueError):
        verify(path_graph(3), complete_graph(2), [0, 1])
    with pytest.raises(ValueError):
        verify(path_graph(2), complete_graph(2), [0, 2])


@pytest.mark.parametrize("g, h, answer", [
    (path_graph(3), path_graph(2), True),
    (path_graph(2), path_graph(3), False),
    (cycle_graph(6), cycle_graph(3), True),
    (cycle_graph(4), star_graph(3), False),
])
def test_find_examples(g, h, answer):
    r = find_surjective_hom(g, h)
    assert r.verdict is (Verdict.YES if answer else Verdict.NO)
    assert brute_surjective_exists(g, h) == answer
    if answer:
        assert verify(g, h, r.mapping)


def test_edgeless_guest_onto_host_with_edge():
    # no guest edge to preserve, so any onto map works
    r = find_surjective_hom(empty_graph(2), complete_graph(2))
    assert r.verdict is Verdict.YES


def test_guest_edge_needs_host_edge():
    r = find_surjective_hom(path_graph(3), empty_graph(2))
    assert r.verdict is Verdict.NO


def test_empty_graphs():
    assert find_surjective_hom(empty_graph(0), empty_graph(0)).verdict is Verdict.YES
    assert find_surjective_hom(empty_graph(1), empty_graph(0)).verdict is Verdict.NO


@given(graphs(max_n=6), graphs(max_n=4))
@settings(max_examples=300, deadline=None)
def test_completeness_against_enumeration(g, h):
    r = find_surjective_hom(g, h)
    assert r.verdict is not Verdict.UNKNOWN
    assert (r.verdict is Verdict.YES) == brute_surjective_exists(g, h)
    if r.mapping is not None:
        assert verify(g, h, r.mapping)


@given(graphs(max_n=6), graphs(max_n=4))
@settings(max_examples=100, deadline=None)
def test_deterministic(g, h):
    assert find_surjective_hom(g, h) == find_surjective_hom(g, h)


def test_budget_exhaustion_is_unknown():
    out = gen_linear_forest(validate_multiset([1, 1, 1, 1, 1, 3]))
    r = find_surjective_hom(out.guest, out.host, SearchBudget(max_nodes=5))
    assert r.verdict is Verdict.UNKNOWN
    assert r.mapping is None


@given(graphs(max_n=6), graphs(max_n=4))
@settings(max_examples=100, deadline=None)
def test_tiny_budget_never_wrong(g, h):
    r = find_surjective_hom(g, h, SearchBudget(max_nodes=3))
    if r.verdict is not Verdict.UNKNOWN:
        assert (r.verdict is Verdict.YES) == brute_surjective_exists(g, h)


def test_twin_hosts_still_complete():
    # hosts full of twins exercise the symmetry breaking
    g = disjoint_union(path_graph(3), path_graph(3), path_graph(2))
    h = star_graph(4)
    r = find_surjective_hom(g, h)
    assert (r.verdict is Verdict.YES) == brute_surjective_exists(g, h)


@pytest.mark.parametrize("g, h, count", [
    (empty_graph(1), complete_graph(2), 2),
    (complete_graph(2), complete_graph(2), 2),
    (path_graph(3), path_graph(2), 2),
])
def test_enumerate_examples(g, h, count):
    res = enumerate_homs(g, h)
    assert len(res.homs) == count and not res.truncated
    assert len(list(brute_homs(g, h))) == count


def test_enumerate_cap():
    res = enumerate_homs(empty_graph(3), complete_graph(2), cap=5)
    assert res.truncated and len(res.homs) == 5
    res = enumerate_homs(empty_graph(3), complete_graph(2), cap=8)
    assert not res.truncated and len(res.homs) == 8


@given(graphs(max_n=5), graphs(max_n=3))
@settings(max_examples=150, deadline=None)
def test_enumerate_matches_brute(g, h):
    assert sorted(map(tuple, enumerate_homs(g, h).homs)) == sorted(brute_homs(g, h))


def test_search_result_fields():
    r = find_surjective_hom(cycle_graph(6), cycle_graph(3))
    assert r.algorithm == "oracle" and r.nodes >= 1
    assert set(r.mapping) == {0, 1, 2}
    assert all(isinstance(x, int) for x in r.mapping)
