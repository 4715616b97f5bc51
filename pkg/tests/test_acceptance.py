"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import random
import time

import pytest

from surjhom import bench
from surjhom.graph import recognize
from surjhom.oracle import verify
from surjhom.random_graphs import random_tree, random_tree_max_leaves
from surjhom.treedp import host_leaves, solve_tree_to_tree

SEED = 0


def _gate(announce, number, title, ok, seconds, limit, detail=""):
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    announce(f"{status} criterion {number} [{title}]: {detail} in {seconds:.2f}s{budget}")
    assert ok, detail
    assert within, f"took {seconds:.2f}s, limit {limit}s"


def _run_suite(fn, *args, **kwargs):
    t0 = time.perf_counter()
    rep = fn(*args, **kwargs)
    return rep, time.perf_counter() - t0


def _summary(rep):
    text = f"{rep.checked} checked, {len(rep.failures)} disagreements"
    if rep.failures:
        text += f"; first: {rep.failures[0]}"
    return text


def test_c01_oracle_completeness(announce):
    rep, dt = _run_suite(bench.suite_oracle, SEED, count=2000)
    _gate(announce, 1, "oracle vs exhaustive enumeration", rep.ok and rep.checked == 2000, dt, 60, _summary(rep))


def test_c02_complete_guest(announce):
    rep, dt = _run_suite(bench.suite_complete_guest, SEED)
    # K_2..K_5 against the 52 graphs on 1..5 vertices
    _gate(announce, 2, "complete guests vs oracle", rep.ok and rep.checked == 4 * 52, dt, 10, _summary(rep))


def test_c03_path_host(announce):
    rep, dt = _run_suite(bench.suite_path_host, SEED, count=500)
    _gate(announce, 3, "path hosts P_1..P_6 vs oracle", rep.ok and rep.checked == 3000, dt, 60, _summary(rep))


def test_c04_tree_dp_table_semantics(announce):
    rep, dt = _run_suite(bench.suite_tree_dp, SEED, count=200)
    _gate(announce, 4, "tree DP tables and verdicts", rep.ok and rep.checked == 200, dt, 120, _summary(rep))


def test_c05_tree_dp_scaling(announce):
    rng = random.Random(SEED)
    g = random_tree(2000, rng)
    h = random_tree_max_leaves(50, 6, rng)
    k = len(host_leaves(h)[0])
    assert recognize(g).tree and recognize(h).tree and k <= 6
    t0 = time.perf_counter()
    r = solve_tree_to_tree(g, h)
    dt = time.perf_counter() - t0
    ok = r.mapping is None or verify(g, h, r.mapping)
    _gate(announce, 5, "tree DP n=2000, m=50", ok, dt, 10, f"k={k}, verdict {r.verdict.value}")


def test_c06_vertex_cover(announce):
    rep, dt = _run_suite(bench.suite_vc, SEED, count=500, k=3)
    _gate(announce, 6, "vertex-cover algorithm vs oracle", rep.ok and rep.checked == 500, dt, 120, _summary(rep))


def test_c07_feasibility(announce):
    rep, dt = _run_suite(bench.suite_feasibility, SEED, count=1000)
    _gate(announce, 7, "flow feasibility vs enumeration", rep.ok and rep.checked == 1000, dt, 30, _summary(rep))


@pytest.mark.slow
def test_c08_hardness_equivalence(announce):
    rep, dt = _run_suite(bench.suite_hardness, SEED, max_m=2, max_B=6, seconds_per_instance=60.0)
    expected = sum(1 for _ in bench.desk_multisets(2, 6)) * 6
    _gate(announce, 8, "3-partition equivalence at desk scale", rep.ok and rep.checked == expected,
          dt, None, _summary(rep))


def test_c09_hamiltonian_path(announce):
    rep, dt = _run_suite(bench.suite_hampath, SEED)
    # connected graphs on 1..6 vertices: 1 + 1 + 2 + 6 + 21 + 112
    _gate(announce, 9, "Hamiltonian path reduction", rep.ok and rep.checked == 143, dt, 60, _summary(rep))


@pytest.mark.slow
def test_c10_determinism(announce):
    t0 = time.perf_counter()
    first = [r.line() for r in bench.run_bench(seed=SEED)]
    second = [r.line() for r in bench.run_bench(seed=SEED)]
    dt = time.perf_counter() - t0
    ok = first == second and all(line.startswith("PASS") for line in first)
    _gate(announce, 10, "repeated suites are identical", ok, dt, None,
          f"{len(first)} suites, digests {'match' if first == second else 'differ'}")
