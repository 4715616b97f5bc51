"""
Deciding surjective homomorphisms by search
===========================================

The oracle is a backtracking search over guest vertices. A YES carries a
verified witness. When the budget runs out the answer is UNKNOWN, never a guess.
"""

from surjhom.graph import cycle_graph, path_graph, star_graph
from surjhom.oracle import SearchBudget, enumerate_homs, find_surjective_hom, verify
from surjhom.hardness import gen_linear_forest

# A 6-cycle wraps twice around a triangle.
r = find_surjective_hom(cycle_graph(6), cycle_graph(3))
print("C6 -> C3:", r.verdict.value, r.mapping)
assert verify(cycle_graph(6), cycle_graph(3), r.mapping)

# A 4-cycle has too few vertices of each colour to cover a claw.
print("C4 -> K_1,3:", find_surjective_hom(cycle_graph(4), star_graph(3)).verdict.value)

# enumerate_homs lists every edge-preserving map, surjective or not.
homs = enumerate_homs(path_graph(3), path_graph(2))
print("homomorphisms P3 -> P2:", homs.homs)

# A tiny node budget on a hard instance gives UNKNOWN rather than a guess.
hard = gen_linear_forest([1, 1, 1, 1, 1, 3])
r = find_surjective_hom(hard.guest, hard.host, SearchBudget(max_nodes=10))
print("budgeted search:", r.verdict.value)
r = find_surjective_hom(hard.guest, hard.host)
print("unbudgeted search:", r.verdict.value, "after", r.nodes, "nodes")
