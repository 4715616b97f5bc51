"""
Complete guests and path hosts
==============================

Two cases need no search. A complete guest maps onto exactly one host, and
onto a path the answer depends only on bipartiteness and component diameters.
"""

from surjhom.graph import complete_graph, cycle_graph, disjoint_union, path_graph
from surjhom.poly import fold_onto_path, solve_complete_guest, solve_path_host
from surjhom.oracle import verify

for host in (complete_graph(3), path_graph(3), complete_graph(4)):
    r = solve_complete_guest(complete_graph(3), host)
    print(f"K3 -> {host}:", r.verdict.value, r.reason or r.mapping)

# Two disjoint edges reach P4: diameters 1 + 1 plus two components.
g = disjoint_union(path_graph(2), path_graph(2))
for ell in range(1, 6):
    r = solve_path_host(g, ell)
    print(f"2P2 -> P{ell}:", r.verdict.value, r.mapping or r.reason)

# The fold sends BFS layers to path positions and bounces at the end.
c8 = cycle_graph(8)
for s in range(2, 6):
    f = fold_onto_path(c8, 0, s)
    print(f"C8 folded onto P{s}:", f, verify(c8, path_graph(s), f))
