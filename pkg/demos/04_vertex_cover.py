"""
Small vertex covers and transport systems
=========================================

When both graphs have small vertex covers, vertices outside the cover fall
into a few classes of identical neighbourhoods. Choosing which guest classes
go to which host classes leaves an integer transport problem, solved here
as a max-flow.
"""

from surjhom.graph import cycle_graph, min_vertex_cover, path_graph, star_graph
from surjhom.vcfpt import TransportSystem, build_classes, enumerate_supports, feasibility, solve_vc

g, h = cycle_graph(4), path_graph(3)
gp = build_classes(g, min_vertex_cover(g, 3))
hp = build_classes(h, min_vertex_cover(h, 3))
print("guest classes:", gp.classes)
print("host classes:", hp.classes)

supports = list(enumerate_supports(gp, hp))
print("maximal compatible supports:")
for s in supports:
    print("  ", sorted(s))

# The transport kernel on its own: rows are exact, columns are lower bounds.
ts = TransportSystem(rows=(2, 3), cols=(1, 1, 2), allowed=frozenset({(0, 0), (0, 1), (1, 1), (1, 2)}))
print("transport solution:", feasibility(ts))

for host in (path_graph(3), star_graph(3)):
    r = solve_vc(g, host, 3)
    print(f"C4 -> {host}:", r.verdict.value, r.mapping)
