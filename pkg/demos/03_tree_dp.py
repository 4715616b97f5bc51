"""
Tree to tree with few host leaves
=================================

The dynamic program keeps, for each guest vertex, a boolean table indexed by
host vertex and subset of host leaves. Its cost grows with 4^k for k host
leaves but only linearly in the guest.
"""

import random
import time

from surjhom.graph import path_graph, star_graph
from surjhom.oracle import verify
from surjhom.random_graphs import random_tree, random_tree_max_leaves
from surjhom.treedp import TreeDP, solve_tree_to_tree

# A claw folds onto P3 with the centre in the middle.
dp = TreeDP(star_graph(3), path_graph(3))
print("host leaves:", dp.leaves)
print("root records (x, leaf mask):", sorted(dp.vertex[0].records()))
print("claw -> P3:", solve_tree_to_tree(star_graph(3), path_graph(3)).mapping)

# A path has no vertex of degree 3 in its image, so it cannot cover a claw.
print("P3 -> claw:", solve_tree_to_tree(path_graph(3), star_graph(3)).verdict.value)

# Larger instances stay fast while the host leaf count is small.
rng = random.Random(1)
for n, m, k in ((500, 20, 3), (2000, 50, 6)):
    g, h = random_tree(n, rng), random_tree_max_leaves(m, k, rng)
    t0 = time.perf_counter()
    r = solve_tree_to_tree(g, h)
    took = time.perf_counter() - t0
    ok = r.mapping is None or verify(g, h, r.mapping)
    print(f"n={n} m={m} leaves<={k}: {r.verdict.value} in {took:.2f}s, witness ok: {ok}")
