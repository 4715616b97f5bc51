"""
Cross-validating every solver
=============================

Each bench suite runs one solver on seeded random instances and compares it
with an independent check. The digest summarises every verdict and witness,
so two runs with the same seed can be compared at a glance.
"""

from surjhom.bench import run_bench

for report in run_bench(seed=0, scale=0.2, only={"oracle", "path-host", "tree-dp", "vc", "feasibility"}):
    print(report.line())
