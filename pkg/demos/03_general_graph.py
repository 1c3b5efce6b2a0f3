"""
Arbitrary hardware graphs
=========================

For a general coupling graph the decomposer roots a spanning tree in the
middle of a longest shortest path and peels the tree one generation at a
time, leaves first. Each generation costs one layer on each side of the
central gate.

The lower bound on depth depends only on the diameter d: d for odd d and
d + 1 for even d. Trees built this way reach it whenever some node (or edge)
is within ceil(d/2) hops of everything. Cycles are the classic exception.
"""

import numpy as np

from paulidecomp import PauliString, assign_layers, build_spanning_plan, decompose, two_qubit_depth
from paulidecomp.graph import (
    branched_graph_15,
    cycle_graph,
    depth_lower_bound,
    diameter,
    radius_bound_met,
    random_connected_graph,
)
from paulidecomp.verify import symbolic_verify


def report(name, g):
    p = PauliString.from_letters("Z" * g.n)
    c = assign_layers(decompose(p, g))
    d = diameter(g)[0]
    print(
        f"{name:>12}: n={g.n:2d} d={d} bound={depth_lower_bound(d)} "
        f"depth={two_qubit_depth(c)} gates={len(c)} exact={symbolic_verify(c, p)}"
    )


g = branched_graph_15()
plan = build_spanning_plan(g)
print("seed path:", plan.seed_path, "root:", plan.root)
print("generations (farthest first):", plan.generations)
report("branched", g)
report("cycle C9", cycle_graph(9))

rng = np.random.default_rng(5)
for k in range(5):
    g = random_connected_graph(int(rng.integers(8, 24)), rng)
    report(f"random {k}", g)

# how often does the bound hold on this random model?
rng = np.random.default_rng(0)
graphs = [random_connected_graph(int(rng.integers(2, 33)), rng) for _ in range(200)]
print("graphs with a half-diameter centre:", sum(radius_bound_met(g) for g in graphs), "of", len(graphs))
