"""
Parity-encoded problem circuits
===============================

The problem Hamiltonian of a parity-encoded optimisation problem is a sum of
single-qubit fields and four-body plaquette terms on a square qubit grid.
Each plaquette becomes a five-gate nested circuit. Plaquettes are processed
in four colour groups so that groups run in parallel, and conjugators on the
edge shared by stacked plaquettes cancel.
"""

import numpy as np

from paulidecomp import LhzProblem, build_problem_circuit, grid_depth_report
from paulidecomp.schedule import layered_gates
from paulidecomp.verify import statevector_verify

# one plaquette is just the five-gate circuit
p = LhzProblem(1, 1, np.zeros(4), [[1.0]])
print(build_problem_circuit(p))

# a column of three: the central gates end up in one layer
p = LhzProblem.uniform(3, 1)
c = build_problem_circuit(p)
for k, layer in enumerate(layered_gates(c)):
    print(k, ", ".join(str(g) for g in layer))

# depth does not grow with the grid
rng = np.random.default_rng(3)
print()
print("grid   2q-depth  total  cancelled")
for k in (2, 3, 4, 6):
    rep = grid_depth_report(LhzProblem.random(k, k, rng))
    print(f"{k}x{k}   {rep.two_qubit_depth:8d}  {rep.total_depth:5d}  {rep.cancelled:9d}")

p = LhzProblem.random(2, 3, rng)
print()
print("2x3 grid, state-vector error:", statevector_verify(build_problem_circuit(p), p.terms(), trials=3))
