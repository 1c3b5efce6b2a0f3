"""
Paths and stars
===============

On a path of n qubits the nested circuit uses 2n-3 two-qubit gates. Where the
central gate sits decides the depth: in the middle the two conjugator chains
run side by side, at the end they run one after the other. On a star every
conjugator shares the hub with the same letter, so they all commute and the
whole circuit fits in three layers.
"""

import numpy as np

from paulidecomp import PauliString, assign_layers, decompose_path, decompose_star, two_qubit_depth
from paulidecomp.graph import star_graph
from paulidecomp.verify import numeric_verify

print(" n   gates  depth(middle)  depth(end)")
for n in range(2, 11):
    p = PauliString.from_letters("Z" * n)
    mid = decompose_path(p, range(n))
    end = decompose_path(p, range(n), m=1)
    print(f"{n:2d}   {len(mid):5d}  {two_qubit_depth(assign_layers(mid)):13d}  {two_qubit_depth(assign_layers(end)):10d}")

# a six-qubit path with mixed letters, checked against the dense exponential
p = PauliString.from_str("XYZZYX")
c = assign_layers(decompose_path(p, range(6)))
print()
print(c)
print("layers:", c.layers)
print("max error:", numeric_verify(c, p, np.linspace(-1, 1, 5)))

# stars stay at depth three however many leaves there are
print()
for n in (4, 8, 12):
    p = PauliString.from_letters("X" * n)
    c = decompose_star(p, 0, range(1, n), star_graph(n))
    print(f"star n={n:2d}: {len(c)} gates, depth {two_qubit_depth(assign_layers(c))}")
