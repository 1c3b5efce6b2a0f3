"""
Against the CNOT ladder
=======================

The textbook circuit for exp(i gamma Z...Z) collects the parity with a CNOT
ladder, rotates one qubit, and uncomputes. Running the ladder in from both
ends shortens it, but the nested construction is shallower still.
"""

from paulidecomp import PauliString, assign_layers, cnot_baseline, decompose_path, two_qubit_depth
from paulidecomp.verify import numeric_verify

print(" n  ladder  x-shaped  nested")
for n in range(2, 11):
    p = PauliString.from_letters("Z" * n)
    row = [two_qubit_depth(assign_layers(c)) for c in (
        cnot_baseline(p, "ladder"), cnot_baseline(p, "x_shaped"), decompose_path(p, range(n))
    )]
    print(f"{n:2d}  {row[0]:6d}  {row[1]:8d}  {row[2]:6d}")

# both baselines are exact too
p = PauliString.from_str("XYZYX")
for variant in ("ladder", "x_shaped"):
    print(variant, "error:", numeric_verify(cnot_baseline(p, variant), p, [0.2, 0.9]))
