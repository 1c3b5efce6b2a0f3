"""
Pauli strings and quarter-turn conjugation
==========================================

Everything the decomposer does reduces to one identity: conjugating a Pauli
string P by exp(i pi/4 O) either leaves it alone (O and P commute) or turns it
into i*O*P (they anticommute). This script walks through the bit-mask
representation and checks that identity against dense matrices.
"""

from functools import reduce

import numpy as np

from paulidecomp import PauliString, commutes, conjugate_by_quarter_rotation, residual

P = PauliString.from_str

# strings are stored as two bit masks plus a power of i
p = P("ZZZZ")
o = P("ZXII")
print("P =", p, " O =", o, " commute?", commutes(o, p))

# the product keeps its phase exactly
print("O*P =", o * p)

# peel qubit 0 off P: h is what is left, sign is absorbed into the centre
h, sign = residual(o, p)
print("residual:", h, "sign", sign)
print("conjugating h back gives", conjugate_by_quarter_rotation(o, h), "= sign * P")

# the same statement with 16x16 matrices
mats = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}


def dense(q):
    return q.scalar * reduce(np.kron, [mats[c] for c in q.letters])


u = np.cos(np.pi / 4) * np.eye(16) + 1j * np.sin(np.pi / 4) * dense(o)
lhs = u @ dense(h) @ u.conj().T
print("dense check:", np.allclose(lhs, sign * dense(p)))
