"""Independent dense-matrix oracles shared by the tests.

Nothing here calls into the package's simulators: Pauli matrices are built
with ``np.kron`` from letters. Exponentials use ``scipy.linalg.expm`` up to
``EXPM_LIMIT`` qubits and the closed form ``cos t + i sin t P`` (exact since
``P @ P = 1``) above it; the two are cross-checked in ``test_oracles.py``.
"""

from functools import reduce

import numpy as np
import pytest
from scipy.linalg import expm

from paulidecomp import Circuit, PauliString

SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


EXPM_LIMIT = 6


def dense(p: PauliString) -> np.ndarray:
    return p.scalar * reduce(np.kron, [SINGLE[ch] for ch in p.letters])


def dense_letters(letters: str) -> np.ndarray:
    return reduce(np.kron, [SINGLE[ch] for ch in letters])


def cnot_matrix(n: int, control: int, target: int) -> np.ndarray:
    p0 = np.diag([1, 0]).astype(complex)
    p1 = np.diag([0, 1]).astype(complex)
    a = [SINGLE["I"]] * n
    b = [SINGLE["I"]] * n
    a[control] = p0
    b[control] = p1
    b[target] = SINGLE["X"]
    return reduce(np.kron, a) + reduce(np.kron, b)


def oracle_unitary(c: Circuit, gamma: float, name: str = "gamma") -> np.ndarray:
    """Dense unitary of a circuit via expm, gates applied in list order."""
    u = np.eye(1 << c.n, dtype=complex)
    for g in c.gates:
        if g.is_cnot:
            m = cnot_matrix(c.n, *g.qubits)
        else:
            theta = g.angle.bind({name: gamma})
            m = oracle_target(g.generator(c.n), theta)
        u = m @ u
    return u


def oracle_target(p: PauliString, gamma: float) -> np.ndarray:
    if p.n <= EXPM_LIMIT:
        return expm(1j * gamma * dense(p))
    return closed_form(p, gamma)


def closed_form(p: PauliString, gamma: float) -> np.ndarray:
    return np.cos(gamma) * np.eye(1 << p.n) + 1j * np.sin(gamma) * dense(p)


def random_pauli(rng: np.random.Generator, n: int, letters: str = "IXYZ", sign: bool = True) -> PauliString:
    chars = "".join(rng.choice(list(letters), n))
    return PauliString.from_letters(chars, int(rng.choice([1, -1])) if sign else 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20241017)


def random_circuit(rng: np.random.Generator, n: int, length: int, cnots: bool = True) -> Circuit:
    """Random circuit drawn from a small gate pool so that repeated
    generators, inverse pairs and commuting neighbours are all common."""
    from fractions import Fraction

    from paulidecomp import Angle, Gate

    pool = []
    for _ in range(max(3, length // 3)):
        if n > 1 and rng.random() < 0.75:
            a, b = (int(v) for v in rng.choice(n, 2, replace=False))
            pool.append(((a, b), "".join(rng.choice(list("XYZ"), 2))))
        else:
            pool.append(((int(rng.integers(n)),), str(rng.choice(list("XYZ")))))
    gates = []
    for _ in range(length):
        if cnots and n > 1 and rng.random() < 0.1:
            a, b = (int(v) for v in rng.choice(n, 2, replace=False))
            gates.append(Gate.cnot(a, b))
            continue
        qubits, letters = pool[rng.integers(len(pool))]
        if rng.random() < 0.7:
            angle = Angle.fixed(Fraction(int(rng.choice([-2, -1, 1, 2])), 4))
        else:
            angle = Angle.param("gamma", int(rng.choice([1, -1])), float(rng.choice([1.0, 0.5, 2.0])))
        gates.append(Gate(qubits, letters, angle))
    return Circuit(n, gates)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
