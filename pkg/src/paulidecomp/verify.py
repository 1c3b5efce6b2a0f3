"""Correctness checks for emitted circuits.

Three routes are available:

* :func:`symbolic_verify` folds the conjugation palindrome exactly with the
  Pauli algebra; no floating point.
* :func:`numeric_verify` builds the dense unitary (``n <= 12``).
* :func:`statevector_verify` applies the circuit to random states
  (``n <= 20``) and compares with the target exponentials.

The simulators use the exact identity ``exp(i t P) = cos t + i sin t P`` and
apply ``P`` as a signed bit-flip permutation, so no matrix exponential is
ever taken. Basis index convention: qubit 0 is the most significant bit,
matching ``np.kron(q0, q1, ...)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .circuit import QUARTER, Circuit, Gate
from .errors import DimensionError, InvalidOperatorError, ShapeError
from .pauli import PauliString, conjugate_by_quarter_rotation
from .schedule import circuit_stats

DENSE_LIMIT = 12
STATEVECTOR_LIMIT = 20
TOLERANCE = 1e-9

Terms = Sequence[tuple[float, PauliString]]
Target = Union[PauliString, Terms]

_I_POWERS = np.array([1, 1j, -1, -1j])


# -- state-vector engine ------------------------------------------------------


def _index_mask(mask: int, n: int) -> int:
    """Move qubit ``j`` (bit ``j``) to basis-index bit ``n-1-j``."""
    out = 0
    for j in range(n):
        if (mask >> j) & 1:
            out |= 1 << (n - 1 - j)
    return out


def pauli_action(state: np.ndarray, p: PauliString) -> np.ndarray:
    """Return ``P @ state``; ``state`` has the 2**n basis index on axis 0."""
    dim = state.shape[0]
    if dim != 1 << p.n:
        raise DimensionError(f"state of dimension {dim} does not match {p.n} qubits")
    xm, zm = _index_mask(p.x, p.n), _index_mask(p.z, p.n)
    idx = np.arange(dim)
    src = idx ^ xm
    # (P psi)[c] = i^k (-1)^{z . src} psi[src]
    signs = 1 - 2 * (np.bitwise_count(src & zm).astype(np.int64) & 1)
    factor = _I_POWERS[p.phase] * signs
    moved = state[src]
    return moved * factor.reshape((-1,) + (1,) * (state.ndim - 1))


def exp_pauli_action(state: np.ndarray, p: PauliString, theta: float) -> np.ndarray:
    return math.cos(theta) * state + 1j * math.sin(theta) * pauli_action(state, p)


def _cnot_action(state: np.ndarray, control: int, target: int, n: int) -> np.ndarray:
    cbit, tbit = 1 << (n - 1 - control), 1 << (n - 1 - target)
    idx = np.arange(state.shape[0])
    src = np.where(idx & cbit, idx ^ tbit, idx)
    return state[src]


def apply_gate(state: np.ndarray, gate: Gate, n: int, params=None) -> np.ndarray:
    if gate.is_cnot:
        return _cnot_action(state, *gate.qubits, n)
    return exp_pauli_action(state, gate.generator(n), gate.angle.bind(params))


def apply_circuit(state: np.ndarray, c: Circuit, params=None) -> np.ndarray:
    for gate in c.gates:
        state = apply_gate(state, gate, c.n, params)
    return state


def circuit_unitary(c: Circuit, params=None) -> np.ndarray:
    if c.n > DENSE_LIMIT:
        raise DimensionError(f"dense unitary capped at {DENSE_LIMIT} qubits, got {c.n}")
    return apply_circuit(np.eye(1 << c.n, dtype=complex), c, params)


def _as_terms(target: Target) -> list[tuple[float, PauliString]]:
    if isinstance(target, PauliString):
        return [(1.0, target)]
    return [(float(coef), p) for coef, p in target]


def apply_target(state: np.ndarray, target: Target, gamma: float) -> np.ndarray:
    """Apply ``prod_k exp(i coef_k gamma P_k)``; the terms must commute."""
    for coef, p in _as_terms(target):
        if not p.is_hermitian():
            raise InvalidOperatorError(f"{p} is not Hermitian")
        state = exp_pauli_action(state, p, coef * gamma)
    return state


def target_unitary(target: Target, gamma: float, n: int) -> np.ndarray:
    return apply_target(np.eye(1 << n, dtype=complex), target, gamma)


def random_state(n: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return v / np.linalg.norm(v)


# -- verifiers ----------------------------------------------------------------


def _bind(name: str, gamma: float) -> dict[str, float]:
    return {name: gamma}


def numeric_verify(c: Circuit, target: Target, gammas: Iterable[float], name: str = "gamma") -> float:
    """Largest Frobenius distance between the circuit and target unitaries."""
    if c.n > DENSE_LIMIT:
        raise DimensionError(f"dense verification capped at {DENSE_LIMIT} qubits, got {c.n}")
    worst = 0.0
    for gamma in gammas:
        u = circuit_unitary(c, _bind(name, gamma))
        v = target_unitary(target, gamma, c.n)
        worst = max(worst, float(np.linalg.norm(u - v)))
    return worst


def statevector_verify(
    c: Circuit,
    target: Target,
    trials: int = 3,
    gammas: Iterable[float] | None = None,
    seed: int = 0,
    name: str = "gamma",
) -> float:
    """Largest vector-norm error over ``trials`` random states and parameters."""
    if c.n > STATEVECTOR_LIMIT:
        raise DimensionError(f"state-vector verification capped at {STATEVECTOR_LIMIT} qubits")
    rng = np.random.default_rng(seed)
    gammas = list(gammas) if gammas is not None else list(rng.uniform(-math.pi, math.pi, trials))
    worst = 0.0
    for _ in range(trials):
        psi = random_state(c.n, rng)
        for gamma in gammas:
            got = apply_circuit(psi, c, _bind(name, gamma))
            want = apply_target(psi, target, gamma)
            worst = max(worst, float(np.linalg.norm(got - want)))
    return worst


def nested_shape(c: Circuit) -> int:
    """Index of the central gate of a conjugation palindrome; raises otherwise."""
    gates = c.gates
    if any(g.is_cnot for g in gates):
        raise ShapeError("CNOT gates cannot be folded symbolically")
    params = c.param_gates()
    mid = len(gates) // 2
    if len(gates) % 2 == 0 or params != [mid]:
        raise ShapeError("expected exactly one parameterised gate in the centre")
    for i in range(mid):
        a, b = gates[i], gates[-1 - i]
        if a.key() != b.key():
            raise ShapeError(f"gates {i} and {len(gates) - 1 - i} have different generators")
        if abs(a.angle.value) != QUARTER or abs(b.angle.value) != QUARTER:
            raise ShapeError("conjugators must be fixed +-pi/4 rotations")
    return mid


def fold(c: Circuit) -> PauliString | None:
    """Effective generator ``Q`` with ``circuit == exp(i gamma Q)``, or
    ``None`` when a mirrored pair is not an inverse pair."""
    mid = nested_shape(c)
    center = c.gates[mid]
    if center.angle.scale != 1:
        return None
    q = center.generator(c.n)
    if center.angle.sign < 0:
        q = -q
    for i in range(mid - 1, -1, -1):
        head, tail = c.gates[i], c.gates[-1 - i]
        if head.angle.value != -tail.angle.value:
            return None
        # [exp(i s pi/4 O), inner, exp(-i s pi/4 O)] -> generator exp(-i s pi/4 O) Q exp(+i s pi/4 O)
        s = 1 if head.angle.value > 0 else -1
        q = conjugate_by_quarter_rotation(head.generator(c.n), q, -s)
    return q


def symbolic_verify(c: Circuit, target: PauliString) -> bool:
    folded = fold(c)
    return folded is not None and folded == target


# -- correlation property -----------------------------------------------------

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]])
_Z = np.diag([1.0, -1.0]).astype(complex)


def random_product_states(n: int, count: int, rng: np.random.Generator) -> list[np.ndarray]:
    out = []
    for _ in range(count):
        v = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
        out.append(v / np.linalg.norm(v, axis=1, keepdims=True))
    return out


def _expect(v: np.ndarray, op: np.ndarray) -> float:
    return float(np.real(np.conj(v) @ op @ v))


def correlation_errors(c: Circuit, target: PauliString, product_states: Sequence[np.ndarray], name: str = "gamma") -> float:
    """Largest deviation of ``<z_j>`` after ``exp(-i pi/4 X..X)`` from the
    product ``<y_j> prod_{i != j} <x_i>`` of the input single-qubit states."""
    if target != PauliString.from_letters("X" * c.n):
        raise InvalidOperatorError("correlation check needs the all-X target with sign +1")
    if c.n > STATEVECTOR_LIMIT:
        raise DimensionError(f"state-vector check capped at {STATEVECTOR_LIMIT} qubits")
    gamma = -math.pi / 4
    dim = 1 << c.n
    bits = (np.arange(dim)[:, None] >> (c.n - 1 - np.arange(c.n))[None, :]) & 1
    zsign = 1 - 2 * bits
    worst = 0.0
    for locals_ in product_states:
        locals_ = np.asarray(locals_, dtype=complex)
        if locals_.shape != (c.n, 2):
            raise DimensionError(f"product state must have shape ({c.n}, 2)")
        psi = locals_[0]
        for v in locals_[1:]:
            psi = np.kron(psi, v)
        out = apply_circuit(psi, c, _bind(name, gamma))
        probs = np.abs(out) ** 2
        measured = probs @ zsign
        xs = np.array([_expect(v, _X) for v in locals_])
        ys = np.array([_expect(v, _Y) for v in locals_])
        for j in range(c.n):
            predicted = ys[j] * np.prod(np.delete(xs, j))
            worst = max(worst, abs(measured[j] - predicted))
    return worst


def correlation_check(
    c: Circuit,
    target: PauliString,
    product_states: Sequence[np.ndarray],
    tol: float = TOLERANCE,
    name: str = "gamma",
) -> bool:
    return correlation_errors(c, target, product_states, name) < tol


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    n: int
    gate_count: int
    depth: int
    max_error: float
    seed: int | None
    passed: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def verify(
    c: Circuit,
    target: Target,
    mode: str = "numeric",
    seed: int = 0,
    trials: int = 3,
    tol: float = TOLERANCE,
    name: str = "gamma",
) -> VerificationReport:
    """Run one verification route and summarise it."""
    stats = circuit_stats(c)
    if mode == "symbolic":
        if not isinstance(target, PauliString):
            raise ShapeError("symbolic verification needs a single Pauli target")
        ok = symbolic_verify(c, target)
        return VerificationReport(mode, c.n, stats.gate_count, stats.two_qubit_depth, 0.0 if ok else float("inf"), None, ok)
    rng = np.random.default_rng(seed)
    gammas = list(rng.uniform(-math.pi, math.pi, trials))
    if mode == "numeric":
        err = numeric_verify(c, target, gammas, name)
    elif mode == "statevector":
        err = statevector_verify(c, target, trials, gammas, seed, name)
    else:
        raise ValueError(f"unknown verification mode {mode!r}")
    return VerificationReport(mode, c.n, stats.gate_count, stats.two_qubit_depth, err, seed, err < tol)


__all__ = [
    "pauli_action", "exp_pauli_action", "apply_gate", "apply_circuit", "circuit_unitary",
    "apply_target", "target_unitary", "random_state", "numeric_verify", "statevector_verify",
    "nested_shape", "fold", "symbolic_verify", "random_product_states", "correlation_errors",
    "correlation_check", "VerificationReport", "verify", "TOLERANCE",
]
