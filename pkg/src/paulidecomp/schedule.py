"""Parallel-layer scheduling under the commuting-gate execution model.

Two gates may share a layer whenever their generators commute, even if they
act on overlapping qubits (their Hamiltonians can be switched on together).
Only layers holding at least one two-qubit gate count toward the depth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate
from .errors import ScheduleStateError
from .pauli import PauliString, commutes


def _paulis(c: Circuit) -> list[tuple[PauliString, ...]]:
    return [g.commutation_paulis(c.n) for g in c.gates]


def gates_commute(a: Gate, b: Gate, n: int) -> bool:
    return all(commutes(p, q) for p in a.commutation_paulis(n) for q in b.commutation_paulis(n))


def assign_layers(c: Circuit) -> Circuit:
    """Greedy as-soon-as-possible layering.

    Each gate lands one layer after the latest earlier gate it fails to
    commute with. Deterministic; never deeper than the sequential order.
    """
    paulis = _paulis(c)
    level: list[int] = []
    for i, pi in enumerate(paulis):
        lvl = 0
        for j in range(i):
            if level[j] + 1 > lvl and not all(commutes(p, q) for p in pi for q in paulis[j]):
                lvl = level[j] + 1
        level.append(lvl)
    layers = [[] for _ in range(max(level, default=-1) + 1)]
    for i, lvl in enumerate(level):
        layers[lvl].append(i)
    return c.with_layers(layers)


def validate_layers(c: Circuit) -> bool:
    """Check that ``c.layers`` partitions the gates and keeps every
    non-commuting pair in its original relative order."""
    if c.layers is None:
        raise ScheduleStateError("circuit has no layers")
    flat = sorted(i for layer in c.layers for i in layer)
    if flat != list(range(len(c.gates))):
        return False
    where = {i: k for k, layer in enumerate(c.layers) for i in layer}
    paulis = _paulis(c)
    for i in range(len(c.gates)):
        for j in range(i + 1, len(c.gates)):
            if not all(commutes(p, q) for p in paulis[i] for q in paulis[j]):
                if where[i] >= where[j]:
                    return False
    return True


def two_qubit_depth(c: Circuit) -> int:
    if c.layers is None:
        raise ScheduleStateError("circuit is not scheduled; call assign_layers first")
    return sum(any(c.gates[i].is_two_qubit for i in layer) for layer in c.layers)


def total_depth(c: Circuit) -> int:
    if c.layers is None:
        raise ScheduleStateError("circuit is not scheduled; call assign_layers first")
    return sum(1 for layer in c.layers if layer)


def layered_gates(c: Circuit) -> list[list[Gate]]:
    if c.layers is None:
        raise ScheduleStateError("circuit is not scheduled; call assign_layers first")
    return [[c.gates[i] for i in layer] for layer in c.layers]


@dataclass(frozen=True)
class CircuitStats:
    gate_count: int
    two_qubit_count: int
    two_qubit_depth: int
    total_depth: int

    def as_row(self) -> dict:
        return {
            "gate_count": self.gate_count,
            "two_qubit_count": self.two_qubit_count,
            "two_qubit_depth": self.two_qubit_depth,
            "total_depth": self.total_depth,
        }


def circuit_stats(c: Circuit) -> CircuitStats:
    if c.layers is None:
        c = assign_layers(c)
    return CircuitStats(len(c.gates), c.two_qubit_count, two_qubit_depth(c), total_depth(c))
