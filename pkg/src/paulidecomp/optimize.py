"""Peephole passes: cancel inverse ±pi/4 pairs and merge equal generators.

A gate may travel backwards past any gate it commutes with. Two rotations
with the same generator commute with exactly the same gates, so a partner
is reachable iff every gate between the two commutes with that generator.
"""

from __future__ import annotations

from typing import Callable

from .circuit import Circuit, Gate
from .pauli import commutes

Combine = Callable[[Gate, Gate], "list[Gate] | None"]


def _blocks(a: Gate, b: Gate, n: int) -> bool:
    return not all(commutes(p, q) for p in a.commutation_paulis(n) for q in b.commutation_paulis(n))


def _pair_pass(c: Circuit, combine: Combine, lookahead: int | None) -> Circuit:
    out: list[Gate] = []
    for g in c.gates:
        placed = False
        if not g.is_cnot:
            stop = 0 if lookahead is None else max(0, len(out) - lookahead)
            for i in range(len(out) - 1, stop - 1, -1):
                h = out[i]
                if h.key() == g.key():
                    merged = combine(h, g)
                    if merged is not None:
                        out[i:i + 1] = merged
                        placed = True
                        break
                    continue
                if _blocks(h, g, c.n):
                    break
        if not placed:
            out.append(g)
    return Circuit(c.n, out)


def _to_fixed_point(c: Circuit, combine: Combine, lookahead: int | None) -> Circuit:
    while True:
        nxt = _pair_pass(c, combine, lookahead)
        if len(nxt) == len(c):
            return nxt
        c = nxt


def _cancel(h: Gate, g: Gate) -> list[Gate] | None:
    if h.angle.is_fixed and g.angle.is_fixed and h.angle.value == -g.angle.value != 0:
        return []
    return None


def _merge(h: Gate, g: Gate) -> list[Gate] | None:
    if not h.angle.can_add(g.angle):
        return None
    total = h.angle + g.angle
    return [] if total.is_zero() else [h.with_angle(total)]


def cancel_inverse_pairs(c: Circuit, lookahead: int | None = None) -> Circuit:
    """Remove pairs ``exp(+i t P)``, ``exp(-i t P)`` (fixed ``t``) that can be
    brought together through commuting gates. Layers are dropped."""
    return _to_fixed_point(c, _cancel, lookahead)


def merge_same_generator(c: Circuit, lookahead: int | None = None) -> Circuit:
    """Add the angles of reachable rotations with equal generators.

    Fixed angles add as multiples of pi; parameterised angles add only for the
    same parameter name. Zero-angle results are removed.
    """
    c = Circuit(c.n, [g for g in c.gates if g.is_cnot or not g.angle.is_zero()])
    return _to_fixed_point(c, _merge, lookahead)


def removed_two_qubit_gates(before: Circuit, after: Circuit) -> int:
    return before.two_qubit_count - after.two_qubit_count
