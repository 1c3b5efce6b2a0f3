"""Parity-encoded (LHZ) problem-Hamiltonian circuits on a square grid.

The problem Hamiltonian is ``sum_i J_i z_i + sum_l C_l z z z z`` where each
four-body term acts on the corners of one unit square (plaquette) of the
qubit grid. A ``rows x cols`` plaquette grid lives on a
``(rows+1) x (cols+1)`` qubit grid; qubit ``(r, c)`` has index
``r * (cols + 1) + c``.

Circuit layout:

1. one layer of single-qubit ``exp(i J_i gamma z_i)`` rotations;
2. plaquettes by colour group: red (even column, even row), blue (even
   column, odd row), gray (odd column, even row), maroon (odd column, odd
   row). Each plaquette uses the four-node path strategy with the split after
   the second node, giving conjugators on its top and bottom edges and the
   central gate on a vertical edge;
3. inverse-pair cancellation over the whole circuit, which removes the two
   conjugators on every horizontal edge shared by vertically adjacent
   plaquettes.

Plaquettes in even columns are labelled ``(v1, v2, v3, v4) = (tl, tr, bl,
br)``; odd columns use the mirror image ``(tr, tl, br, bl)`` so that their
conjugators meet the neighbouring even column with the same letters. The
path ``v1 - v2 - v4 - v3`` with the centre on ``(v2, v4)`` is used in both.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .circuit import Angle, Circuit, Gate
from .decompose import decompose_path
from .errors import ParseError
from .graph import HardwareGraph, grid_graph
from .optimize import cancel_inverse_pairs
from .pauli import PauliString
from .schedule import assign_layers, total_depth, two_qubit_depth

COLORS = ("red", "blue", "gray", "maroon")

RUNTIME_TWO_QUBIT_CLAIM = 5
RUNTIME_TOTAL_CLAIM = 6


@dataclass(frozen=True)
class LhzProblem:
    rows: int
    cols: int
    J: np.ndarray = field(compare=False)
    C: np.ndarray = field(compare=False)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ParseError("plaquette grid needs at least one row and one column")
        J = np.asarray(self.J, dtype=float).reshape(-1)
        C = np.asarray(self.C, dtype=float)
        if J.shape != (self.n,):
            raise ParseError(f"expected {self.n} local fields, got {J.shape[0]}")
        if C.shape != (self.rows, self.cols):
            raise ParseError(f"expected plaquette coefficients of shape {(self.rows, self.cols)}, got {C.shape}")
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "C", C)

    @property
    def n(self) -> int:
        return (self.rows + 1) * (self.cols + 1)

    def qubit(self, r: int, c: int) -> int:
        return r * (self.cols + 1) + c

    def graph(self) -> HardwareGraph:
        return grid_graph(self.rows + 1, self.cols + 1)

    def corners(self, r: int, c: int) -> dict[str, int]:
        q = self.qubit
        return {"tl": q(r, c), "tr": q(r, c + 1), "bl": q(r + 1, c), "br": q(r + 1, c + 1)}

    def labels(self, r: int, c: int) -> tuple[int, int, int, int]:
        """Qubits ``(v1, v2, v3, v4)`` of plaquette ``(r, c)``."""
        k = self.corners(r, c)
        if c % 2 == 0:
            return k["tl"], k["tr"], k["bl"], k["br"]
        return k["tr"], k["tl"], k["br"], k["bl"]

    @staticmethod
    def color(r: int, c: int) -> str:
        return COLORS[2 * (c % 2) + (r % 2)]

    def plaquettes(self, color: str | None = None) -> list[tuple[int, int]]:
        cells = [(r, c) for c in range(self.cols) for r in range(self.rows)]
        if color is None:
            return sorted(cells, key=lambda rc: (COLORS.index(self.color(*rc)), rc[1], rc[0]))
        return [rc for rc in cells if self.color(*rc) == color]

    def plaquette_term(self, r: int, c: int) -> PauliString:
        return PauliString.from_sparse(self.n, {q: "Z" for q in self.corners(r, c).values()})

    def terms(self) -> list[tuple[float, PauliString]]:
        """All Hamiltonian terms as ``(coefficient, Pauli)``; they commute."""
        out = [
            (float(self.J[q]), PauliString.from_sparse(self.n, {q: "Z"}))
            for q in range(self.n)
            if self.J[q] != 0
        ]
        out += [(float(self.C[r, c]), self.plaquette_term(r, c)) for r in range(self.rows) for c in range(self.cols)]
        return out

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> LhzProblem:
        n = (rows + 1) * (cols + 1)
        return cls(rows, cols, rng.uniform(-1, 1, n), rng.uniform(-1, 1, (rows, cols)))

    @classmethod
    def uniform(cls, rows: int, cols: int, j: float = 1.0, c: float = 1.0) -> LhzProblem:
        return cls(rows, cols, np.full((rows + 1) * (cols + 1), j), np.full((rows, cols), c))

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "J": self.J.tolist(), "C": self.C.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> LhzProblem:
        try:
            return cls(int(data["rows"]), int(data["cols"]), data["J"], data["C"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad LHZ problem: {exc}") from exc


def load_problem(path: str | Path) -> LhzProblem:
    try:
        return LhzProblem.from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid problem JSON: {exc}") from exc


def plaquette_circuit(p: LhzProblem, r: int, c: int, gamma_name: str = "gamma") -> Circuit:
    """``exp(i C_rc gamma z z z z)`` for one plaquette, five gates."""
    v1, v2, v3, v4 = p.labels(r, c)
    circ = decompose_path(p.plaquette_term(r, c), [v1, v2, v4, v3], 2, p.graph(), gamma_name)
    coef = float(p.C[r, c])
    gates = []
    for g in circ.gates:
        if g.angle.is_param:
            g = g.with_angle(Angle.param(gamma_name, g.angle.sign * (1 if coef >= 0 else -1), abs(coef)))
        gates.append(g)
    return Circuit(p.n, gates)


def field_layer(p: LhzProblem, gamma_name: str = "gamma") -> list[Gate]:
    return [
        Gate((q,), "Z", Angle.param(gamma_name, 1 if p.J[q] >= 0 else -1, abs(float(p.J[q]))))
        for q in range(p.n)
        if p.J[q] != 0
    ]


def raw_problem_circuit(p: LhzProblem, gamma_name: str = "gamma") -> Circuit:
    """Problem circuit before cancellation."""
    gates = field_layer(p, gamma_name)
    for r, c in p.plaquettes():
        gates += plaquette_circuit(p, r, c, gamma_name).gates
    return Circuit(p.n, gates)


def build_problem_circuit(p: LhzProblem, gamma_name: str = "gamma") -> Circuit:
    """Scheduled problem circuit with inverse pairs cancelled."""
    return assign_layers(cancel_inverse_pairs(raw_problem_circuit(p, gamma_name)))


@dataclass(frozen=True)
class GridDepthReport:
    rows: int
    cols: int
    two_qubit_depth: int
    total_depth: int
    color_depths: dict[str, int]
    gates_before: int
    gates_after: int
    cancelled: int
    expected_cancelled: int

    @property
    def matches_two_qubit_claim(self) -> bool:
        return self.two_qubit_depth == RUNTIME_TWO_QUBIT_CLAIM

    @property
    def matches_total_claim(self) -> bool:
        return self.total_depth == RUNTIME_TOTAL_CLAIM

    def as_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "two_qubit_depth": self.two_qubit_depth,
            "total_depth": self.total_depth,
            "color_depths": dict(self.color_depths),
            "gates_before": self.gates_before,
            "gates_after": self.gates_after,
            "cancelled": self.cancelled,
            "expected_cancelled": self.expected_cancelled,
            "matches_two_qubit_claim": self.matches_two_qubit_claim,
            "matches_total_claim": self.matches_total_claim,
        }


def grid_depth_report(p: LhzProblem, gamma_name: str = "gamma") -> GridDepthReport:
    raw = raw_problem_circuit(p, gamma_name)
    built = assign_layers(cancel_inverse_pairs(raw))
    color_depths = {}
    for color in COLORS:
        cells = p.plaquettes(color)
        if not cells:
            continue
        gates = [g for r, c in cells for g in plaquette_circuit(p, r, c, gamma_name).gates]
        color_depths[color] = two_qubit_depth(assign_layers(Circuit(p.n, gates)))
    return GridDepthReport(
        p.rows,
        p.cols,
        two_qubit_depth(built),
        total_depth(built),
        color_depths,
        raw.two_qubit_count,
        built.two_qubit_count,
        raw.two_qubit_count - built.two_qubit_count,
        2 * (p.rows - 1) * p.cols,
    )
