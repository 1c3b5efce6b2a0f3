"""Gate and circuit data model plus the canonical JSON circuit format.

Gates are listed in time order: ``gates[0]`` acts first, so the circuit
unitary is ``U = G[-1] @ ... @ G[1] @ G[0]``. A rotation gate with Pauli
generator ``P`` and angle ``theta`` is ``exp(i * theta * P)``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DimensionError, ParseError
from .pauli import PauliString

QUARTER = Fraction(1, 4)

_FIXED_RE = re.compile(r"^([+-]?)(\d*)pi(?:/(\d+))?$")


def format_pi_multiple(value: Fraction) -> str:
    """Spell ``value * pi`` as ``"+pi/4"``, ``"-3pi/2"``, ``"0"``."""
    if value == 0:
        return "0"
    sign = "+" if value > 0 else "-"
    num, den = abs(value.numerator), value.denominator
    return f"{sign}{'' if num == 1 else num}pi{'' if den == 1 else f'/{den}'}"


def parse_pi_multiple(text: str) -> Fraction:
    text = text.strip().replace(" ", "")
    if text in ("0", "+0", "-0"):
        return Fraction(0)
    m = _FIXED_RE.match(text)
    if not m:
        raise ParseError(f"cannot read fixed angle {text!r}")
    sign, num, den = m.groups()
    value = Fraction(int(num or 1), int(den or 1))
    return -value if sign == "-" else value


@dataclass(frozen=True)
class Angle:
    """Rotation angle: a fixed rational multiple of pi or ``sign * scale * name``."""

    kind: str
    value: Fraction = Fraction(0)
    name: str | None = None
    sign: int = 1
    scale: float = 1.0

    @classmethod
    def fixed(cls, value: Fraction | int) -> Angle:
        return cls("fixed", Fraction(value))

    @classmethod
    def param(cls, name: str = "gamma", sign: int = 1, scale: float = 1.0) -> Angle:
        if sign not in (1, -1):
            raise ValueError(f"param sign must be +-1, got {sign}")
        if scale < 0:
            sign, scale = -sign, -scale
        return cls("param", Fraction(0), name, sign, float(scale))

    @property
    def is_fixed(self) -> bool:
        return self.kind == "fixed"

    @property
    def is_param(self) -> bool:
        return self.kind == "param"

    @property
    def coefficient(self) -> float:
        return self.sign * self.scale

    def is_zero(self) -> bool:
        return self.value == 0 if self.is_fixed else self.scale == 0

    def bind(self, params: Mapping[str, float] | float | None = None) -> float:
        if self.is_fixed:
            return float(self.value) * math.pi
        if isinstance(params, (int, float)):
            val = float(params)
        else:
            try:
                val = params[self.name]
            except (KeyError, TypeError):
                raise KeyError(f"no value bound for parameter {self.name!r}") from None
        return self.coefficient * val

    def __neg__(self) -> Angle:
        if self.is_fixed:
            return Angle.fixed(-self.value)
        return replace(self, sign=-self.sign)

    def can_add(self, other: Angle) -> bool:
        return self.kind == other.kind and (self.is_fixed or self.name == other.name)

    def __add__(self, other: Angle) -> Angle:
        if not self.can_add(other):
            raise ValueError(f"cannot add angles {self} and {other}")
        if self.is_fixed:
            return Angle.fixed(self.value + other.value)
        total = self.coefficient + other.coefficient
        return Angle.param(self.name, 1 if total >= 0 else -1, abs(total))

    def to_dict(self) -> dict:
        if self.is_fixed:
            return {"kind": "fixed", "value": format_pi_multiple(self.value)}
        d = {"kind": "param", "name": self.name, "sign": self.sign}
        if self.scale != 1.0:
            d["scale"] = self.scale
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> Angle:
        kind = data.get("kind")
        if kind == "fixed":
            return cls.fixed(parse_pi_multiple(str(data["value"])))
        if kind == "param":
            return cls.param(str(data["name"]), int(data.get("sign", 1)), float(data.get("scale", 1.0)))
        raise ParseError(f"unknown angle kind {kind!r}")

    def __str__(self) -> str:
        if self.is_fixed:
            return format_pi_multiple(self.value)
        s = "+" if self.sign > 0 else "-"
        return f"{s}{self.name}" if self.scale == 1 else f"{s}{self.scale:g}*{self.name}"


@dataclass(frozen=True)
class Gate:
    """One native gate.

    ``kind="rot"``: ``exp(i*angle * prod_k paulis[k]_{qubits[k]})``.
    ``kind="cnot"``: opaque CNOT with ``qubits = (control, target)``; only the
    CNOT baseline emits these.
    """

    qubits: tuple[int, ...]
    paulis: str = ""
    angle: Angle = field(default_factory=lambda: Angle.fixed(0))
    kind: str = "rot"

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(set(self.qubits)) != len(self.qubits) or not 1 <= len(self.qubits) <= 2:
            raise DimensionError(f"gate needs one or two distinct qubits, got {self.qubits}")
        if self.kind == "rot":
            if len(self.paulis) != len(self.qubits) or any(c not in "XYZ" for c in self.paulis):
                raise ParseError(f"letters {self.paulis!r} do not match qubits {self.qubits}")
        elif self.kind == "cnot":
            if len(self.qubits) != 2:
                raise DimensionError("CNOT acts on two qubits")
        else:
            raise ParseError(f"unknown gate kind {self.kind!r}")

    @classmethod
    def rotation(cls, qubits, paulis: str, angle: Angle) -> Gate:
        return cls(tuple(qubits), paulis, angle)

    @classmethod
    def cnot(cls, control: int, target: int) -> Gate:
        return cls((control, target), "", Angle.fixed(0), "cnot")

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2

    @property
    def is_cnot(self) -> bool:
        return self.kind == "cnot"

    def generator(self, n: int) -> PauliString:
        if self.is_cnot:
            raise TypeError("CNOT has no single Pauli generator")
        return PauliString.from_sparse(n, dict(zip(self.qubits, self.paulis)))

    def commutation_paulis(self, n: int) -> tuple[PauliString, ...]:
        """Paulis whose joint commutant is the commutant of this gate."""
        if self.is_cnot:
            c, t = self.qubits
            return (PauliString.from_sparse(n, {c: "Z"}), PauliString.from_sparse(n, {t: "X"}))
        return (self.generator(n),)

    def key(self) -> tuple:
        """Identity of the generator, ignoring the angle."""
        if self.is_cnot:
            return ("cnot", self.qubits)
        return ("rot", tuple(sorted(zip(self.qubits, self.paulis))))

    def with_angle(self, angle: Angle) -> Gate:
        return replace(self, angle=angle)

    def inverse(self) -> Gate:
        return self if self.is_cnot else replace(self, angle=-self.angle)

    def to_dict(self) -> dict:
        if self.is_cnot:
            return {"kind": "cnot", "qubits": list(self.qubits)}
        return {"qubits": list(self.qubits), "paulis": self.paulis, "angle": self.angle.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> Gate:
        try:
            if data.get("kind") == "cnot":
                return cls.cnot(*data["qubits"])
            return cls(tuple(data["qubits"]), str(data["paulis"]), Angle.from_dict(data["angle"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad gate entry {data!r}: {exc}") from exc

    def __str__(self) -> str:
        if self.is_cnot:
            return f"CNOT({self.qubits[0]}->{self.qubits[1]})"
        body = "".join(f"{p.lower()}{q}" for q, p in zip(self.qubits, self.paulis))
        return f"exp(i {self.angle} {body})"


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = ()
    layers: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.layers is not None:
            object.__setattr__(self, "layers", tuple(tuple(layer) for layer in self.layers))
        for g in self.gates:
            if any(not 0 <= q < self.n for q in g.qubits):
                raise DimensionError(f"gate {g} outside register of {self.n} qubits")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    @property
    def two_qubit_count(self) -> int:
        return sum(g.is_two_qubit for g in self.gates)

    def param_gates(self) -> list[int]:
        return [i for i, g in enumerate(self.gates) if not g.is_cnot and g.angle.is_param]

    def with_gates(self, gates: Iterable[Gate]) -> Circuit:
        return Circuit(self.n, tuple(gates))

    def with_layers(self, layers) -> Circuit:
        return Circuit(self.n, self.gates, layers)

    def then(self, other: Circuit) -> Circuit:
        if other.n != self.n:
            raise DimensionError("circuits act on different registers")
        return Circuit(self.n, self.gates + other.gates)

    def to_dict(self) -> dict:
        d = {"n": self.n, "gates": [g.to_dict() for g in self.gates]}
        if self.layers is not None:
            d["layers"] = [list(layer) for layer in self.layers]
        return d

    def to_json(self) -> str:
        """Canonical serialization: sorted keys, compact separators, trailing newline."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> Circuit:
        try:
            gates = tuple(Gate.from_dict(g) for g in data["gates"])
            return cls(int(data["n"]), gates, data.get("layers"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad circuit description: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> Circuit:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid circuit JSON: {exc}") from exc

    def __str__(self) -> str:
        return "\n".join(str(g) for g in self.gates)
