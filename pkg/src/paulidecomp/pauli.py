"""Phase-tracked Pauli strings in symplectic (bit-mask) form.

A :class:`PauliString` on ``n`` qubits stores two integer bit masks ``x`` and
``z`` (bit ``j`` belongs to qubit ``j``) and a phase exponent ``phase`` so that
the operator is::

    i**phase * prod_j X_j**x_j Z_j**z_j

Python integers are unbounded, so there is no limit on ``n``. Readouts fold the
``i`` carried by every ``XZ`` pair back into a literal ``Y``: ``letters`` is a
string over ``IXYZ`` (qubit 0 leftmost) and ``scalar`` is one of ``1, -1, 1j,
-1j``.

Only the ±pi/4 conjugation identity is provided, which is all the nested
decomposition needs:

    exp(i s pi/4 O) P exp(-i s pi/4 O) = P          if [O, P] = 0
                                       = i s O P    if {O, P} = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DimensionError, InvalidDecompositionError, InvalidOperatorError, ParseError

_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_SCALARS = (1, 1j, -1, -1j)
_SIGN_PREFIXES = {
    "": 0, "+": 0, "-": 2, "−": 2,
    "i": 1, "+i": 1, "-i": 3, "−i": 3,
}


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"qubit count must be positive, got {self.n}")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise DimensionError("bit mask wider than the register")
        object.__setattr__(self, "phase", self.phase % 4)

    # -- construction -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n)

    @classmethod
    def from_letters(cls, letters: str, sign: complex = 1) -> PauliString:
        """Build from a letter string over ``IXYZ`` and a scalar in {±1, ±i}."""
        if not letters:
            raise ParseError("empty Pauli string")
        x = z = 0
        n_y = 0
        for j, ch in enumerate(letters.upper()):
            if ch not in _BITS:
                raise ParseError(f"invalid Pauli letter {ch!r} in {letters!r}")
            xb, zb = _BITS[ch]
            x |= xb << j
            z |= zb << j
            n_y += xb & zb
        try:
            k = _SCALARS.index(sign)
        except ValueError:
            raise ParseError(f"scalar must be one of +-1, +-i, got {sign!r}") from None
        return cls(len(letters), x, z, k + n_y)

    @classmethod
    def from_str(cls, text: str) -> PauliString:
        """Parse text such as ``"ZZZZ"``, ``"-YIZZ"`` or ``"+XY"``."""
        text = text.strip()
        body = text.lstrip("+-−i")
        prefix = text[: len(text) - len(body)]
        if prefix not in _SIGN_PREFIXES:
            raise ParseError(f"invalid sign prefix {prefix!r}")
        return cls.from_letters(body, _SCALARS[_SIGN_PREFIXES[prefix]])

    @classmethod
    def from_sparse(cls, n: int, letters: Mapping[int, str], sign: complex = 1) -> PauliString:
        chars = ["I"] * n
        for q, ch in letters.items():
            if not 0 <= q < n:
                raise DimensionError(f"qubit {q} outside register of size {n}")
            chars[q] = ch
        return cls.from_letters("".join(chars), sign)

    # -- readout ------------------------------------------------------------

    def letter(self, j: int) -> str:
        return "IXZY"[((self.x >> j) & 1) | (((self.z >> j) & 1) << 1)]

    @property
    def letters(self) -> str:
        return "".join(self.letter(j) for j in range(self.n))

    @property
    def scalar(self) -> complex:
        return _SCALARS[(self.phase - _popcount(self.x & self.z)) % 4]

    @property
    def support(self) -> frozenset[int]:
        mask = self.x | self.z
        return frozenset(j for j in range(self.n) if (mask >> j) & 1)

    @property
    def weight(self) -> int:
        return _popcount(self.x | self.z)

    def is_hermitian(self) -> bool:
        return (self.phase - _popcount(self.x & self.z)) % 2 == 0

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def unsigned(self) -> PauliString:
        """Same letters with scalar +1."""
        return PauliString(self.n, self.x, self.z, _popcount(self.x & self.z))

    def same_letters(self, other: PauliString) -> bool:
        return self.n == other.n and self.x == other.x and self.z == other.z

    def __str__(self) -> str:
        prefix = {1: "+", -1: "-", 1j: "+i", -1j: "-i"}[self.scalar]
        return prefix + self.letters

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"

    # -- algebra ------------------------------------------------------------

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __neg__(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, self.phase + 2)

    def scaled(self, k: int) -> PauliString:
        """Multiply by ``i**k``."""
        return PauliString(self.n, self.x, self.z, self.phase + k)


def _check_dims(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise DimensionError(f"size mismatch: {p.n} vs {q.n} qubits")


def _require_hermitian(*ops: PauliString) -> None:
    for op in ops:
        if not op.is_hermitian():
            raise InvalidOperatorError(f"{op} is not Hermitian")


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Operator product ``p @ q`` with exact phase."""
    _check_dims(p, q)
    # Z^a X^b = (-1)^(a.b) X^b Z^a on each qubit
    k = p.phase + q.phase + 2 * _popcount(p.z & q.x)
    return PauliString(p.n, p.x ^ q.x, p.z ^ q.z, k)


def commutes(p: PauliString, q: PauliString) -> bool:
    _check_dims(p, q)
    return (_popcount(p.x & q.z) + _popcount(p.z & q.x)) % 2 == 0


def product(ops: Iterable[PauliString]) -> PauliString:
    it = iter(ops)
    acc = next(it)
    for op in it:
        acc = multiply(acc, op)
    return acc


def conjugate_by_quarter_rotation(o: PauliString, p: PauliString, sign: int = 1) -> PauliString:
    """Return ``exp(i*sign*pi/4*o) @ p @ exp(-i*sign*pi/4*o)``."""
    _check_dims(o, p)
    _require_hermitian(o, p)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if commutes(o, p):
        return p
    # i*sign -> i**1 or i**3
    return multiply(o, p).scaled(1 if sign == 1 else 3)


def residual(o: PauliString, p: PauliString) -> tuple[PauliString, int]:
    """Split ``p`` against the conjugator ``o``.

    Returns ``(h, sign)`` with ``h`` Hermitian, scalar +1, and
    ``conjugate_by_quarter_rotation(o, h, +1) == sign * p``.
    """
    _check_dims(o, p)
    _require_hermitian(o, p)
    if commutes(o, p):
        raise InvalidDecompositionError(f"{o} commutes with {p}; no residual exists")
    q = multiply(o, p).scaled(3)  # -i * o * p, Hermitian because {o, p} = 0
    sign = 1 if q.scalar == 1 else -1
    return q.unsigned(), sign
