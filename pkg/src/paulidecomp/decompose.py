"""Nested decomposition of exp(i*gamma*P) into native two-qubit Pauli rotations.

Every strategy repeatedly peels one qubit off the current residual generator
``R`` with a two-qubit conjugator ``O`` acting on (leaf, parent): ``O`` copies
the leaf letter of ``R`` and carries a letter anticommuting with ``R`` at the
parent, so ``O`` and ``R`` anticommute and ``-i O R`` no longer touches the
leaf. The circuit is the palindrome::

    +pi/4 O1, +pi/4 O2, ..., exp(i c gamma H), ..., -pi/4 O2, -pi/4 O1

with the central coefficient ``c = +-1`` absorbing every residual sign. The
strategies only differ in which (leaf, parent) pairs are peeled and in what
order, which is what sets the parallel depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .circuit import QUARTER, Angle, Circuit, Gate
from .errors import (
    ConnectivityError,
    DimensionError,
    InvalidOperatorError,
    SupportError,
    UnsupportedError,
)
from .graph import HardwareGraph, build_spanning_plan
from .pauli import PauliString, residual

LETTER_PREFERENCE = "XYZ"

STRATEGIES = ("auto", "path", "star", "general")


def _anticommuting_letters(letter: str) -> list[str]:
    return [c for c in LETTER_PREFERENCE if c != letter]


def choose_conjugator(
    current: PauliString,
    leaf: int,
    parent: int,
    preferred_parent_letter: str | None = None,
    graph: HardwareGraph | None = None,
) -> PauliString:
    """Two-qubit conjugator that removes ``leaf`` from ``current``.

    The parent letter is ``preferred_parent_letter`` when it anticommutes with
    the parent letter of ``current``, otherwise the first of X, Y, Z that
    does. If ``current`` is the identity on ``parent`` the preference (or X)
    is used as-is; such a conjugator commutes with ``current`` and is only
    useful for growing support (see :func:`route_support`).
    """
    leaf_letter = current.letter(leaf)
    if leaf_letter == "I":
        raise SupportError(f"qubit {leaf} is not in the support of {current}")
    if graph is not None and not graph.has_edge(leaf, parent):
        raise ConnectivityError(f"({leaf}, {parent}) is not a hardware edge")
    here = current.letter(parent)
    if here == "I":
        letter = preferred_parent_letter or LETTER_PREFERENCE[0]
    elif preferred_parent_letter in _anticommuting_letters(here):
        letter = preferred_parent_letter
    else:
        letter = _anticommuting_letters(here)[0]
    return PauliString.from_sparse(current.n, {leaf: leaf_letter, parent: letter})


@dataclass
class _Peeler:
    """Mutable residual state shared by one decomposition."""

    current: PauliString
    graph: HardwareGraph | None = None
    steps: list[tuple[tuple[int, int], str]] = field(default_factory=list)
    coefficient: int = 1

    def peel(self, leaf: int, parent: int, preferred: str | None = None) -> str:
        o = choose_conjugator(self.current, leaf, parent, preferred, self.graph)
        self.apply(o, leaf, parent)
        return o.letter(parent)

    def apply(self, o: PauliString, first: int, second: int) -> None:
        self.current, s = residual(o, self.current)
        # [+O, exp(i c g H), -O] realises exp(i c g (-s) P)
        self.coefficient *= -s
        self.steps.append(((first, second), o.letter(first) + o.letter(second)))

    def finish(self, center: Sequence[int], name: str) -> Circuit:
        rest = self.current
        if set(center) != rest.support:
            raise SupportError(f"central qubits {tuple(center)} do not match residual {rest}")
        if self.graph is not None and len(center) == 2 and not self.graph.has_edge(*center):
            raise ConnectivityError(f"central pair {tuple(center)} is not a hardware edge")
        coeff = self.coefficient * (1 if rest.scalar == 1 else -1)
        plus, minus = Angle.fixed(QUARTER), Angle.fixed(-QUARTER)
        head = [Gate(q, letters, plus) for q, letters in self.steps]
        tail = [Gate(q, letters, minus) for q, letters in reversed(self.steps)]
        mid = Gate(tuple(center), "".join(rest.letter(q) for q in center), Angle.param(name, coeff))
        return Circuit(rest.n, head + [mid] + tail)


def _check_target(p: PauliString, nodes: Sequence[int] | None = None) -> None:
    if not p.is_hermitian():
        raise InvalidOperatorError(f"{p} is not Hermitian")
    if p.is_identity():
        raise SupportError("target has empty support")
    if nodes is not None and p.support != set(nodes):
        raise SupportError(
            f"target support {sorted(p.support)} differs from the nodes {sorted(nodes)}"
        )


def decompose_path(
    p: PauliString,
    path_order: Sequence[int],
    m: int | None = None,
    graph: HardwareGraph | None = None,
    name: str = "gamma",
) -> Circuit:
    """Path strategy with the central gate on ``(v_m, v_{m+1})``.

    ``m`` is 1-based and defaults to ``ceil(k/2)`` for a path of ``k`` nodes,
    which gives the shallowest circuit, ``k - (k+1) % 2`` layers. Conjugators
    run inward from ``v_1`` up to ``v_m`` and from ``v_k`` down to
    ``v_{m+1}``.
    """
    order = list(path_order)
    k = len(order)
    if len(set(order)) != k:
        raise SupportError("path order repeats a node")
    _check_target(p, order)
    if graph is not None:
        for a, b in zip(order, order[1:]):
            if not graph.has_edge(a, b):
                raise ConnectivityError(f"consecutive path nodes {a}, {b} are not adjacent")
    peeler = _Peeler(p, graph)
    if k == 1:
        return peeler.finish(order, name)
    m = math.ceil(k / 2) if m is None else m
    if not 1 <= m <= k - 1:
        raise ValueError(f"split index m={m} outside 1..{k - 1}")
    for i in range(m - 1):
        peeler.peel(order[i], order[i + 1])
    for i in range(k - 1, m, -1):
        peeler.peel(order[i], order[i - 1])
    return peeler.finish((order[m - 1], order[m]), name)


def decompose_star(
    p: PauliString,
    center: int,
    leaf_order: Sequence[int],
    graph: HardwareGraph | None = None,
    name: str = "gamma",
) -> Circuit:
    """Star strategy: every conjugator shares ``center`` with one common
    letter, so they all commute and the circuit has three layers."""
    leaves = list(leaf_order)
    if center in leaves or len(set(leaves)) != len(leaves):
        raise SupportError("leaf order must list distinct non-centre nodes")
    _check_target(p, [center] + leaves)
    if graph is not None:
        for v in leaves:
            if not graph.has_edge(center, v):
                raise ConnectivityError(f"leaf {v} is not adjacent to centre {center}")
    peeler = _Peeler(p, graph)
    if not leaves:
        return peeler.finish((center,), name)
    shared = None
    for v in leaves[:-1]:
        shared = peeler.peel(v, center, shared)
    return peeler.finish((center, leaves[-1]), name)


def decompose_general(p: PauliString, g: HardwareGraph, name: str = "gamma") -> Circuit:
    """Spanning-tree strategy for any connected graph.

    Generations of the tree are peeled from the leaves inward, each parent
    keeping a single letter within a generation (star pattern), so every
    generation costs one layer on each side of the central gate.
    """
    g.require_connected()
    _check_target(p, g.nodes)
    if p.n != g.n:
        raise DimensionError(f"target on {p.n} qubits, graph on {g.n}")
    plan = build_spanning_plan(g)
    peeler = _Peeler(p, g)
    if len(g.nodes) == 1:
        return peeler.finish((plan.root,), name)
    last = None
    if plan.partner is None:
        last = max(plan.children[plan.root])
    for generation in plan.generations:
        letters: dict[int, str] = {}
        for v in generation:
            if v == last:
                continue
            parent = plan.parent[v]
            letters[parent] = peeler.peel(v, parent, letters.get(parent))
    center = (plan.root, last) if plan.partner is None else (plan.root, plan.partner)
    return peeler.finish(center, name)


@dataclass(frozen=True)
class RoutedTarget:
    """A target grown to a connected node set.

    ``extended`` has support exactly ``nodes``. Wrapping any decomposition of
    ``exp(i*gamma*extended)`` with the ``conjugators`` palindrome and
    multiplying its central coefficient by ``coefficient`` realises
    ``exp(i*gamma*target)``.
    """

    target: PauliString
    extended: PauliString
    nodes: frozenset[int]
    steps: tuple[tuple[tuple[int, int], str], ...] = ()
    coefficient: int = 1

    @property
    def extra_two_qubit_gates(self) -> int:
        return 2 * len(self.steps)


def _connecting_set(g: HardwareGraph, support: set[int]) -> set[int]:
    """Grow ``min(support)`` along shortest paths until it covers ``support``."""
    tree = {min(support)}
    remaining = set(support) - tree
    while remaining:
        # multi-source BFS from the current tree, parents toward smaller indices
        dist = {v: 0 for v in tree}
        parent: dict[int, int] = {}
        frontier = sorted(tree)
        hit = None
        while frontier and hit is None:
            nxt: dict[int, int] = {}
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in dist and (w not in nxt or v < nxt[w]):
                        nxt[w] = v
            for w, v in nxt.items():
                dist[w], parent[w] = dist[v] + 1, v
            found = sorted(w for w in nxt if w in remaining)
            if found:
                hit = found[0]
            frontier = sorted(nxt)
        if hit is None:
            raise ConnectivityError("support spans disconnected parts of the graph")
        v = hit
        while v not in tree:
            tree.add(v)
            v = parent[v]
        remaining -= tree
    return tree


def route_support(p: PauliString, g: HardwareGraph) -> RoutedTarget:
    """Extend a partial-support target so it covers a connected node set.

    Intermediate qubits on shortest paths between support components are
    adjoined one at a time; each costs two extra two-qubit gates.
    """
    _check_target(p)
    if p.n != g.n:
        raise DimensionError(f"target on {p.n} qubits, graph on {g.n}")
    support = set(p.support)
    if not support <= set(g.nodes):
        raise SupportError("target acts on qubits missing from the graph")
    if len(support) == 1:
        return RoutedTarget(p, p, frozenset(support))
    nodes = _connecting_set(g, support)
    sub = g.subgraph(nodes)
    dist = {v: 0 for v in support}
    frontier = sorted(support)
    while frontier:
        nxt = sorted({w for v in frontier for w in sub.neighbors(v) if w not in dist})
        for w in nxt:
            dist[w] = dist[frontier[0]] + 1
        frontier = nxt
    peeler = _Peeler(p, g)
    for q in sorted(nodes - support, key=lambda v: (dist[v], v)):
        a = min(w for w in sub.neighbors(q) if dist[w] == dist[q] - 1)
        o = PauliString.from_sparse(p.n, {q: "X", a: _anticommuting_letters(peeler.current.letter(a))[0]})
        peeler.apply(o, q, a)
    return RoutedTarget(p, peeler.current, frozenset(nodes), tuple(peeler.steps), peeler.coefficient)


def _wrap(route: RoutedTarget, inner: Circuit) -> Circuit:
    plus, minus = Angle.fixed(QUARTER), Angle.fixed(-QUARTER)
    head = [Gate(q, letters, plus) for q, letters in route.steps]
    tail = [Gate(q, letters, minus) for q, letters in reversed(route.steps)]
    body = []
    for gate in inner.gates:
        if gate.angle.is_param and route.coefficient == -1:
            gate = gate.with_angle(-gate.angle)
        body.append(gate)
    return Circuit(inner.n, head + body + tail)


def pick_strategy(g: HardwareGraph) -> str:
    if g.is_path():
        return "path"
    if g.is_star():
        return "star"
    return "general"


def decompose(
    p: PauliString,
    g: HardwareGraph,
    strategy: str = "auto",
    vm: int | None = None,
    name: str = "gamma",
) -> Circuit:
    """Decompose ``exp(i*gamma*p)`` for hardware graph ``g``.

    ``strategy="auto"`` routes paths and stars to their dedicated
    constructions and everything else to the spanning-tree strategy.
    Targets with partial support are first grown by :func:`route_support`.
    """
    if strategy not in STRATEGIES:
        raise UnsupportedError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    g.require_connected()
    route = route_support(p, g)
    sub = g.subgraph(route.nodes)
    kind = pick_strategy(sub) if strategy == "auto" else strategy
    q = route.extended
    if kind == "path":
        if not sub.is_path():
            raise ConnectivityError("target support does not lie on a path")
        inner = decompose_path(q, sub.path_order(), vm, sub, name)
    elif kind == "star":
        if not sub.is_star():
            raise ConnectivityError("target support does not form a star")
        hub = next(v for v in sub.nodes if sub.degree(v) == len(sub.nodes) - 1)
        inner = decompose_star(q, hub, [v for v in sub.nodes if v != hub], sub, name)
    else:
        inner = decompose_general(q, sub, name)
    return _wrap(route, inner)


def cnot_baseline(
    p: PauliString,
    variant: str = "ladder",
    path_order: Sequence[int] | None = None,
    name: str = "gamma",
) -> Circuit:
    """Textbook CNOT construction, kept for depth comparisons.

    Basis changes are fixed ±pi/4 single-qubit rotations, the parity is
    collected with CNOTs (a linear ``ladder`` or an ``x_shaped`` ladder from
    both ends), and a single-qubit Z rotation carries the parameter. Uses
    ``2(k-1)`` CNOTs for ``k`` support qubits.
    """
    _check_target(p)
    order = sorted(p.support) if path_order is None else list(path_order)
    if set(order) != p.support or len(order) != len(p.support):
        raise SupportError("path order must list exactly the support of the target")
    k = len(order)
    coeff = 1 if p.scalar == 1 else -1
    pre, post = [], []
    for q in order:
        letter = p.letter(q)
        if letter == "X":
            pre.append(Gate((q,), "Y", Angle.fixed(QUARTER)))
            post.append(Gate((q,), "Y", Angle.fixed(-QUARTER)))
        elif letter == "Y":
            pre.append(Gate((q,), "X", Angle.fixed(-QUARTER)))
            post.append(Gate((q,), "X", Angle.fixed(QUARTER)))
    if variant == "ladder":
        ladder = [Gate.cnot(order[i], order[i + 1]) for i in range(k - 1)]
        pivot = order[-1]
    elif variant == "x_shaped":
        t = math.ceil(k / 2) - 1
        left = [Gate.cnot(order[i], order[i + 1]) for i in range(t)]
        right = [Gate.cnot(order[i], order[i - 1]) for i in range(k - 1, t + 1, -1)]
        ladder = []
        for i in range(max(len(left), len(right))):
            ladder += left[i:i + 1] + right[i:i + 1]
        if k >= 2:
            ladder.append(Gate.cnot(order[t + 1], order[t]))
        pivot = order[t]
    else:
        raise UnsupportedError(f"unknown baseline variant {variant!r}")
    rot = Gate((pivot,), "Z", Angle.param(name, coeff))
    return Circuit(p.n, pre + ladder + [rot] + ladder[::-1] + post)


__all__ = [
    "choose_conjugator", "decompose_path", "decompose_star", "decompose_general",
    "route_support", "RoutedTarget", "decompose", "cnot_baseline", "pick_strategy",
    "LETTER_PREFERENCE", "STRATEGIES",
]
