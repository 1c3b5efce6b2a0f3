"""Hardware connectivity graphs and the rooted spanning-tree plan.

All tie-breaks (diameter endpoints, nearest seed node, BFS parent) go to the
smaller node index so that emitted circuits are reproducible bit for bit.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ConnectivityError, DimensionError, ParseError


class HardwareGraph:
    """Undirected simple graph whose edges license two-qubit gates.

    ``n`` is the register size. ``nodes`` defaults to ``range(n)``; a
    subgraph keeps the register size but carries a smaller node set.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]], nodes: Iterable[int] | None = None):
        if n < 1:
            raise DimensionError(f"graph needs at least one node, got n={n}")
        self.n = n
        self.nodes: tuple[int, ...] = tuple(sorted(set(range(n) if nodes is None else nodes)))
        node_set = set(self.nodes)
        if any(not 0 <= v < n for v in node_set):
            raise DimensionError("node index outside register")
        canon = set()
        for e in edges:
            a, b = (int(v) for v in e)
            if a == b:
                raise ParseError(f"self-loop on node {a}")
            if a not in node_set or b not in node_set:
                raise DimensionError(f"edge ({a}, {b}) touches a node outside the graph")
            canon.add((min(a, b), max(a, b)))
        self.edges: frozenset[tuple[int, int]] = frozenset(canon)
        adj: dict[int, list[int]] = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def subgraph(self, keep: Iterable[int]) -> HardwareGraph:
        keep = set(keep)
        return HardwareGraph(self.n, [e for e in self.edges if e[0] in keep and e[1] in keep], keep)

    def is_connected(self) -> bool:
        return len(bfs_distances(self, self.nodes[0])) == len(self.nodes)

    def require_connected(self) -> None:
        if not self.is_connected():
            raise ConnectivityError("hardware graph is not connected")

    def is_path(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.nodes) - 1 and all(
            self.degree(v) <= 2 for v in self.nodes
        )

    def is_star(self) -> bool:
        k = len(self.nodes)
        if k < 3 or len(self.edges) != k - 1:
            return False
        hubs = [v for v in self.nodes if self.degree(v) == k - 1]
        return len(hubs) == 1 and all(self.degree(v) == 1 for v in self.nodes if v != hubs[0])

    def path_order(self) -> list[int]:
        """Node sequence of a path graph, starting at the smaller endpoint."""
        if not self.is_path():
            raise ConnectivityError("graph is not a path")
        if len(self.nodes) == 1:
            return list(self.nodes)
        start = min(v for v in self.nodes if self.degree(v) == 1)
        order, prev = [start], None
        while len(order) < len(self.nodes):
            nxt = [w for w in self.neighbors(order[-1]) if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        return order

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}
        if len(self.nodes) != self.n:
            d["nodes"] = list(self.nodes)
        return d

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HardwareGraph)
            and (self.n, self.nodes, self.edges) == (other.n, other.nodes, other.edges)
        )

    def __repr__(self) -> str:
        return f"HardwareGraph(n={self.n}, edges={len(self.edges)})"


# -- file formats -------------------------------------------------------------


def graph_from_dict(data: dict) -> HardwareGraph:
    try:
        return HardwareGraph(int(data["n"]), data["edges"], data.get("nodes"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DimensionError | ParseError):
            raise
        raise ParseError(f"bad graph description: {exc}") from exc


def parse_graph(text: str) -> HardwareGraph:
    """Parse either the JSON form ``{"n": .., "edges": [[a, b], ..]}`` or an
    edge list with one ``a b`` pair per line (``#`` starts a comment)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return graph_from_dict(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid graph JSON: {exc}") from exc
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'a b', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not edges:
        raise ParseError("edge list is empty")
    return HardwareGraph(max(max(e) for e in edges) + 1, edges)


def load_graph(path: str | Path) -> HardwareGraph:
    return parse_graph(Path(path).read_text())


# -- standard graphs ----------------------------------------------------------


def path_graph(n: int) -> HardwareGraph:
    return HardwareGraph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int, center: int = 0) -> HardwareGraph:
    return HardwareGraph(n, [(center, v) for v in range(n) if v != center])


def cycle_graph(n: int) -> HardwareGraph:
    return HardwareGraph(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> HardwareGraph:
    """Square lattice; node ``r * cols + c``."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return HardwareGraph(rows * cols, edges)


def branched_graph_15() -> HardwareGraph:
    """15-qubit graph with diameter 6: a 7-node spine (0..6) and three branches.

    Branch one is a path (7-8 hanging off node 2), branch two a star (centre 9
    on node 4 with leaves 10, 11), branch three mixes both (12 on the spine
    centre, fanning out to 13 and 14). Two extra couplers (9, 12) and (8, 13)
    close cycles without shortening the spine.
    """
    spine = [(i, i + 1) for i in range(6)]
    branches = [(2, 7), (7, 8), (4, 9), (9, 10), (9, 11), (3, 12), (12, 13), (12, 14)]
    extra = [(9, 12), (8, 13)]
    return HardwareGraph(15, spine + branches + extra)


def random_connected_graph(n: int, rng: np.random.Generator, extra_edge_prob: float = 0.1) -> HardwareGraph:
    """Random recursive tree on ``n`` nodes plus independent extra edges."""
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in edges and rng.random() < extra_edge_prob:
                edges.add((a, b))
    return HardwareGraph(n, sorted(edges))


# -- distances ----------------------------------------------------------------


def bfs_distances(g: HardwareGraph, source: int) -> dict[int, int]:
    """Hop distances from ``source``; unreachable nodes are absent."""
    if source not in g._adj:
        raise DimensionError(f"source {source} is not a node of the graph")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _all_distances(g: HardwareGraph) -> dict[int, dict[int, int]]:
    table = {v: bfs_distances(g, v) for v in g.nodes}
    if any(len(row) != len(g.nodes) for row in table.values()):
        raise ConnectivityError("hardware graph is not connected")
    return table


def diameter(g: HardwareGraph) -> tuple[int, tuple[int, int]]:
    """Exact diameter and the lexicographically smallest endpoint pair."""
    table = _all_distances(g)
    best, ends = 0, (g.nodes[0], g.nodes[0])
    for a in g.nodes:
        for b in g.nodes:
            if b > a and table[a][b] > best:
                best, ends = table[a][b], (a, b)
    return best, ends


def shortest_path(g: HardwareGraph, a: int, b: int) -> list[int]:
    """Shortest path from ``a`` to ``b``; each step takes the smallest
    neighbour that stays on some shortest path."""
    to_b = bfs_distances(g, b)
    if a not in to_b:
        raise ConnectivityError(f"no path between {a} and {b}")
    path = [a]
    while path[-1] != b:
        v = path[-1]
        path.append(min(w for w in g.neighbors(v) if to_b.get(w) == to_b[v] - 1))
    return path


def depth_lower_bound(d: int) -> int:
    """Fewest two-qubit layers for a full-support rotation on a graph of diameter ``d``."""
    if d < 1:
        raise ValueError(f"diameter must be >= 1, got {d}")
    return d if d % 2 else d + 1


# -- spanning tree plan -------------------------------------------------------


@dataclass(frozen=True)
class SpanningTreePlan:
    """Rooted spanning tree driving the general-graph decomposition.

    For odd diameter the tree has two adjacent roots; ``partner`` is the
    second root and ``(root, partner)`` carries the central gate.
    ``generations`` lists non-root nodes grouped by distance to their root,
    farthest first.
    """

    seed_path: tuple[int, ...]
    diameter: int
    root: int
    partner: int | None
    parent: dict[int, int]
    depth: dict[int, int]
    generations: tuple[tuple[int, ...], ...]
    method: str = "seed"
    children: dict[int, tuple[int, ...]] = field(default_factory=dict, compare=False)

    @property
    def roots(self) -> tuple[int, ...]:
        return (self.root,) if self.partner is None else (self.root, self.partner)

    @property
    def central_edge(self) -> tuple[int, int] | None:
        return None if self.partner is None else (self.root, self.partner)

    @property
    def height(self) -> int:
        """Longest tree distance from the primary root."""
        if self.partner is None:
            return max(self.depth.values(), default=0)
        return max(
            (self.depth[v] + (self._owner(v) == self.partner) for v in self.depth),
            default=0,
        )

    @property
    def layer_count(self) -> int:
        """Two-qubit layers of the nested decomposition built on this tree."""
        if len(self.depth) == 1:
            return 0
        return 2 * max(self.depth.values()) + 1

    def tree_edges(self) -> set[tuple[int, int]]:
        edges = {(min(c, p), max(c, p)) for c, p in self.parent.items()}
        if self.partner is not None:
            edges.add((min(self.roots), max(self.roots)))
        return edges

    def _owner(self, v: int) -> int:
        while v in self.parent:
            v = self.parent[v]
        return v


def _tree_from_parents(parent: dict[int, int], roots: Sequence[int]) -> tuple[dict, tuple, dict]:
    depth = {r: 0 for r in roots}

    def d(v):
        if v not in depth:
            depth[v] = d(parent[v]) + 1
        return depth[v]

    for v in parent:
        d(v)
    layers: dict[int, list[int]] = {}
    for v, k in depth.items():
        if k > 0:
            layers.setdefault(k, []).append(v)
    generations = tuple(tuple(sorted(layers[k])) for k in sorted(layers, reverse=True))
    children: dict[int, list[int]] = {}
    for c, p in parent.items():
        children.setdefault(p, []).append(c)
    return depth, generations, {p: tuple(sorted(cs)) for p, cs in children.items()}


def _multi_source_forest(g: HardwareGraph, sources: Sequence[int], fixed: dict[int, int]) -> dict[int, int]:
    """Attach every node outside ``sources`` to its nearest source.

    Ties go to the smaller source index, then to the smaller parent index.
    ``fixed`` holds parent links already decided for source nodes.
    """
    owner = {s: s for s in sources}
    dist = {s: 0 for s in sources}
    parent = dict(fixed)
    frontier = sorted(sources)
    while frontier:
        cand: dict[int, tuple[int, int]] = {}
        for v in frontier:
            for w in g.neighbors(v):
                if w in dist:
                    continue
                key = (owner[v], v)
                if w not in cand or key < cand[w]:
                    cand[w] = key
        for w, (own, par) in cand.items():
            owner[w], dist[w], parent[w] = own, dist[par] + 1, par
        frontier = sorted(cand)
    if len(dist) != len(g.nodes):
        raise ConnectivityError("hardware graph is not connected")
    return parent


def _seed_plan(g: HardwareGraph, d: int, ends: tuple[int, int]) -> SpanningTreePlan:
    seed = shortest_path(g, *ends)
    if d % 2 == 0:
        roots = [seed[d // 2]]
    else:
        roots = sorted((seed[(d - 1) // 2], seed[(d + 1) // 2]))
    # spine nodes point toward the nearest root along the seed path
    mid = [seed.index(r) for r in roots]
    fixed = {}
    for i, v in enumerate(seed):
        if v in roots:
            continue
        fixed[v] = seed[i + 1] if i < min(mid) else seed[i - 1]
    parent = _multi_source_forest(g, seed, fixed)
    depth, generations, children = _tree_from_parents(parent, roots)
    return SpanningTreePlan(
        tuple(seed), d, roots[0], roots[1] if len(roots) > 1 else None,
        parent, depth, generations, "seed", children,
    )


def _center_plan(g: HardwareGraph, d: int, ends: tuple[int, int]) -> SpanningTreePlan:
    """Breadth-first tree around the node or edge with the smallest eccentricity."""
    table = _all_distances(g)
    best: tuple[int, int, tuple[int, ...]] | None = None
    for v in g.nodes:
        cost = 2 * max(table[v].values()) + 1
        if best is None or (cost, 0, (v,)) < best:
            best = (cost, 0, (v,))
    for a, b in sorted(g.edges):
        cost = 2 * max(min(table[a][x], table[b][x]) for x in g.nodes) + 1
        if (cost, 1, (a, b)) < best:
            best = (cost, 1, (a, b))
    roots = list(best[2])
    parent = _multi_source_forest(g, roots, {})
    depth, generations, children = _tree_from_parents(parent, roots)
    return SpanningTreePlan(
        tuple(shortest_path(g, *ends)), d, roots[0], roots[1] if len(roots) > 1 else None,
        parent, depth, generations, "center", children,
    )


def build_spanning_plan(g: HardwareGraph) -> SpanningTreePlan:
    """Seed the tree with a diameter path and attach every other node to its
    nearest spine node. If that tree is deeper than half the diameter (which
    happens on graphs whose radius exceeds ``ceil(d/2)``, cycles for example),
    the breadth-first tree around the best central node or edge is used
    instead, which is never worse.
    """
    g.require_connected()
    if len(g.nodes) == 1:
        v = g.nodes[0]
        return SpanningTreePlan((v,), 0, v, None, {}, {v: 0}, (), "seed", {})
    d, ends = diameter(g)
    plan = _seed_plan(g, d, ends)
    if plan.layer_count > depth_lower_bound(d):
        alt = _center_plan(g, d, ends)
        if alt.layer_count < plan.layer_count:
            return alt
    return plan


def radius_bound_met(g: HardwareGraph) -> bool:
    """True when some spanning tree reaches ``depth_lower_bound`` on ``g``."""
    d, ends = diameter(g)
    return _center_plan(g, d, ends).layer_count == depth_lower_bound(d) if d else True


__all__ = [
    "HardwareGraph", "SpanningTreePlan", "bfs_distances", "diameter", "shortest_path",
    "depth_lower_bound", "build_spanning_plan", "radius_bound_met", "parse_graph",
    "load_graph", "graph_from_dict", "path_graph", "star_graph", "cycle_graph",
    "grid_graph", "branched_graph_15", "random_connected_graph",
]
