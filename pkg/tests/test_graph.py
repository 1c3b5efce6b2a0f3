import math

import networkx as nx
import numpy as np
import pytest

from paulidecomp.errors import ConnectivityError, DimensionError, ParseError
from paulidecomp.graph import (
    HardwareGraph,
    bfs_distances,
    branched_graph_15,
    build_spanning_plan,
    cycle_graph,
    depth_lower_bound,
    diameter,
    grid_graph,
    parse_graph,
    path_graph,
    radius_bound_met,
    random_connected_graph,
    shortest_path,
    star_graph,
)


def to_nx(g: HardwareGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from(g.edges)
    return h


class TestHardwareGraph:
    def test_basic_queries(self):
        g = path_graph(4)
        assert g.neighbors(1) == (0, 2)
        assert g.has_edge(2, 1) and not g.has_edge(0, 2)
        assert g.is_path() and not g.is_star()
        assert g.path_order() == [0, 1, 2, 3]

    def test_star_detection(self):
        assert star_graph(6).is_star()
        assert star_graph(5, center=3).is_star()
        assert not grid_graph(2, 3).is_star()

    def test_rejects_self_loops_and_bad_nodes(self):
        with pytest.raises((DimensionError, ParseError)):
            HardwareGraph(3, [(0, 0)])
        with pytest.raises((DimensionError, ParseError)):
            HardwareGraph(3, [(0, 5)])

    def test_disconnected(self):
        g = HardwareGraph(4, [(0, 1), (2, 3)])
        assert not g.is_connected()
        with pytest.raises(ConnectivityError):
            g.require_connected()
        with pytest.raises(ConnectivityError):
            diameter(g)

    def test_parse_formats(self):
        text = "# ring\n0 1\n1 2\n2 0\n"
        assert parse_graph(text) == cycle_graph(3)
        assert parse_graph('{"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]}') == cycle_graph(3)
        with pytest.raises(ParseError):
            parse_graph("0 1 2\n")
        with pytest.raises(ParseError):
            parse_graph("{not json")

    def test_dict_round_trip(self):
        from paulidecomp.graph import graph_from_dict

        g = branched_graph_15()
        assert graph_from_dict(g.to_dict()) == g


class TestDistances:
    def test_path_distances(self):
        assert bfs_distances(path_graph(4), 0) == {0: 0, 1: 1, 2: 2, 3: 3}

    def test_star_distances(self):
        dist = bfs_distances(star_graph(6), 1)
        assert dist[0] == 1 and all(dist[v] == 2 for v in range(2, 6))

    def test_branched_eccentricity(self):
        g = branched_graph_15()
        d, (a, b) = diameter(g)
        assert d == 6
        assert max(bfs_distances(g, a).values()) == 6

    @pytest.mark.parametrize("g, d", [(path_graph(6), 5), (star_graph(6), 2), (branched_graph_15(), 6)])
    def test_diameter_examples(self, g, d):
        assert diameter(g)[0] == d

    def test_diameter_against_networkx(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 13))
            g = random_connected_graph(n, rng, float(rng.uniform(0, 0.4)))
            d, (a, b) = diameter(g)
            assert d == nx.diameter(to_nx(g))
            assert nx.shortest_path_length(to_nx(g), a, b) == d

    def test_shortest_path_is_shortest(self, rng):
        for _ in range(50):
            g = random_connected_graph(12, rng, 0.2)
            path = shortest_path(g, 0, 11)
            assert len(path) - 1 == nx.shortest_path_length(to_nx(g), 0, 11)
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))

    def test_lower_bound(self):
        assert [depth_lower_bound(d) for d in (1, 2, 5, 6)] == [1, 3, 5, 7]
        with pytest.raises(ValueError):
            depth_lower_bound(0)


def check_plan_invariants(g, plan):
    nodes = set(g.nodes)
    assert set(plan.parent) == nodes - set(plan.roots)
    for c, p in plan.parent.items():
        assert g.has_edge(c, p)
    flat = [v for gen in plan.generations for v in gen]
    assert sorted(flat) == sorted(nodes - set(plan.roots))
    # generations are ordered farthest first and share one tree depth each
    depths = [{plan.depth[v] for v in gen} for gen in plan.generations]
    assert all(len(s) == 1 for s in depths)
    assert [s.pop() for s in depths] == list(range(len(plan.generations), 0, -1))
    assert nx.is_tree(nx.Graph(list(plan.tree_edges()))) or len(nodes) == 1


class TestSpanningPlan:
    def test_path_seven(self):
        plan = build_spanning_plan(path_graph(7))
        assert plan.seed_path == tuple(range(7))
        assert plan.root == 3 and plan.height == 3

    def test_star(self):
        plan = build_spanning_plan(star_graph(6))
        assert plan.root == 0 and plan.height == 1
        assert plan.seed_path[1] == 0

    def test_branched_graph(self):
        g = branched_graph_15()
        plan = build_spanning_plan(g)
        assert plan.method == "seed"
        assert plan.seed_path == tuple(range(7))
        assert plan.root == 3 and plan.height == 3
        # each branch hangs off the spine
        assert plan.parent[7] == 2 and plan.parent[9] == 4 and plan.parent[12] == 3
        check_plan_invariants(g, plan)

    def test_odd_diameter_has_central_edge(self):
        plan = build_spanning_plan(path_graph(6))
        assert plan.central_edge == (2, 3)
        assert plan.layer_count == 5

    def test_single_node(self):
        plan = build_spanning_plan(HardwareGraph(1, []))
        assert plan.layer_count == 0 and plan.generations == ()

    def test_invariants_on_random_graphs(self, rng):
        for _ in range(1000):
            n = int(rng.integers(2, 65))
            g = random_connected_graph(n, rng, float(rng.uniform(0, 3 / n)))
            plan = build_spanning_plan(g)
            check_plan_invariants(g, plan)
            d = diameter(g)[0]
            assert plan.layer_count >= depth_lower_bound(d)
            if radius_bound_met(g):
                assert plan.layer_count == depth_lower_bound(d)

    def test_trees_always_meet_the_half_diameter_height(self, rng):
        for _ in range(300):
            g = random_connected_graph(int(rng.integers(2, 40)), rng, 0.0)
            d = diameter(g)[0]
            plan = build_spanning_plan(g)
            assert plan.height <= math.ceil(d / 2)
            assert plan.layer_count == depth_lower_bound(d)

    def test_cycle_exceeds_half_diameter(self):
        # radius 4, diameter 4: every spanning tree of C9 is a path of 9 nodes
        g = cycle_graph(9)
        assert not radius_bound_met(g)
        plan = build_spanning_plan(g)
        assert plan.layer_count == 9 > depth_lower_bound(4)

    def test_deterministic(self, rng):
        g = random_connected_graph(30, np.random.default_rng(7), 0.1)
        assert build_spanning_plan(g) == build_spanning_plan(g)
