"""Operator graphs: middle graph, line graph, coronas, and join."""

import pytest
from hypothesis import given, strategies as st

from middom import (
    EdgeNode,
    Graph,
    Original,
    complete,
    corona_k1,
    cycle,
    join,
    line_graph,
    middle_graph,
    path,
    star,
    two_corona,
)

from test_graph import graphs, mask_graph


class TestMiddleGraph:
    def test_path3_explicit(self):
        mg = middle_graph(path(3))
        assert mg.graph.order == 5
        assert mg.graph.edges == ((0, 3), (1, 3), (1, 4), (2, 4), (3, 4))
        assert mg.base_order == 3
        assert mg.edge_nodes == (3, 4)

    def test_labels_record_origin(self):
        mg = middle_graph(path(3))
        assert mg.graph.labels == (Original(0), Original(1), Original(2),
                                   EdgeNode(0, 1), EdgeNode(1, 2))

    def test_edge_node_lookup(self):
        mg = middle_graph(cycle(4))
        assert mg.edge_node(3, 0) == mg.edge_node(0, 3)
        with pytest.raises(ValueError, match=r"no base edge \(0, 2\)"):
            mg.edge_node(0, 2)

    def test_input_labels_are_replaced(self):
        g = Graph(2, [(0, 1)], labels=[Original(7), EdgeNode(1, 3)])
        mg = middle_graph(g)
        assert mg.graph.labels == (Original(0), Original(1), EdgeNode(0, 1))

    @given(graphs)
    def test_order_and_size(self, g):
        mg = middle_graph(g).graph
        assert mg.order == g.order + g.size
        expected = 2 * g.size + sum(
            g.degree(v) * (g.degree(v) - 1) // 2 for v in range(g.order))
        assert mg.size == expected

    @given(graphs)
    def test_originals_never_adjacent(self, g):
        mg = middle_graph(g).graph
        assert not any(u < g.order and v < g.order for u, v in mg.edges)

    @given(graphs)
    def test_adjacency_structure(self, g):
        mg = middle_graph(g)
        h = mg.graph
        for (u, v), node in mg.edge_node_index.items():
            assert h.has_edge(u, node) and h.has_edge(v, node)
        # an original vertex sees exactly its incident edge nodes
        for v in range(g.order):
            incident = {mg.edge_node(v, w) for w in g.neighbor_tuple(v)}
            assert h.neighbors(v) == frozenset(incident)
        # edge nodes are adjacent exactly when their base edges share an end
        nodes = list(mg.edge_node_index.items())
        for a in range(len(nodes)):
            for b in range(a + 1, len(nodes)):
                (e1, x), (e2, y) = nodes[a], nodes[b]
                share = bool(set(e1) & set(e2))
                assert h.has_edge(x, y) == share


class TestLineGraph:
    def test_path(self):
        assert line_graph(path(4)).edges == ((0, 1), (1, 2))

    def test_triangle_is_self(self):
        assert line_graph(complete(3)).edges == complete(3).edges

    def test_star_gives_complete(self):
        lg = line_graph(star(4))
        assert lg.order == 4 and lg.size == 6

    def test_labels(self):
        lg = line_graph(path(3))
        assert lg.labels == (EdgeNode(0, 1), EdgeNode(1, 2))


class TestCoronas:
    def test_corona_k1_shape(self):
        g = corona_k1(cycle(3))
        assert g.order == 6 and g.size == 6
        assert all(g.degree(3 + i) == 1 and g.has_edge(i, 3 + i)
                   for i in range(3))

    def test_two_corona_shape(self):
        g = two_corona(path(2))
        assert g.order == 6
        assert g.edges == ((0, 1), (0, 2), (1, 3), (2, 4), (3, 5))

    @given(graphs)
    def test_corona_degrees(self, g):
        c = corona_k1(g)
        assert c.order == 2 * g.order
        assert all(c.degree(v) == g.degree(v) + 1 for v in range(g.order))


class TestJoin:
    def test_join_paths_gives_complete(self):
        assert join(path(2), path(2)) == complete(4)

    def test_join_shape(self):
        g = join(cycle(3), Graph(2, []))
        assert g.order == 5
        assert g.size == 3 + 0 + 6
        assert g.has_edge(0, 3) and g.has_edge(2, 4) and not g.has_edge(3, 4)

    @given(graphs, graphs)
    def test_join_size(self, g, h):
        assert join(g, h).size == g.size + h.size + g.order * h.order
