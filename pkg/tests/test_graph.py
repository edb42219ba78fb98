"""Core graph type: construction, views, metric, and derived graphs."""

import pytest
from hypothesis import given, strategies as st

from middom import EdgeNode, Graph, Original, vertices_by_label


def mask_graph(n: int, mask: int) -> Graph:
    """Graph on n vertices whose edges are the set bits over ascending pairs."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


graphs = st.integers(1, 6).flatmap(
    lambda n: st.builds(mask_graph, st.just(n),
                        st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


class TestConstruction:
    def test_empty_graph(self):
        g = Graph(0, [])
        assert g.order == 0 and g.size == 0

    def test_negative_order(self):
        with pytest.raises(ValueError, match="order must be nonnegative"):
            Graph(-1, [])

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError,
                           match=r"invalid vertex in edge \(0, 3\): order is 3"):
            Graph(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(ValueError, match="self-loop at vertex 1"):
            Graph(3, [(1, 1)])

    def test_duplicate_edge(self):
        with pytest.raises(ValueError, match=r"duplicate edge \(0, 1\)"):
            Graph(3, [(0, 1), (1, 0)])

    def test_edges_sorted_and_normalized(self):
        g = Graph(4, [(3, 2), (0, 1), (2, 0)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))

    def test_default_labels(self):
        g = Graph(3, [(0, 1)])
        assert g.labels == (Original(0), Original(1), Original(2))

    def test_label_count_mismatch(self):
        with pytest.raises(ValueError, match="expected 2 labels, got 1"):
            Graph(2, [], labels=[Original(0)])

    def test_duplicate_labels(self):
        with pytest.raises(ValueError, match="pairwise distinct"):
            Graph(2, [], labels=[Original(0), Original(0)])


class TestEdgeNodeLabel:
    def test_endpoints(self):
        assert EdgeNode(2, 5).endpoints == (2, 5)

    def test_rejects_unordered(self):
        with pytest.raises(ValueError, match=r"0 <= i < j, got \(5, 2\)"):
            EdgeNode(5, 2)

    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="0 <= i < j"):
            EdgeNode(3, 3)

    def test_distinct_from_original(self):
        g = Graph(2, [], labels=[Original(0), EdgeNode(0, 1)])
        assert vertices_by_label(g) == {Original(0): 0, EdgeNode(0, 1): 1}


class TestViews:
    def test_neighbors(self):
        g = Graph(4, [(0, 1), (0, 2), (2, 3)])
        assert g.neighbors(0) == frozenset({1, 2})
        assert g.neighbor_tuple(2) == (0, 3)
        assert g.neighbor_mask(0) == 0b0110
        assert g.degree(3) == 1

    def test_has_edge(self):
        g = Graph(3, [(0, 2)])
        assert g.has_edge(2, 0) and not g.has_edge(0, 1)

    def test_vertex_check(self):
        g = Graph(2, [])
        with pytest.raises(ValueError, match="invalid vertex 2: order is 2"):
            g.degree(2)

    def test_equality_includes_labels(self):
        a = Graph(2, [(0, 1)])
        b = Graph(2, [(0, 1)], labels=[Original(5), Original(6)])
        assert a != b
        assert a == Graph(2, [(0, 1)])
        assert hash(a) == hash(Graph(2, [(0, 1)]))


class TestConnectivity:
    def test_components_ordered_by_smallest_member(self):
        g = Graph(5, [(1, 3), (0, 4)])
        assert g.connected_components() == [frozenset({0, 4}),
                                            frozenset({1, 3}),
                                            frozenset({2})]

    def test_is_connected_trivial(self):
        assert Graph(1, []).is_connected()
        assert Graph(0, []).is_connected()
        assert not Graph(2, []).is_connected()

    def test_is_tree(self):
        assert Graph(3, [(0, 1), (1, 2)]).is_tree()
        assert not Graph(3, [(0, 1), (1, 2), (0, 2)]).is_tree()
        assert not Graph(4, [(0, 1), (2, 3)]).is_tree()

    @given(graphs)
    def test_components_partition_vertices(self, g):
        comps = g.connected_components()
        seen = sorted(v for c in comps for v in c)
        assert seen == list(range(g.order))


class TestMetric:
    def test_path_diameter(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.diameter() == 3
        assert g.eccentricity(1) == 2

    def test_disconnected_diameter(self):
        with pytest.raises(ValueError, match="graph is disconnected"):
            Graph(2, []).diameter()

    def test_empty_diameter(self):
        with pytest.raises(ValueError, match="graph is empty"):
            Graph(0, []).diameter()


class TestDerivedGraphs:
    def test_induced_subgraph_reindexes_and_keeps_labels(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        h = g.induced_subgraph([1, 3, 2])
        assert h.order == 3
        assert h.edges == ((0, 1), (1, 2))
        assert h.labels == (Original(1), Original(2), Original(3))

    def test_induced_subgraph_empty(self):
        with pytest.raises(ValueError, match="at least one vertex"):
            Graph(2, []).induced_subgraph([])

    def test_remove_vertex(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert g.remove_vertex(1).edges == ()
        assert g.remove_vertex(0).edges == ((0, 1),)

    def test_remove_last_vertex(self):
        with pytest.raises(ValueError, match="cannot remove the last vertex"):
            Graph(1, []).remove_vertex(0)

    def test_complement(self):
        g = Graph(3, [(0, 1)])
        assert g.complement().edges == ((0, 2), (1, 2))

    @given(graphs)
    def test_complement_involution(self, g):
        assert g.complement().complement() == g

    @given(graphs)
    def test_complement_edge_count(self, g):
        assert g.size + g.complement().size == g.order * (g.order - 1) // 2

    def test_leaves(self):
        g = Graph(4, [(0, 1), (1, 2), (1, 3)])
        assert g.leaves() == frozenset({0, 2, 3})

    def test_spanning_tree(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        t = g.spanning_tree()
        assert t.is_tree()
        assert t.edges == ((0, 1), (0, 3), (1, 2))

    def test_spanning_tree_disconnected(self):
        with pytest.raises(ValueError, match="graph is disconnected"):
            Graph(3, [(0, 1)]).spanning_tree()


class TestHamiltonianPath:
    def test_small_positives(self):
        assert Graph(1, []).has_hamiltonian_path()
        assert Graph(5, [(i, i + 1) for i in range(4)]).has_hamiltonian_path()
        assert Graph(4, [(u, v) for u in range(4)
                         for v in range(u + 1, 4)]).has_hamiltonian_path()

    def test_small_negatives(self):
        assert not Graph(2, []).has_hamiltonian_path()
        star3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert not star3.has_hamiltonian_path()

    @given(graphs)
    def test_matches_brute_force(self, g):
        from itertools import permutations
        n = g.order
        brute = n <= 1 or any(
            all(g.has_edge(order[i], order[i + 1]) for i in range(n - 1))
            for order in permutations(range(n)))
        assert g.has_hamiltonian_path() == brute
