"""Graph exchange format: round trips and line-numbered parse errors."""

import pytest
from hypothesis import given

from middom import (
    EdgeNode,
    Graph,
    Original,
    complete_bipartite,
    corona_k1,
    line_graph,
    middle_graph,
    path,
    random_connected_graph,
    read_graph,
    star,
    write_graph,
)

from test_graph import graphs


class TestWrite:
    def test_plain_graph(self):
        assert write_graph(path(3)) == "3 2\n0 1\n1 2\n"

    def test_empty_graph(self):
        assert write_graph(Graph(0, [])) == "0 0\n"

    def test_middle_graph_labels(self):
        text = write_graph(middle_graph(path(3)).graph)
        assert text == ("5 5\n"
                        "0 3\n1 3\n1 4\n2 4\n3 4\n"
                        "# label 3 edge 0 1\n"
                        "# label 4 edge 1 2\n")

    def test_original_labels_written_when_shifted(self):
        g = Graph(2, [(0, 1)], labels=[Original(4), Original(9)])
        assert "# label 0 original 4" in write_graph(g)
        assert "# label 1 original 9" in write_graph(g)


class TestRoundTrip:
    @pytest.mark.parametrize("g", [
        path(1),
        path(6),
        star(4),
        complete_bipartite(2, 3),
        middle_graph(path(4)).graph,
        middle_graph(corona_k1(path(4))).graph,
        line_graph(star(3)),
        random_connected_graph(7, 0.4, seed=9),
        Graph(3, []),
    ])
    def test_named_instances(self, g):
        assert read_graph(write_graph(g)) == g

    @given(graphs)
    def test_arbitrary_graphs(self, g):
        assert read_graph(write_graph(g)) == g

    def test_blank_lines_and_plain_comments_ignored(self):
        text = "# a remark\n\n3 1\n\n# another\n0 2\n"
        assert read_graph(text) == Graph(3, [(0, 2)])


class TestParseErrors:
    @pytest.mark.parametrize("text, message", [
        ("", r"line 1: missing 'n m' header"),
        ("3\n", r"line 1: header must be 'n m'"),
        ("a 2\n", r"line 1: .* must be an integer"),
        ("-1 0\n", r"line 1: header values must be"),
        ("2 1\n0 0\n", r"line 2: self-loop at vertex 0"),
        ("2 1\n0 2\n", r"line 2: edge \(0, 2\) out of range for order 2"),
        ("2 1\n1 0\n", r"line 2: edge endpoints must be ascending"),
        ("3 2\n0 1\n0 1\n", r"line 3: duplicate edge \(0, 1\)"),
        ("3 2\n0 1\n", r"header promises 2 edges, found 1"),
        ("2 0\n0 1\n", r"header promises 0 edges, found 1"),
        ("1 0\n# label 3 original 0\n", r"line 2: .*vertex 3"),
        ("1 0\n# label 0 original 1\n# label 0 original 2\n",
         r"line 3: duplicate label for vertex 0"),
        ("1 0\n# label 0 sideways 4\n", r"line 2: malformed label comment"),
        ("1 0\n# label 0 edge 2 1\n", r"line 2: .*0 <= i < j"),
    ])
    def test_messages_carry_line_numbers(self, text, message):
        with pytest.raises(ValueError, match=message):
            read_graph(text)

    def test_labels_must_stay_distinct(self):
        text = "2 0\n# label 0 original 1\n"
        with pytest.raises(ValueError, match="pairwise distinct"):
            read_graph(text)

    def test_label_comment_round_trip_for_edge_nodes(self):
        g = read_graph("2 1\n0 1\n# label 0 original 5\n# label 1 edge 2 7\n")
        assert g.labels == (Original(5), EdgeNode(2, 7))
        assert read_graph(write_graph(g)) == g
