"""Graph operators: middle graph, line graph, coronas, and join.

The middle graph of G subdivides every edge and then joins edge nodes that
came from edges sharing an endpoint.  Concretely its vertex set is
V(G) together with one node per edge of G; an edge node is adjacent to both
endpoints of its edge and to every edge node whose edge meets it, and no two
original vertices are ever adjacent.  Edge nodes are created in ascending
lexicographic order of their endpoint pairs, after the base vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeNode, Graph, Original


@dataclass(frozen=True)
class MiddleGraph:
    """A middle graph plus the bookkeeping linking edge nodes to base edges."""

    graph: Graph
    base_order: int
    edge_node_index: dict[tuple[int, int], int]

    @property
    def edge_nodes(self) -> tuple[int, ...]:
        return tuple(range(self.base_order, self.graph.order))

    def edge_node(self, u: int, v: int) -> int:
        """Index of the edge node standing for base edge {u, v}."""
        key = (u, v) if u < v else (v, u)
        if key not in self.edge_node_index:
            raise ValueError(f"no base edge {key}")
        return self.edge_node_index[key]


def middle_graph(g: Graph) -> MiddleGraph:
    """Middle graph of g, with labels recording each vertex's origin."""
    n = g.order
    base_edges = g.edges
    index = {e: n + k for k, e in enumerate(base_edges)}
    edges = []
    for (u, v), node in index.items():
        edges.append((u, node))
        edges.append((v, node))
    for v in range(n):
        inc = [index[(min(v, w), max(v, w))] for w in g.neighbor_tuple(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                x, y = inc[a], inc[b]
                edges.append((x, y) if x < y else (y, x))
    labels = [Original(k) for k in range(n)]
    labels += [EdgeNode(u, v) for u, v in base_edges]
    mg = Graph(n + len(base_edges), sorted(set(edges)), labels=labels)
    return MiddleGraph(graph=mg, base_order=n, edge_node_index=index)


def line_graph(g: Graph) -> Graph:
    """Line graph of g; vertex k is labeled with the k-th base edge."""
    base_edges = g.edges
    index = {e: k for k, e in enumerate(base_edges)}
    edges = set()
    for v in range(g.order):
        inc = [index[(min(v, w), max(v, w))] for w in g.neighbor_tuple(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                x, y = inc[a], inc[b]
                edges.add((x, y) if x < y else (y, x))
    return Graph(len(base_edges), sorted(edges),
                 labels=[EdgeNode(u, v) for u, v in base_edges])


def corona_k1(g: Graph) -> Graph:
    """Corona with a single vertex: pendant n+i hangs off each vertex i."""
    n = g.order
    edges = list(g.edges) + [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def two_corona(g: Graph) -> Graph:
    """Corona with a two-vertex path: i - (n+i) - (2n+i) for each vertex i."""
    n = g.order
    edges = list(g.edges)
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, 2 * n + i) for i in range(n)]
    return Graph(3 * n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Join of g and h: disjoint union plus all edges between the two parts."""
    n = g.order
    edges = list(g.edges)
    edges += [(n + u, n + v) for u, v in h.edges]
    edges += [(i, n + j) for i in range(n) for j in range(h.order)]
    return Graph(n + h.order, edges)
