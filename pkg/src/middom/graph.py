"""Immutable undirected simple graphs with provenance-carrying vertex labels.

Vertices are dense indices 0..order-1.  Each vertex carries a label telling
where it came from: ``Original(k)`` marks a vertex of a base graph, while
``EdgeNode(i, j)`` marks a vertex that stands for the base edge {i, j}.
Adjacency is kept both as sorted tuples (for iteration) and as bitmask rows
(for the exact search code, which lives on integer bit operations).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Original:
    """Label for a vertex inherited from a base graph."""

    index: int


@dataclass(frozen=True)
class EdgeNode:
    """Label for a vertex that represents the base edge {i, j}, i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise ValueError(f"edge node endpoints must satisfy 0 <= i < j, got ({self.i}, {self.j})")

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.i, self.j)


VertexLabel = Original | EdgeNode


class Graph:
    """Undirected simple graph on vertices 0..order-1, immutable once built."""

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_labels")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]],
                 labels: Iterable[VertexLabel] | None = None):
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        self._n = order
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"invalid vertex in edge ({u}, {v}): order is {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(nb)) for nb in adj)
        masks = []
        for nb in self._adj:
            m = 0
            for v in nb:
                m |= 1 << v
            masks.append(m)
        self._masks = tuple(masks)
        if labels is None:
            self._labels = tuple(Original(k) for k in range(order))
        else:
            self._labels = tuple(labels)
            if len(self._labels) != order:
                raise ValueError(f"expected {order} labels, got {len(self._labels)}")
            if len(set(self._labels)) != order:
                raise ValueError("vertex labels must be pairwise distinct")

    # -- basic views ------------------------------------------------------

    @property
    def order(self) -> int:
        return self._n

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def labels(self) -> tuple[VertexLabel, ...]:
        return self._labels

    def label(self, v: int) -> VertexLabel:
        self._check_vertex(v)
        return self._labels[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of v as a set of indices."""
        self._check_vertex(v)
        return frozenset(self._adj[v])

    def neighbor_tuple(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Open neighborhood of v as a bitmask."""
        self._check_vertex(v)
        return self._masks[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise ValueError(f"invalid vertex {v}: order is {self._n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n == other._n and self._edges == other._edges
                and self._labels == other._labels)

    def __hash__(self) -> int:
        return hash((self._n, self._edges, self._labels))

    def __repr__(self) -> str:
        return f"Graph(order={self._n}, size={self.size})"

    # -- connectivity and metric ------------------------------------------

    def connected_components(self) -> list[frozenset[int]]:
        """Components as vertex sets, ordered by smallest member."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.connected_components()) == 1

    def is_tree(self) -> bool:
        return self._n >= 1 and self.size == self._n - 1 and self.is_connected()

    def _bfs_depths(self, s: int) -> list[int]:
        dist = [-1] * self._n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in self._adj[u]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def eccentricity(self, v: int) -> int:
        self._check_vertex(v)
        dist = self._bfs_depths(v)
        if min(dist) < 0:
            raise ValueError("diameter undefined: graph is disconnected")
        return max(dist)

    def diameter(self) -> int:
        """Largest eccentricity; raises on disconnected input."""
        if self._n == 0:
            raise ValueError("diameter undefined: graph is empty")
        return max(self.eccentricity(v) for v in range(self._n))

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on the given vertices, reindexed ascending, labels kept."""
        sel = sorted(set(vertices))
        if not sel:
            raise ValueError("induced subgraph needs at least one vertex")
        for v in sel:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(sel)}
        edges = [(pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos]
        return Graph(len(sel), edges, labels=[self._labels[v] for v in sel])

    def remove_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        if self._n < 2:
            raise ValueError("cannot remove the last vertex")
        return self.induced_subgraph(u for u in range(self._n) if u != v)

    def complement(self) -> "Graph":
        edges = [(u, v) for u, v in combinations(range(self._n), 2)
                 if not self._masks[u] >> v & 1]
        return Graph(self._n, edges, labels=self._labels)

    def leaves(self) -> frozenset[int]:
        """Vertices of degree exactly one."""
        return frozenset(v for v in range(self._n) if len(self._adj[v]) == 1)

    def spanning_tree(self) -> "Graph":
        """BFS tree from vertex 0, visiting neighbors in ascending order."""
        if self._n == 0:
            raise ValueError("spanning tree undefined: graph is empty")
        seen = [False] * self._n
        seen[0] = True
        frontier = [0]
        edges = []
        count = 1
        while frontier:
            nxt = []
            for u in frontier:
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        count += 1
                        edges.append((u, w) if u < w else (w, u))
                        nxt.append(w)
            frontier = nxt
        if count != self._n:
            raise ValueError("spanning tree undefined: graph is disconnected")
        return Graph(self._n, edges, labels=self._labels)

    def has_hamiltonian_path(self) -> bool:
        """Exact test via dynamic programming over (visited-set, endpoint) states."""
        n = self._n
        if n <= 1:
            return True
        masks = self._masks
        # endp[m] = bitmask of vertices that can end a path visiting exactly set m
        endp = [0] * (1 << n)
        for v in range(n):
            endp[1 << v] = 1 << v
        full = (1 << n) - 1
        for m in range(1, 1 << n):
            ends = endp[m]
            if not ends:
                continue
            if m == full:
                return True
            v = 0
            while ends:
                if ends & 1:
                    ext = masks[v] & ~m
                    while ext:
                        low = ext & -ext
                        endp[m | low] |= low
                        ext ^= low
                ends >>= 1
                v += 1
        return bool(endp[full])


def vertices_by_label(g: Graph) -> dict[VertexLabel, int]:
    """Reverse lookup from label to vertex index."""
    return {lab: v for v, lab in enumerate(g.labels)}
