"""Parametric graph families and exhaustive small-graph enumerators.

Index conventions (all 0-based) follow the constructions used throughout the
package: stars put the hub at vertex 0; double stars use hub 0, middle
vertices 1..n and outer leaves n+1..2n; complete bipartite graphs put the
smaller side first; friendship graphs put the hub at 0 with rim pairs
(2k+1, 2k+2); wheels of order n are a hub at index n-1 joined to the cycle
0..n-2, so that joining a cycle with a one-vertex edgeless graph reproduces
them index for index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Iterator

from .graph import Graph


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, edges (i, i+1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    """Graph on n >= 1 vertices with no edges."""
    if n < 1:
        raise ValueError(f"edgeless graph needs n >= 1, got {n}")
    return Graph(n, [])


def star(n: int) -> Graph:
    """Star with hub 0 and n >= 1 leaves 1..n."""
    if n < 1:
        raise ValueError(f"star needs n >= 1 leaves, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def double_star(n: int) -> Graph:
    """Hub 0 joined to 1..n, each i of those carrying one extra leaf n+i."""
    if n < 1:
        raise ValueError(f"double star needs n >= 1, got {n}")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return Graph(2 * n + 1, edges)


def complete_bipartite(n1: int, n2: int) -> Graph:
    """Complete bipartite graph with sides 0..n1-1 and n1..n1+n2-1."""
    if n1 < 1 or n2 < 1:
        raise ValueError(f"complete bipartite needs both sides >= 1, got ({n1}, {n2})")
    return Graph(n1 + n2, [(i, n1 + j) for i in range(n1) for j in range(n2)])


def friendship(n: int) -> Graph:
    """n >= 1 triangles glued at hub 0; rim pairs are (2k+1, 2k+2)."""
    if n < 1:
        raise ValueError(f"friendship graph needs n >= 1, got {n}")
    edges = [(0, i) for i in range(1, 2 * n + 1)]
    edges += [(2 * k + 1, 2 * k + 2) for k in range(n)]
    return Graph(2 * n + 1, edges)


def wheel(n: int) -> Graph:
    """Wheel of order n >= 4: hub n-1 joined to the cycle 0..n-2."""
    if n < 4:
        raise ValueError(f"wheel needs order n >= 4, got {n}")
    rim = [(i, i + 1) for i in range(n - 2)] + [(0, n - 2)]
    return Graph(n, rim + [(i, n - 1) for i in range(n - 1)])


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    DOUBLE_STAR = "double-star"
    COMPLETE_BIPARTITE = "complete-bipartite"
    FRIENDSHIP = "friendship"
    WHEEL = "wheel"


_BUILDERS = {
    Family.PATH: path,
    Family.CYCLE: cycle,
    Family.COMPLETE: complete,
    Family.STAR: star,
    Family.DOUBLE_STAR: double_star,
    Family.COMPLETE_BIPARTITE: complete_bipartite,
    Family.FRIENDSHIP: friendship,
    Family.WHEEL: wheel,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family together with its parameter tuple (two for bipartite, one else)."""

    family: Family
    params: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        want = 2 if self.family is Family.COMPLETE_BIPARTITE else 1
        if len(self.params) != want:
            raise ValueError(
                f"{self.family.value} takes {want} parameter(s), got {len(self.params)}")


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a family spec."""
    return _BUILDERS[spec.family](*spec.params)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (n <= 7), in edge-bitmask order."""
    if not 1 <= n <= 7:
        raise ValueError(f"all_graphs supports 1 <= n <= 7, got {n}")
    slots = list(combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        edges = [slots[b] for b in range(len(slots)) if mask >> b & 1]
        yield Graph(n, edges)


def _tree_from_pruefer(seq: tuple[int, ...], n: int) -> Graph:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1) if leaf < n - 1 else (n - 1, leaf))
    return Graph(n, edges)


def all_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices (1 <= n <= 10), via Pruefer sequences."""
    if not 1 <= n <= 10:
        raise ValueError(f"all_trees supports 1 <= n <= 10, got {n}")
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield _tree_from_pruefer(seq, n)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi draw, retried until connected (tree fallback after 1000)."""
    if n < 1:
        raise ValueError(f"random graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    slots = list(combinations(range(n), 2))
    for _ in range(1000):
        edges = [e for e in slots if rng.random() < p]
        g = Graph(n, edges)
        if g.is_connected():
            return g
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    tree = set(_tree_from_pruefer(seq, n).edges)
    for e in slots:
        if e not in tree and rng.random() < p:
            tree.add(e)
    return Graph(n, sorted(tree))
