"""Exact solvers for domination and total domination numbers.

Both quantities are minimum covering problems: choosing vertex x covers its
closed neighborhood (domination) or its open neighborhood (total domination),
and every vertex must end up covered.  The search is an iterative-deepening
branch and bound over vertex subsets: branch on the uncovered vertex with the
fewest remaining candidates, prune with a greedy coverage count and a
disjoint-candidate packing count, and remember failed coverage states so
permuted orderings are not explored twice.  Disconnected inputs are solved
per component and summed.

For middle graphs of connected bases of order at least three, any total
dominating set can be pushed onto edge nodes without growing (see
``edgeify``), so ``total_domination_number_middle`` restricts its choosers to
edge nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import EdgeNode, Graph, Original
from .operators import MiddleGraph, middle_graph

_CACHE_CAP = 1_500_000


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    nodes_explored: int


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True when every vertex is in s or adjacent to a member of s."""
    mask = _vertex_mask(g, s)
    return all(mask >> v & 1 or g.neighbor_mask(v) & mask
               for v in range(g.order))


def is_total_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True when every vertex has a neighbor in s (members included)."""
    mask = _vertex_mask(g, s)
    return all(g.neighbor_mask(v) & mask for v in range(g.order))


def _vertex_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.order:
            raise ValueError(f"invalid vertex {v}: order is {g.order}")
        mask |= 1 << v
    return mask


def _packing(universe: int, cand: list[int]) -> int:
    """Greedy count of targets with pairwise disjoint candidate sets, taking
    targets with the fewest candidates first.  Disjoint candidate sets need
    one chooser each, so the count lower-bounds every cover."""
    targets = []
    m = universe
    while m:
        b = m & -m
        m ^= b
        cb = cand[b.bit_length() - 1]
        targets.append((cb.bit_count(), b, cb))
    targets.sort()
    pack = 0
    used = 0
    for _, _, cb in targets:
        if not cb & used:
            pack += 1
            used |= cb
    return pack


def _min_cover(universe: int, choosers: list[int], covers: list[int]):
    """Smallest subset of choosers whose covers together contain universe.

    Returns (value, chosen vertex ids, nodes explored), or None when some
    target has no candidate at all.
    """
    ucount = universe.bit_count()
    if ucount == 0:
        return 0, [], 0
    top = universe.bit_length()
    cand = [0] * top
    for pos, cm in enumerate(covers):
        m = cm & universe
        while m:
            b = m & -m
            cand[b.bit_length() - 1] |= 1 << pos
            m ^= b

    m = universe
    maxcov0 = 0
    while m:
        b = m & -m
        if not cand[b.bit_length() - 1]:
            return None
        m ^= b
    for cm in covers:
        c = (cm & universe).bit_count()
        if c > maxcov0:
            maxcov0 = c

    # greedy solution gives the deepening cutoff
    U = universe
    greedy: list[int] = []
    nch = len(covers)
    while U:
        best_pos = 0
        best_cov = -1
        for pos in range(nch):
            c = (covers[pos] & U).bit_count()
            if c > best_cov:
                best_cov = c
                best_pos = pos
        greedy.append(best_pos)
        U &= ~covers[best_pos]
    ub = len(greedy)

    pack0 = _packing(universe, cand)
    lb = max(pack0, -(-ucount // maxcov0), 1)

    nodes = 0
    cache: dict[int, int] = {}
    chosen: list[int] = []
    found: list[int] | None = None

    def dfs(covered: int, rem: int) -> bool:
        nonlocal nodes, found
        nodes += 1
        U = universe & ~covered
        if not U:
            found = chosen.copy()
            return True
        if rem == 0:
            return False
        prev = cache.get(covered, -1)
        if prev >= rem:
            return False
        if len(cache) < _CACHE_CAP:
            cache[covered] = rem

        targets = []
        m = U
        while m:
            b = m & -m
            m ^= b
            cb = cand[b.bit_length() - 1]
            cnt = cb.bit_count()
            if not cnt:
                return False
            targets.append((cnt, b, cb))
        targets.sort()
        pack = 0
        used = 0
        for _, _, cb in targets:
            if not cb & used:
                pack += 1
                used |= cb
        if pack > rem:
            return False
        best_cnt, _, best_cb = targets[0]
        ucnt = len(targets)
        if ucnt > rem:
            maxcov = 0
            for cm in covers:
                c = (cm & U).bit_count()
                if c > maxcov:
                    maxcov = c
            if maxcov * rem < ucnt:
                return False

        if best_cnt == 1:
            pos = best_cb.bit_length() - 1
            chosen.append(pos)
            if dfs(covered | covers[pos], rem - 1):
                return True
            chosen.pop()
            return False
        cands = []
        cb = best_cb
        while cb:
            pb = cb & -cb
            cb ^= pb
            pos = pb.bit_length() - 1
            cands.append((-(covers[pos] & U).bit_count(), pos))
        cands.sort()
        for _, pos in cands:
            chosen.append(pos)
            if dfs(covered | covers[pos], rem - 1):
                return True
            chosen.pop()
        return False

    for k in range(lb, ub):
        if dfs(0, k):
            return len(found), [choosers[p] for p in found], nodes
    return ub, [choosers[p] for p in greedy], nodes


def _solve_components(g: Graph, open_neighborhoods: bool,
                      allowed: frozenset[int] | None) -> SolveResult:
    total = 0
    witness: list[int] = []
    nodes = 0
    for comp in g.connected_components():
        if open_neighborhoods and len(comp) == 1:
            raise ValueError(
                "total domination undefined: isolated vertex "
                f"{min(comp)}")
        universe = 0
        for v in comp:
            universe |= 1 << v
        choosers = sorted(comp if allowed is None else comp & allowed)
        if open_neighborhoods:
            covers = [g.neighbor_mask(v) for v in choosers]
        else:
            covers = [g.neighbor_mask(v) | 1 << v for v in choosers]
        solved = _min_cover(universe, choosers, covers)
        if solved is None:
            raise ValueError("no feasible set: some vertex has no allowed coverer")
        value, part, explored = solved
        total += value
        witness += part
        nodes += explored
    return SolveResult(total, frozenset(witness), nodes)


def total_domination_number(g: Graph) -> SolveResult:
    """Exact total domination number; errors on isolated vertices."""
    return _solve_components(g, open_neighborhoods=True, allowed=None)


def domination_number(g: Graph) -> SolveResult:
    """Exact domination number (defined for every graph)."""
    return _solve_components(g, open_neighborhoods=False, allowed=None)


def total_domination_number_middle(mg: MiddleGraph) -> SolveResult:
    """Total domination number of a middle graph, searching edge nodes only.

    Valid when the base graph is connected with order at least three; the
    witness then consists of edge nodes and matches the unrestricted optimum.
    """
    base = _base_graph(mg)
    if base.order < 3 or not base.is_connected():
        raise ValueError(
            "edge-node search needs a connected base of order >= 3; "
            "use total_domination_number instead")
    allowed = frozenset(mg.edge_nodes)
    return _solve_components(mg.graph, open_neighborhoods=True, allowed=allowed)


def middle_total_domination(g: Graph) -> SolveResult:
    """Total domination number of the middle graph of g, for any base g.

    Components of order >= 3 are searched over edge nodes; two-vertex
    components keep their originals as choosers (their middle graph is a
    three-vertex path, which has no edge-only total dominating set).
    """
    mg = middle_graph(g)
    allowed = set(mg.edge_nodes)
    for comp in g.connected_components():
        if len(comp) == 1:
            raise ValueError(
                f"total domination undefined: isolated vertex {min(comp)}")
        if len(comp) == 2:
            allowed.update(comp)
    return _solve_components(mg.graph, open_neighborhoods=True,
                             allowed=frozenset(allowed))


def _base_graph(mg: MiddleGraph) -> Graph:
    return Graph(mg.base_order, mg.edge_node_index.keys())


def edgeify(mg: MiddleGraph, s: Iterable[int]) -> frozenset[int]:
    """Push a total dominating set of a middle graph onto edge nodes.

    Repeatedly takes the lowest original vertex v still in the set: if some
    incident edge node is missing, v is swapped for the lowest such one;
    otherwise v is dropped, except that a degree-one v whose single edge node
    would lose its last covering neighbor is swapped for an edge node at the
    edge's other endpoint.  Every step keeps the set total dominating, so the
    result is an edge-node-only total dominating set no larger than the input.
    """
    graph = mg.graph
    base = _base_graph(mg)
    if any(len(c) < 3 for c in base.connected_components()):
        raise ValueError("edge-node conversion needs base components of order >= 3")
    current = set()
    for v in s:
        if not 0 <= v < graph.order:
            raise ValueError(f"invalid vertex {v}: order is {graph.order}")
        current.add(v)
    if not is_total_dominating(graph, current):
        raise ValueError("input is not a total dominating set")
    originals = sorted(v for v in current if isinstance(graph.label(v), Original))
    for v in originals:
        incident = graph.neighbor_tuple(v)
        missing = [e for e in incident if e not in current]
        current.discard(v)
        if missing:
            current.add(missing[0])
            continue
        if len(incident) == 1:
            lone = incident[0]
            if not any(x in current for x in graph.neighbor_tuple(lone)):
                i, j = graph.label(lone).endpoints
                other = j if i == v else i
                for e in graph.neighbor_tuple(other):
                    if isinstance(graph.label(e), EdgeNode) and e not in current:
                        current.add(e)
                        break
    return frozenset(current)


def min_total_dom_over_subsets(g: Graph, k: int) -> int | None:
    """Minimum of the middle graph's total domination number over all induced
    subgraphs on k vertices without isolated vertices; None when no such
    subgraph exists."""
    if not 1 <= k <= g.order:
        raise ValueError(f"subset size must lie in 1..{g.order}, got {k}")
    best: int | None = None
    for sel in combinations(range(g.order), k):
        sub = g.induced_subgraph(sel)
        if any(sub.degree(v) == 0 for v in range(k)):
            continue
        value = middle_total_domination(sub).value
        if best is None or value < best:
            best = value
    return best
