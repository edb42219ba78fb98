"""Verification campaigns: replay every supported statement on a parameter
grid and compare its prediction against the exact solver.

Each campaign produces a `VerificationReport` whose rows are either single
instances (one parameter point, one solver value, optionally one witness
check) or exhaustive scans (one row per order, reporting how many graphs
were covered and how many violated the claim).  Reports render as aligned
text for reading and as CSV for machines; row content is deterministic
across runs, with fixed seeds for every sampled instance.

Scans enumerate labeled graphs as bitmasks over the ascending vertex pairs,
so they can be chunked across worker processes.  The worker count comes
from the MIDDOM_WORKERS environment variable, defaulting to the available
parallelism.
"""

from __future__ import annotations

import csv
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from io import StringIO
from itertools import combinations
from time import perf_counter
from typing import Callable, Iterable

from .families import (
    all_trees,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    edgeless,
    friendship,
    path,
    random_connected_graph,
    star,
    wheel,
)
from .formulas import (
    NordhausGaddumBounds,
    TheoremId,
    Witness,
    closed_form,
    construct_witness,
    diam3_leaf_counts,
    general_bounds,
    join_small_p_bounds,
    nordhaus_gaddum_bounds,
    plus_one_vertex_sandwich,
    tree_diam3,
    two_thirds,
)
from .graph import Graph
from .operators import corona_k1, join, middle_graph, two_corona
from .solver import (
    domination_number,
    is_total_dominating,
    middle_total_domination,
)


@dataclass(frozen=True)
class InstanceRecord:
    """One report row: a parameter point with its expected and solved values.

    Scan rows aggregate many graphs; there `expected` describes the claim,
    `got` counts violations, and zero violations means pass.
    """
    params: tuple[tuple[str, object], ...]
    expected: str
    got: int
    witness_size: int | None
    status: bool


@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremId
    instances: tuple[InstanceRecord, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(r.status for r in self.instances)

    @property
    def counts(self) -> tuple[int, int]:
        good = sum(1 for r in self.instances if r.status)
        return good, len(self.instances) - good


@dataclass(frozen=True)
class NordhausGaddumRecord:
    """Both middle-graph total domination values for a graph and its
    complement, with the sum/product bounds they are measured against.

    `encoding` is the edge bitstring over ascending vertex pairs (character
    k is '1' when the k-th pair in lexicographic order is an edge).
    `hypothesis_ok` marks graphs where both sides are free of isolated
    vertices and of two-vertex components; only those face the bounds.
    """
    n: int
    encoding: str
    gt_g: int
    gt_gbar: int
    sum: int
    product: int
    bounds: NordhausGaddumBounds
    hypothesis_ok: bool

    def __post_init__(self) -> None:
        if self.sum != self.gt_g + self.gt_gbar:
            raise ValueError("sum field must equal gt_g + gt_gbar")
        if self.product != self.gt_g * self.gt_gbar:
            raise ValueError("product field must equal gt_g * gt_gbar")

    @property
    def within_bounds(self) -> bool:
        b = self.bounds
        return (b.sum_lower <= self.sum <= b.sum_upper
                and b.product_lower <= self.product <= b.product_upper)


DEFAULT_GRID: dict[TheoremId, dict[str, object]] = {
    TheoremId.STAR_FORMULA: {"n": range(2, 9)},
    TheoremId.DOUBLE_STAR_FORMULA: {"n": range(1, 6)},
    TheoremId.PATH_FORMULA: {"n": range(3, 11)},
    TheoremId.COMPLETE_FORMULA: {"n": range(2, 9)},
    TheoremId.GENERAL_BOUNDS: {"n": range(3, 7)},
    TheoremId.HAM_PATH_FORMULA: {"n": range(3, 8)},
    TheoremId.FAMILY_COROLLARY: {
        "path": range(3, 10), "cycle": range(3, 10),
        "wheel": range(4, 10), "complete": range(3, 10)},
    TheoremId.FRIENDSHIP_FORMULA: {"n": range(2, 5)},
    TheoremId.COMPLETE_BIPARTITE_FORMULA: {"n1": range(2, 7),
                                           "n2": range(2, 7)},
    TheoremId.LEAF_LOWER_BOUND: {"n": range(2, 9)},
    TheoremId.TREE_DIAM3: {"n": range(4, 9)},
    TheoremId.TREE_DIAM2: {"n": range(3, 9)},
    TheoremId.CORONA_IDENTITY: {"tree_n": range(2, 7), "random": 25,
                                "random_n": range(2, 7)},
    TheoremId.TWO_CORONA_IDENTITY: {"tree_n": range(2, 7), "random": 25,
                                    "random_n": range(2, 7)},
    TheoremId.JOIN_EMPTY_FORMULA: {"n": range(4, 7),
                                   "families": ("path", "cycle", "complete")},
    TheoremId.JOIN_SMALL_P_BOUNDS: {
        "instances": (("star", 8, 1), ("path", 8, 1), ("cycle", 6, 1))},
    TheoremId.PLUS_ONE_VERTEX_SANDWICH: {
        "join_n": range(3, 6), "join_sample_n": 6, "join_sample": 300,
        "delete_n": range(3, 7), "delete_sample_n": 7, "delete_sample": 300},
    TheoremId.STAR_JOIN_K1: {"n": range(4, 9)},
    TheoremId.HAM_PATH_JOIN_FORMULA: {
        "n": range(4, 7), "families": ("path", "cycle", "complete")},
    TheoremId.NORDHAUS_GADDUM: {"n": (4, 5), "slow_n": (6,)},
}

_FAMILY_BUILDERS: dict[str, Callable[[int], Graph]] = {
    "path": path, "cycle": cycle, "complete": complete, "wheel": wheel,
}


def _worker_count() -> int:
    env = os.environ.get("MIDDOM_WORKERS")
    if env is not None:
        try:
            count = int(env)
        except ValueError:
            raise ValueError(
                f"MIDDOM_WORKERS must be a positive integer, got {env!r}"
            ) from None
        if count < 1:
            raise ValueError(
                f"MIDDOM_WORKERS must be a positive integer, got {env!r}")
        return count
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


# -- solver access with memoization ----------------------------------------

_GT_MEMO: dict[tuple, int] = {}
_GAMMA_MEMO: dict[tuple, int] = {}


def _gt(g: Graph) -> int:
    """Total domination number of M(g), memoized by edge set."""
    key = (g.order, g.edges)
    value = _GT_MEMO.get(key)
    if value is None:
        value = middle_total_domination(g).value
        _GT_MEMO[key] = value
    return value


def _gamma_middle(g: Graph) -> int:
    """Domination number of M(g), memoized by edge set."""
    key = (g.order, g.edges)
    value = _GAMMA_MEMO.get(key)
    if value is None:
        value = domination_number(middle_graph(g).graph).value
        _GAMMA_MEMO[key] = value
    return value


# -- labeled-graph scans over edge bitmasks --------------------------------

def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def _mask_graph(n: int, pairs: tuple[tuple[int, int], ...], mask: int,
                extra: tuple[tuple[int, int], ...] = ()) -> Graph:
    edges = list(extra)
    m = mask
    while m:
        b = m & -m
        m ^= b
        edges.append(pairs[b.bit_length() - 1])
    return Graph(n, edges)


def _general_chunk(args: tuple) -> tuple[int, list[int]]:
    """Count connected graphs in a mask range; list bound violations."""
    n, pairs, lo, hi = args
    lower, upper = two_thirds(n), n - 1
    count = 0
    bad: list[int] = []
    for mask in range(lo, hi):
        g = _mask_graph(n, pairs, mask)
        if not g.is_connected():
            continue
        count += 1
        if not lower <= _gt(g) <= upper:
            bad.append(mask)
    return count, bad


def _ham_chunk(args: tuple) -> tuple[int, list[int]]:
    """Spanning-path graphs in a mask range; list equality violations.

    With `extra` empty, the range runs over whole edge sets and each graph
    is filtered for connectivity and a Hamiltonian path.  With `extra` set
    to a spanning path, the range runs over the remaining pair slots and
    every generated graph qualifies by construction.
    """
    n, pairs, lo, hi, extra = args
    expected = two_thirds(n)
    count = 0
    bad: list[int] = []
    for mask in range(lo, hi):
        g = _mask_graph(n, pairs, mask, extra)
        if not extra:
            if not g.is_connected() or not g.has_hamiltonian_path():
                continue
        count += 1
        if _gt(g) != expected:
            bad.append(mask)
    return count, bad


def _sandwich_chunk(args: tuple) -> tuple[int, list[int]]:
    """Graphs without isolated vertices in a mask list; list violations of
    the one-extra-vertex interval."""
    n, pairs, masks = args
    count = 0
    bad: list[int] = []
    for mask in masks:
        g = _mask_graph(n, pairs, mask)
        if any(g.degree(v) == 0 for v in range(n)):
            continue
        count += 1
        result = plus_one_vertex_sandwich(g)
        if not result.contains(_gt(join(g, edgeless(1)))):
            bad.append(mask)
    return count, bad


def _deletion_chunk(args: tuple) -> tuple[int, int, list[int]]:
    """Connected graphs in a mask range; check the vertex-deletion sandwich
    at every vertex with no degree-1 neighbor."""
    n, pairs, lo, hi = args
    graphs = 0
    checks = 0
    bad: list[int] = []
    for mask in range(lo, hi):
        g = _mask_graph(n, pairs, mask)
        if not g.is_connected():
            continue
        graphs += 1
        value = _gt(g)
        for v in range(n):
            if any(g.degree(w) == 1 for w in g.neighbor_tuple(v)):
                continue
            checks += 1
            reduced = _gt(g.remove_vertex(v))
            if not reduced <= value <= reduced + 1:
                bad.append(mask)
    return graphs, checks, bad


def _run_ranges(fn: Callable, args_list: list[tuple], workers: int) -> list:
    if workers <= 1 or len(args_list) <= 1:
        return [fn(a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args_list))


def _split_mask_range(n: int, pairs, total: int, workers: int,
                      tail: tuple = ()) -> list[tuple]:
    chunks = max(1, min(workers * 4, total))
    step = -(-total // chunks)
    return [(n, pairs, lo, min(total, lo + step)) + tail
            for lo in range(0, total, step)]


# -- tree enumeration with isomorphism dedup -------------------------------

def _tree_key(t: Graph) -> str:
    """Canonical string of a tree: encode rooted at the center (taking the
    smaller encoding when there are two central vertices)."""
    n = t.order
    if n == 1:
        return "()"
    degree = [t.degree(v) for v in range(n)]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in t.neighbor_tuple(v):
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = layer

    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(w, v) for w in t.neighbor_tuple(v)
                      if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in centers)


def _tree_classes(n: int) -> list[tuple[Graph, int]]:
    """One representative per unlabeled tree on n vertices, with the number
    of labeled trees in its class."""
    reps: dict[str, Graph] = {}
    counts: dict[str, int] = {}
    for t in all_trees(n):
        key = _tree_key(t)
        if key not in reps:
            reps[key] = t
        counts[key] = counts.get(key, 0) + 1
    return [(reps[k], counts[k]) for k in sorted(reps)]


def _depth2_binary_tree() -> Graph:
    """Seven-vertex tree: a root with two children, each carrying two
    leaves.  Its leaf count is 4 while its middle graph needs 5."""
    return Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


# -- report rows ------------------------------------------------------------

def _formula_row(params: list[tuple[str, object]], expected: int, got: int,
                 witness: Witness | None) -> InstanceRecord:
    size = None
    ok = got == expected
    if witness is not None:
        size = len(witness.vertices)
        ok = ok and size == expected and is_total_dominating(
            witness.middle.graph, witness.vertices)
    return InstanceRecord(tuple(params), str(expected), got, size, ok)


def _scan_row(params: list[tuple[str, object]], claim: str,
              violations: int) -> InstanceRecord:
    return InstanceRecord(tuple(params), claim, violations, None,
                          violations == 0)


def _clamp(rng: Iterable[int], max_n: int | None) -> list[int]:
    return [n for n in rng if max_n is None or n <= max_n]


# -- per-theorem campaigns ---------------------------------------------------

def _run_star(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        w = construct_witness(TheoremId.STAR_FORMULA, n=n)
        rows.append(_formula_row([("n", n)], n, _gt(star(n)), w))
    return rows


def _run_double_star(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        w = construct_witness(TheoremId.DOUBLE_STAR_FORMULA, n=n)
        rows.append(_formula_row([("n", n)], 2 * n, _gt(double_star(n)), w))
    return rows


def _run_path(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        w = construct_witness(TheoremId.PATH_FORMULA, n=n)
        rows.append(_formula_row([("n", n)], two_thirds(n), _gt(path(n)), w))
    return rows


def _run_complete(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        rows.append(_formula_row([("n", n)], two_thirds(n),
                                 _gt(complete(n)), None))
    return rows


def _run_general_bounds(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        pairs = _pairs(n)
        args = _split_mask_range(n, pairs, 1 << len(pairs), workers)
        results = _run_ranges(_general_chunk, args, workers)
        count = sum(c for c, _ in results)
        bad = sum(len(b) for _, b in results)
        bounds = general_bounds(n)
        rows.append(_scan_row(
            [("n", n), ("graphs", count)],
            f"all in [{bounds.lower}, {bounds.upper}]", bad))
    return rows


def _run_ham_path(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        pairs = _pairs(n)
        if n <= 6:
            args = _split_mask_range(n, pairs, 1 << len(pairs), workers,
                                     tail=((),))
        else:
            # Anchor a fixed spanning path and enumerate the remaining pair
            # slots: every graph with a spanning path is isomorphic to one
            # of these, and each generated graph trivially has one.
            spine = tuple((i, i + 1) for i in range(n - 1))
            free = tuple(p for p in pairs if p not in spine)
            args = _split_mask_range(n, free, 1 << len(free), workers,
                                     tail=(spine,))
        results = _run_ranges(_ham_chunk, args, workers)
        count = sum(c for c, _ in results)
        bad = sum(len(b) for _, b in results)
        rows.append(_scan_row(
            [("n", n), ("graphs", count)], f"all = {two_thirds(n)}", bad))
    return rows


def _run_family_corollary(grid, max_n, slow, workers):
    rows = []
    for name in ("path", "cycle", "wheel", "complete"):
        build = _FAMILY_BUILDERS[name]
        for n in _clamp(grid[name], max_n):
            rows.append(_formula_row([("family", name), ("n", n)],
                                     two_thirds(n), _gt(build(n)), None))
    return rows


def _run_friendship(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        w = construct_witness(TheoremId.FRIENDSHIP_FORMULA, n=n)
        rows.append(_formula_row([("n", n)], 2 * n, _gt(friendship(n)), w))
    return rows


def _run_complete_bipartite(grid, max_n, slow, workers):
    rows = []
    for n1 in _clamp(grid["n1"], max_n):
        for n2 in _clamp(grid["n2"], max_n):
            if n2 < n1:
                continue
            expected = closed_form(TheoremId.COMPLETE_BIPARTITE_FORMULA,
                                   n1=n1, n2=n2).value
            w = construct_witness(TheoremId.COMPLETE_BIPARTITE_FORMULA,
                                  n1=n1, n2=n2)
            rows.append(_formula_row([("n1", n1), ("n2", n2)], expected,
                                     _gt(complete_bipartite(n1, n2)), w))
    return rows


def _run_leaf_bound(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        classes = _tree_classes(n)
        bad = sum(1 for t, _ in classes if _gt(t) < len(t.leaves()))
        labeled = sum(c for _, c in classes)
        rows.append(_scan_row(
            [("n", n), ("trees", labeled), ("classes", len(classes))],
            "gt >= leaves", bad))
    example = _depth2_binary_tree()
    rows.append(_formula_row([("tree", "binary-7")], 5, _gt(example), None))
    return rows


def _run_tree_diam3(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        counts: dict[tuple[int, int], int] = {}
        for t in all_trees(n):
            internal = sum(1 for v in range(n) if t.degree(v) >= 2)
            if internal != 2:
                continue
            p, q = sorted(diam3_leaf_counts(t))
            counts[(p, q)] = counts.get((p, q), 0) + 1
        for (p, q), labeled in sorted(counts.items()):
            expected = closed_form(TheoremId.TREE_DIAM3, p=p, q=q).value
            w = construct_witness(TheoremId.TREE_DIAM3, p=p, q=q)
            rows.append(_formula_row(
                [("n", n), ("p", p), ("q", q), ("trees", labeled)],
                expected, _gt(tree_diam3(p, q)), w))
    return rows


def _run_tree_diam2(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        rows.append(_formula_row([("n", n)], n - 1, _gt(star(n - 1)), None))
    return rows


def _random_instances(grid) -> list[tuple[int, Graph]]:
    ns = list(grid["random_n"])
    out = []
    for i in range(grid["random"]):
        n = ns[i % len(ns)]
        seed = 100 + i
        out.append((seed, random_connected_graph(n, 0.5, seed=seed)))
    return out


def _run_corona(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["tree_n"], max_n):
        bad = 0
        labeled = 0
        for t, count in _tree_classes(n):
            labeled += count
            expected = n + _gamma_middle(t)
            w = construct_witness(
                TheoremId.CORONA_IDENTITY, g=t,
                dom_witness=domination_number(middle_graph(t).graph).witness)
            ok = (_gt(corona_k1(t)) == expected
                  and len(w.vertices) == expected
                  and is_total_dominating(w.middle.graph, w.vertices))
            if not ok:
                bad += 1
        rows.append(_scan_row([("tree_n", n), ("trees", labeled)],
                              "gt = n + gamma", bad))
    for seed, g in _random_instances(grid):
        if max_n is not None and g.order > max_n:
            continue
        expected = g.order + _gamma_middle(g)
        w = construct_witness(
            TheoremId.CORONA_IDENTITY, g=g,
            dom_witness=domination_number(middle_graph(g).graph).witness)
        rows.append(_formula_row([("n", g.order), ("seed", seed)], expected,
                                 _gt(corona_k1(g)), w))
    return rows


def _run_two_corona(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["tree_n"], max_n):
        bad = 0
        labeled = 0
        for t, count in _tree_classes(n):
            labeled += count
            w = construct_witness(TheoremId.TWO_CORONA_IDENTITY, g=t)
            ok = (_gt(two_corona(t)) == 2 * n
                  and len(w.vertices) == 2 * n
                  and is_total_dominating(w.middle.graph, w.vertices))
            if not ok:
                bad += 1
        rows.append(_scan_row([("tree_n", n), ("trees", labeled)],
                              "gt = 2n", bad))
    for seed, g in _random_instances(grid):
        if max_n is not None and g.order > max_n:
            continue
        w = construct_witness(TheoremId.TWO_CORONA_IDENTITY, g=g)
        rows.append(_formula_row([("n", g.order), ("seed", seed)],
                                 2 * g.order, _gt(two_corona(g)), w))
    return rows


def _run_join_empty(grid, max_n, slow, workers):
    rows = []
    for name in grid["families"]:
        build = _FAMILY_BUILDERS[name]
        for n in _clamp(grid["n"], max_n):
            g = build(n)
            ps = list(range(-(-n // 2), 2 * n)) + [2 * n, 2 * n + 1]
            for p in ps:
                expected = closed_form(TheoremId.JOIN_EMPTY_FORMULA,
                                       n=n, p=p).value
                w = construct_witness(TheoremId.JOIN_EMPTY_FORMULA, g=g, p=p)
                rows.append(_formula_row(
                    [("base", name), ("n", n), ("p", p)], expected,
                    _gt(join(g, edgeless(p))), w))
    return rows


def _run_join_small_p(grid, max_n, slow, workers):
    builders = {"star": star, "path": path, "cycle": cycle}
    rows = []
    for name, k, p in grid["instances"]:
        g = builders[name](k)
        result = join_small_p_bounds(g, p)
        got = _gt(join(g, edgeless(p)))
        ok = result.contains(got)
        if name == "star":
            # The two-per-added-vertex upper bound is tight here.
            ok = ok and got == result.upper
        rows.append(InstanceRecord(
            (("base", name), ("k", k), ("p", p)),
            f"[{result.lower}, {result.upper}]", got, None, ok))
    return rows


def _run_sandwich(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["join_n"], max_n):
        pairs = _pairs(n)
        count, bad = _sandwich_chunk((n, pairs, range(1 << len(pairs))))
        rows.append(_scan_row(
            [("op", "add-vertex"), ("n", n), ("graphs", count)],
            "gt <= gt(+1) <= gt+1", len(bad)))
    n = grid["join_sample_n"]
    if max_n is None or n <= max_n:
        pairs = _pairs(n)
        rng = random.Random(606)
        masks = sorted(rng.sample(range(1 << len(pairs)),
                                  grid["join_sample"]))
        count, bad = _sandwich_chunk((n, pairs, masks))
        rows.append(_scan_row(
            [("op", "add-vertex"), ("n", n), ("graphs", count),
             ("sampled", 1)],
            "gt <= gt(+1) <= gt+1", len(bad)))
    for n in _clamp(grid["delete_n"], max_n):
        pairs = _pairs(n)
        args = _split_mask_range(n, pairs, 1 << len(pairs), workers)
        results = _run_ranges(_deletion_chunk, args, workers)
        graphs = sum(g for g, _, _ in results)
        checks = sum(c for _, c, _ in results)
        bad = sum(len(b) for _, _, b in results)
        rows.append(_scan_row(
            [("op", "delete-vertex"), ("n", n), ("graphs", graphs),
             ("checks", checks)],
            "gt(-v) <= gt <= gt(-v)+1", bad))
    n = grid["delete_sample_n"]
    if max_n is None or n <= max_n:
        probs = (0.3, 0.5, 0.7)
        bad = 0
        checks = 0
        for i in range(grid["delete_sample"]):
            g = random_connected_graph(n, probs[i % 3], seed=700 + i)
            value = _gt(g)
            for v in range(n):
                if any(g.degree(w) == 1 for w in g.neighbor_tuple(v)):
                    continue
                checks += 1
                reduced = _gt(g.remove_vertex(v))
                if not reduced <= value <= reduced + 1:
                    bad += 1
        rows.append(_scan_row(
            [("op", "delete-vertex"), ("n", n),
             ("graphs", grid["delete_sample"]), ("checks", checks),
             ("sampled", 1)],
            "gt(-v) <= gt <= gt(-v)+1", bad))
    # Both ends of the one-extra-vertex interval are achievable.
    c5 = cycle(5)
    got = _gt(join(c5, edgeless(1)))
    ok = (plus_one_vertex_sandwich(c5).contains(got)
          and got == 4 and _gt(c5) == 4)
    rows.append(InstanceRecord(
        (("base", "cycle-5"), ("tight", "lower")), "4", got, None, ok))
    p3 = path(3)
    got = _gt(join(p3, edgeless(1)))
    ok = (plus_one_vertex_sandwich(p3).contains(got)
          and got == 3 and _gt(p3) == 2)
    rows.append(InstanceRecord(
        (("base", "path-3"), ("tight", "upper")), "3", got, None, ok))
    return rows


def _run_star_join_k1(grid, max_n, slow, workers):
    rows = []
    for n in _clamp(grid["n"], max_n):
        w = construct_witness(TheoremId.STAR_JOIN_K1, n=n)
        rows.append(_formula_row(
            [("n", n)], n, _gt(join(star(n), edgeless(1))), w))
    return rows


def _run_ham_path_join(grid, max_n, slow, workers):
    rows = []
    for name in grid["families"]:
        build = _FAMILY_BUILDERS[name]
        for n in _clamp(grid["n"], max_n):
            g = build(n)
            for p in range(1, (n - 2) // 2 + 1):
                expected = closed_form(TheoremId.HAM_PATH_JOIN_FORMULA,
                                       n=n, p=p).value
                rows.append(_formula_row(
                    [("base", name), ("n", n), ("p", p)], expected,
                    _gt(join(g, edgeless(p))), None))
    return rows


def _run_nordhaus_gaddum(grid, max_n, slow, workers):
    rows = []
    ns = list(grid["n"])
    if slow:
        ns += list(grid["slow_n"])
    records4: list[NordhausGaddumRecord] | None = None
    for n in _clamp(ns, max_n):
        records = nordhaus_gaddum_scan(n)
        if n == 4:
            records4 = records
        kept = [r for r in records if r.hypothesis_ok]
        excluded = len(records) - len(kept)
        bad = sum(1 for r in kept if not r.within_bounds)
        rows.append(_scan_row(
            [("n", n), ("graphs", len(kept)), ("excluded", excluded)],
            "sum and product in bounds", bad))
    if max_n is None or max_n >= 4:
        if records4 is None:
            records4 = nordhaus_gaddum_scan(4)
        by_encoding = {r.encoding: r for r in records4}
        bounds = nordhaus_gaddum_bounds(4)
        p4 = by_encoding[_encode_mask(4, path(4))]
        rows.append(InstanceRecord(
            (("graph", "path-4"), ("check", "sum")),
            str(bounds.sum_lower), p4.sum, None,
            p4.sum == bounds.sum_lower == bounds.sum_upper))
        rows.append(InstanceRecord(
            (("graph", "path-4"), ("check", "product")),
            str(bounds.product_lower), p4.product, None,
            p4.product == bounds.product_lower == bounds.product_upper))
        c4 = by_encoding[_encode_mask(4, cycle(4))]
        rows.append(InstanceRecord(
            (("graph", "cycle-4"), ("check", "gt")), "3", c4.gt_g, None,
            c4.gt_g == 3 and not c4.hypothesis_ok))
        rows.append(InstanceRecord(
            (("graph", "cycle-4"), ("check", "gt-complement")), "4",
            c4.gt_gbar, None, c4.gt_gbar == 4))
    return rows


def _encode_mask(n: int, g: Graph) -> str:
    return "".join("1" if g.has_edge(u, v) else "0" for u, v in _pairs(n))


def nordhaus_gaddum_scan(n: int) -> list[NordhausGaddumRecord]:
    """Evaluate gt(M(G)) and gt(M(complement)) for every labeled graph on n
    vertices where both sides have no isolated vertices, in edge-bitmask
    order.  Records where either side has a two-vertex component carry
    hypothesis_ok=False; the sum/product bounds apply only to the rest.
    """
    if not 2 <= n <= 6:
        raise ValueError(f"scan supports 2 <= n <= 6, got {n}")
    pairs = _pairs(n)
    full = (1 << len(pairs)) - 1
    bounds = nordhaus_gaddum_bounds(n)
    values: dict[int, int | None] = {}
    smallest: dict[int, int] = {}

    def solve(mask: int) -> int | None:
        if mask not in values:
            g = _mask_graph(n, pairs, mask)
            smallest[mask] = min(len(c) for c in g.connected_components())
            if smallest[mask] == 1:
                values[mask] = None
            else:
                values[mask] = middle_total_domination(g).value
        return values[mask]

    records = []
    for mask in range(full + 1):
        gt_g = solve(mask)
        gt_gbar = solve(full ^ mask)
        if gt_g is None or gt_gbar is None:
            continue
        ok = smallest[mask] >= 3 and smallest[full ^ mask] >= 3
        records.append(NordhausGaddumRecord(
            n=n, encoding=format(mask, f"0{len(pairs)}b")[::-1],
            gt_g=gt_g, gt_gbar=gt_gbar, sum=gt_g + gt_gbar,
            product=gt_g * gt_gbar, bounds=bounds, hypothesis_ok=ok))
    return records


_RUNNERS: dict[TheoremId, Callable] = {
    TheoremId.STAR_FORMULA: _run_star,
    TheoremId.DOUBLE_STAR_FORMULA: _run_double_star,
    TheoremId.PATH_FORMULA: _run_path,
    TheoremId.COMPLETE_FORMULA: _run_complete,
    TheoremId.GENERAL_BOUNDS: _run_general_bounds,
    TheoremId.HAM_PATH_FORMULA: _run_ham_path,
    TheoremId.FAMILY_COROLLARY: _run_family_corollary,
    TheoremId.FRIENDSHIP_FORMULA: _run_friendship,
    TheoremId.COMPLETE_BIPARTITE_FORMULA: _run_complete_bipartite,
    TheoremId.LEAF_LOWER_BOUND: _run_leaf_bound,
    TheoremId.TREE_DIAM3: _run_tree_diam3,
    TheoremId.TREE_DIAM2: _run_tree_diam2,
    TheoremId.CORONA_IDENTITY: _run_corona,
    TheoremId.TWO_CORONA_IDENTITY: _run_two_corona,
    TheoremId.JOIN_EMPTY_FORMULA: _run_join_empty,
    TheoremId.JOIN_SMALL_P_BOUNDS: _run_join_small_p,
    TheoremId.PLUS_ONE_VERTEX_SANDWICH: _run_sandwich,
    TheoremId.STAR_JOIN_K1: _run_star_join_k1,
    TheoremId.HAM_PATH_JOIN_FORMULA: _run_ham_path_join,
    TheoremId.NORDHAUS_GADDUM: _run_nordhaus_gaddum,
}


def verify_theorem(theorem: TheoremId, max_n: int | None = None,
                   slow: bool = False,
                   workers: int | None = None) -> VerificationReport:
    """Run one campaign on its default grid, optionally clamping order-like
    parameters to max_n.  The slow flag unlocks the longest scans."""
    runner = _RUNNERS[theorem]
    count = workers if workers is not None else _worker_count()
    start = perf_counter()
    rows = runner(DEFAULT_GRID[theorem], max_n, slow, count)
    return VerificationReport(theorem, tuple(rows), perf_counter() - start)


def verify_all(max_n: int | None = None, slow: bool = False,
               workers: int | None = None) -> list[VerificationReport]:
    return [verify_theorem(t, max_n=max_n, slow=slow, workers=workers)
            for t in TheoremId]


# -- rendering ---------------------------------------------------------------

def _params_str(params: tuple[tuple[str, object], ...]) -> str:
    return " ".join(f"{k}={v}" for k, v in params)


def render_text(reports: list[VerificationReport],
                verbose: bool = False) -> str:
    """Aligned, human-facing report.  Failing rows always print; passing
    rows print when verbose."""
    lines = []
    for report in reports:
        good, failed = report.counts
        mark = "PASS" if report.passed else "FAIL"
        lines.append(f"{report.theorem.value:<28} {good:>5} pass "
                     f"{failed:>3} fail  {report.elapsed:8.2f}s  {mark}")
        for row in report.instances:
            if verbose or not row.status:
                size = "-" if row.witness_size is None else row.witness_size
                state = "pass" if row.status else "FAIL"
                lines.append(f"    {_params_str(row.params):<44} "
                             f"expected {row.expected:<22} got {row.got:<6} "
                             f"witness {size:<4} {state}")
    total_fail = sum(r.counts[1] for r in reports)
    lines.append("ALL PASS" if total_fail == 0
                 else f"FAILURES: {total_fail}")
    return "\n".join(lines) + "\n"


def render_csv(reports: list[VerificationReport]) -> str:
    """Machine-facing rows; identical across runs for fixed grids."""
    out = StringIO()
    writer = csv.writer(out)
    writer.writerow(["theorem", "params", "expected", "got", "witness_size",
                     "status"])
    for report in reports:
        for row in report.instances:
            writer.writerow([
                report.theorem.value, _params_str(row.params), row.expected,
                row.got, "" if row.witness_size is None else row.witness_size,
                "pass" if row.status else "fail"])
    return out.getvalue()


def render_ng_csv(records: list[NordhausGaddumRecord]) -> str:
    out = StringIO()
    writer = csv.writer(out)
    writer.writerow(["n", "encoding", "gt_g", "gt_gbar", "sum", "product",
                     "hypothesis_ok", "within_bounds"])
    for r in records:
        writer.writerow([r.n, r.encoding, r.gt_g, r.gt_gbar, r.sum,
                         r.product, int(r.hypothesis_ok),
                         int(r.within_bounds) if r.hypothesis_ok else ""])
    return out.getvalue()
