"""Edge vitality for max-flow in unweighted undirected planar graphs.

An edge has vitality 1 exactly when its dual edge lies on a shortest
``x_i -> y_i`` path of the cut dual for some pair ``i`` attaining the
minimum cut value.  Those edges are collected by recursing on the median
such pair: its leftmost and rightmost shortest paths fence in every
shortest path of the pair, the fenced region is marked with the two-sided
distance test, and the remaining pairs are handled on the two outer sides.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .flow_oracle import VitalityMap
from .mincut_reif import (
    CutGraph,
    Phase1Result,
    choose_terminal_faces,
    cut_along_path,
    independent_distances,
    reif_distances,
    shortest_dual_path,
)
from .planar_core import EmbeddedGraph, build_dual
from .regions import (
    Region,
    compress_chains,
    distances,
    expand_origins,
    extreme_path,
    map_path,
    scan_bfs,
    split_along_path,
)


@dataclass
class PairTask:
    region: Region
    indices: list[int]  # increasing pair indices, all at the minimum distance


@dataclass
class RegionSplit:
    left_path: list[int]  # darts of the task region
    right_path: list[int]
    pi_region: Region  # between the two paths, both included
    left_rest: Region  # beyond the leftmost path, lower indices
    right_rest: Region  # beyond the rightmost path, higher indices


def restrict_pairs(region: Region, indices) -> Region:
    """Same graph, fewer pairs; shares every array with ``region``."""
    r = Region.__new__(Region)
    r.rot, r.head, r.wt, r.orig, r.pos = region.rot, region.head, region.wt, region.orig, region.pos
    r.pairs = {j: region.pairs[j] for j in indices}
    return r


def leftmost_bfs(task: PairTask, source: int) -> tuple[list[int], list[int]]:
    return scan_bfs(task.region, source, clockwise=False)


def rightmost_bfs(task: PairTask, source: int) -> tuple[list[int], list[int]]:
    return scan_bfs(task.region, source, clockwise=True)


def split_region(task: PairTask, i: int) -> RegionSplit:
    region = task.region
    x, y = region.pairs[i]
    dist = distances(region, x)
    left_path = extreme_path(region, x, y, dist, clockwise=False)
    right_path = extreme_path(region, x, y, dist, clockwise=True)
    lower = [j for j in task.indices if j < i]
    upper = [j for j in task.indices if j > i]
    left_rest, _, rest, emap = split_along_path(region, x, left_path, lower, [i, *upper])
    middle, _, right_rest, _ = split_along_path(
        rest, rest.pairs[i][0], map_path(right_path, emap), [i], upper
    )
    return RegionSplit(left_path, right_path, middle, left_rest, right_rest)


def mark_region_edges(region: Region, i: int, lam: Optional[int] = None) -> list[int]:
    """Cut-graph edges of ``region`` on some shortest ``x_i -> y_i`` path.

    An edge ``uv`` qualifies when ``d(x,u) + w + d(v,y)`` or
    ``d(x,v) + w + d(u,y)`` equals the pair distance.
    """
    x, y = region.pairs[i]
    dx = distances(region, x)
    dy = distances(region, y)
    if lam is None:
        lam = dx[y]
    head, wt = region.head, region.wt
    hits = []
    for e in range(len(head) >> 1):
        u = head[2 * e + 1]
        v = head[2 * e]
        w = 1 if wt is None else wt[e]
        a, b = dx[u], dy[v]
        if a >= 0 and b >= 0 and a + w + b == lam:
            hits.append(region.orig[e])
            continue
        a, b = dx[v], dy[u]
        if a >= 0 and b >= 0 and a + w + b == lam:
            hits.append(region.orig[e])
    return expand_origins(hits)


def recurse(root: PairTask, lam: int, num_edges: int, compress: bool = True) -> bytearray:
    """Mark every cut-graph edge on a shortest path of some pair of ``root``."""
    marked = bytearray(num_edges)
    stack = [root]
    while stack:
        task = stack.pop()
        idx = task.indices
        if len(idx) <= 2:
            for j in idx:
                for e in mark_region_edges(task.region, j, lam):
                    marked[e] = 1
            continue
        i = idx[len(idx) // 2]
        sp = split_region(task, i)
        task = None
        for e in mark_region_edges(sp.pi_region, i, lam):
            marked[e] = 1
        lower = [j for j in idx if j < i]
        upper = [j for j in idx if j > i]
        left, right = sp.left_rest, sp.right_rest
        sp = None
        if compress:
            left = compress_chains(left)
            right = compress_chains(right)
        stack.append(PairTask(right, upper))
        stack.append(PairTask(left, lower))
    return marked


def mark_each_pair(cg: CutGraph, K: list[int], lam: int) -> bytearray:
    """Reference route: the distance test per pair on the whole cut graph."""
    marked = bytearray(cg.base.num_edges)
    for j in K:
        for e in mark_region_edges(cg.base, j, lam):
            marked[e] = 1
    return marked


@dataclass
class PipelineResult:
    vitality: VitalityMap
    phase1: Phase1Result
    cut: CutGraph
    marked: bytearray = field(repr=False)
    phase1_ms: float = 0.0
    phase2_ms: float = 0.0


def run_pipeline(
    g: EmbeddedGraph,
    compress: bool = True,
    phase1_reference: bool = False,
    phase2_reference: bool = False,
) -> PipelineResult:
    """Dual, cut, pair distances, then edge marking.

    The ``*_reference`` switches replace a recursion by its per-pair
    whole-graph counterpart, for differential checks.
    """
    t0 = time.perf_counter()
    dual = build_dual(g)
    fs, ft = choose_terminal_faces(g, dual)
    pi, pi_darts = shortest_dual_path(dual, fs, ft)
    cg = cut_along_path(dual, pi, pi_darts, g)
    dual = None
    p1 = independent_distances(cg) if phase1_reference else reif_distances(cg, compress)
    t1 = time.perf_counter()
    if phase2_reference:
        marked = mark_each_pair(cg, p1.K, p1.lam)
    else:
        root = PairTask(restrict_pairs(cg.base, p1.K), list(p1.K))
        marked = recurse(root, p1.lam, cg.base.num_edges, compress)
    bits = bytearray(g.m)
    for e, flag in enumerate(marked):
        if flag:
            bits[cg.primal_of[e]] = 1
    t2 = time.perf_counter()
    vm = VitalityMap(tuple(bits), p1.lam)
    return PipelineResult(vm, p1, cg, marked, (t1 - t0) * 1e3, (t2 - t1) * 1e3)


def compute_vitality(g: EmbeddedGraph, compress: bool = True) -> VitalityMap:
    """Vitality bit of every edge and the max-flow value."""
    return run_pipeline(g, compress=compress).vitality
