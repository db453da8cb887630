"""Minimum st-cut value via shortest separating cycles in the dual.

The dual is sliced along a shortest dual path ``pi`` from a face at ``s`` to a
face at ``t``.  Every face ``p_j`` on ``pi`` becomes a pair ``(x_j, y_j)``;
a shortest ``x_j -> y_j`` path in the sliced graph is a shortest
st-separating cycle through ``p_j``.  All pair distances are found by divide
and conquer over the pair indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .planar_core import DualGraph, EmbeddedGraph
from .regions import (
    Origin,
    Region,
    compress_chains,
    distances,
    expand_origins,
    extreme_path,
    split_along_path,
)


@dataclass(frozen=True)
class CutGraph:
    """The dual cut open along ``pi``.

    Cut-graph vertices: faces keep their ids, ``x_j`` reuses the id of
    ``pi[j]`` and ``y_j`` is ``num_faces + j``.  Edges ``0..m-1`` are the dual
    edges (on ``pi`` they are the x-side copies); edge ``m + j`` is the
    y-side copy of the j-th path edge.
    """

    base: Region
    pi: list[int]
    pi_darts: list[int]
    num_faces: int
    primal_of: list[int]  # cut-graph edge -> primal edge

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [self.base.pairs[j] for j in range(len(self.pi))]

    def to_primal(self, gc_edges) -> list[int]:
        po = self.primal_of
        return [po[e] for e in gc_edges]


@dataclass
class Phase1Result:
    pi: list[int]
    dists: list[int]
    lam: int
    K: list[int]
    witness: list[list[Origin]] = field(repr=False)

    def cycle_edges(self, j: int) -> list[int]:
        """Cut-graph edge ids of the shortest x_j -> y_j path found."""
        return expand_origins(self.witness[j])


def choose_terminal_faces(g: EmbeddedGraph, dual: Optional[DualGraph] = None) -> tuple[int, int]:
    face_of = g.faces.face_of
    return face_of[g.rotation[g.s][0]], face_of[g.rotation[g.t][0]]


def shortest_dual_path(dual: DualGraph, fs: int, ft: int) -> tuple[list[int], list[int]]:
    """BFS path ``fs -> ft``; returns ``(faces, darts)``, ties to the lowest face id."""
    face_of, rot = dual.face_of, dual.rotation
    dist = [-1] * dual.num_faces
    dist[fs] = 0
    frontier = [fs]
    while frontier and dist[ft] < 0:
        nxt = []
        for f in frontier:
            df = dist[f] + 1
            for d in rot[f]:
                h = face_of[d ^ 1]
                if dist[h] < 0:
                    dist[h] = df
                    nxt.append(h)
        frontier = nxt
    faces = [ft]
    darts = []
    c = ft
    while c != fs:
        want = dist[c] - 1
        best = None
        for d in rot[c]:
            h = face_of[d ^ 1]
            if dist[h] == want and (best is None or (h, d) < best):
                best = (h, d)
        h, d = best
        darts.append(d ^ 1)
        faces.append(h)
        c = h
    faces.reverse()
    darts.reverse()
    return faces, darts


def _boundary_positions(dual: DualGraph) -> list[int]:
    pos = [0] * len(dual.face_of)
    for lst in dual.rotation:
        for i, d in enumerate(lst):
            pos[d] = i
    return pos


def cut_along_path(dual: DualGraph, pi: list[int], pi_darts: list[int], g: EmbeddedGraph) -> CutGraph:
    """Slice ``dual`` along ``pi``.

    At an inner path face the darts strictly between the incoming and the
    outgoing path dart go to one copy each.  At the ends the missing
    direction is the corner of the face at ``s`` (resp. ``t``), just before
    the first dart of that terminal's rotation.  ``x_j`` takes the darts on
    the right of the direction ``s -> t``.
    """
    m = dual.m
    F = dual.num_faces
    k = len(pi) - 1
    fpos = _boundary_positions(dual)
    nv = F + k + 1
    nd = 2 * (m + k)
    tail = [0] * nd
    rot: list[list[int]] = [[] for _ in range(nv)]
    on_pi = [-1] * F
    for j, p in enumerate(pi):
        on_pi[p] = j
    for f in range(F):
        if on_pi[f] < 0:
            lst = list(dual.rotation[f])
            rot[f] = lst
            for d in lst:
                tail[d] = f

    def low(d: int, j: int) -> int:
        # y-side copy of the path dart ``d`` seen from pi[j]
        if j < k and d == pi_darts[j]:
            return 2 * (m + j)
        return 2 * (m + j - 1) + 1

    s_corner = g.rotation[g.s][0]
    t_corner = g.rotation[g.t][0]
    for j, p in enumerate(pi):
        bnd = dual.rotation[p]
        n2 = 2 * len(bnd)
        if j == 0:
            r_dart = None
            r2 = 2 * fpos[s_corner]
        else:
            r_dart = pi_darts[j - 1] ^ 1
            r2 = 2 * fpos[r_dart] + 1
        if j == k:
            o_dart = None
            o2 = 2 * fpos[t_corner]
        else:
            o_dart = pi_darts[j]
            o2 = 2 * fpos[o_dart] + 1
        xs = [] if r_dart is None else [r_dart]
        ys = []
        upper = True
        for step in range(1, n2):
            p2 = (r2 + step) % n2
            if p2 == o2:
                if o_dart is not None:
                    xs.append(o_dart)
                    ys.append(low(o_dart, j))
                upper = False
            elif p2 & 1:
                (xs if upper else ys).append(bnd[p2 >> 1])
        if r_dart is not None:
            ys.append(low(r_dart, j))
        yv = F + j
        rot[p] = xs
        rot[yv] = ys
        for d in xs:
            tail[d] = p
        for d in ys:
            tail[d] = yv
    head = [tail[d ^ 1] for d in range(nd)]
    pairs = {j: (p, F + j) for j, p in enumerate(pi)}
    base = Region(rot, head, None, list(range(m + k)), pairs)
    primal_of = list(dual.primal_of) + [dual.primal_of[pi_darts[j] >> 1] for j in range(k)]
    return CutGraph(base, list(pi), list(pi_darts), F, primal_of)


def reif_distances(cg: CutGraph, compress: bool = True) -> Phase1Result:
    """dist(x_j, y_j) for every pair by recursion on the median pair index.

    The leftmost shortest path of the median pair splits the region; each
    side (path included) keeps the pairs on its side, whose distances the
    split does not change.  Ranges of at most two pairs are solved directly.
    """
    k1 = len(cg.pi)
    dists = [-1] * k1
    witness: list[list[Origin]] = [[] for _ in range(k1)]
    stack = [(cg.base, list(range(k1)))]
    while stack:
        region, idx = stack.pop()
        if len(idx) <= 2:
            for j in idx:
                x, y = region.pairs[j]
                dist = distances(region, x)
                dists[j] = dist[y]
                witness[j] = region.path_origins(extreme_path(region, x, y, dist))
            continue
        h = len(idx) // 2
        j = idx[h]
        x, y = region.pairs[j]
        dist = distances(region, x)
        dists[j] = dist[y]
        path = extreme_path(region, x, y, dist)
        witness[j] = region.path_origins(path)
        low, _, high, _ = split_along_path(region, x, path, idx[:h], idx[h + 1 :])
        region = dist = None
        if compress:
            low = compress_chains(low)
            high = compress_chains(high)
        stack.append((high, idx[h + 1 :]))
        stack.append((low, idx[:h]))
    return _result(cg, dists, witness)


def independent_distances(cg: CutGraph) -> Phase1Result:
    """One search per pair on the whole cut graph (reference route)."""
    base = cg.base
    dists = []
    witness = []
    for j in range(len(cg.pi)):
        x, y = base.pairs[j]
        dist = distances(base, x)
        dists.append(dist[y])
        witness.append(base.path_origins(extreme_path(base, x, y, dist)))
    return _result(cg, dists, witness)


def _result(cg: CutGraph, dists: list[int], witness: list[list[Origin]]) -> Phase1Result:
    if any(d < 0 for d in dists):
        raise AssertionError("a pair is disconnected in the cut graph")
    lam = min(dists)
    K = [j for j, d in enumerate(dists) if d == lam]
    return Phase1Result(list(cg.pi), dists, lam, K, witness)
