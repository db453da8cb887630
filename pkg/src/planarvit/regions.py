"""Sub-instances of the cut dual graph and the primitives run on them.

A :class:`Region` is a compact embedded multigraph with local vertex and
dart ids.  Terminal vertices ``x_j``/``y_j`` sit on the outer face and their
rotation list starts right after the outer-face corner, so "scan from the
outer face" means "scan from index 0" (or backwards from the last index).

Splitting a region along a simple path keeps the original rotation order, so
the corner convention survives into the children.
"""

from __future__ import annotations

from array import array
from typing import Iterable, Optional, Sequence, Union

Origin = Union[int, tuple]

RIGHT = 1  # right of the direction of travel
LEFT = 2
ON_PATH = 3


class Region:
    __slots__ = ("rot", "head", "wt", "orig", "pairs", "pos")

    def __init__(
        self,
        rot: list[list[int]],
        head: list[int],
        wt: Optional[list[int]],
        orig: list[Origin],
        pairs: dict[int, tuple[int, int]],
    ) -> None:
        # typed arrays keep the working set of the searches small
        self.rot = [array("i", lst) for lst in rot]
        self.head = array("i", head)
        self.wt = wt  # None when every edge has weight 1
        self.orig = orig  # edge -> cut-graph edge id, or nested tuple for a compressed chain
        self.pairs = pairs
        pos = array("i", bytes(4 * len(head)))
        for lst in self.rot:
            for i, d in enumerate(lst):
                pos[d] = i
        self.pos = pos

    @property
    def num_vertices(self) -> int:
        return len(self.rot)

    @property
    def num_edges(self) -> int:
        return len(self.head) >> 1

    def tail(self, d: int) -> int:
        return self.head[d ^ 1]

    def weight(self, d: int) -> int:
        return 1 if self.wt is None else self.wt[d >> 1]

    def path_length(self, path: Iterable[int]) -> int:
        if self.wt is None:
            return sum(1 for _ in path)
        wt = self.wt
        return sum(wt[d >> 1] for d in path)

    def path_origins(self, path: Iterable[int]) -> list[Origin]:
        orig = self.orig
        return [orig[d >> 1] for d in path]


def expand_origins(items: Iterable[Origin]) -> list[int]:
    """Flatten origins (ints or nested tuples) into cut-graph edge ids."""
    out: list[int] = []
    stack = list(items)
    while stack:
        o = stack.pop()
        if isinstance(o, tuple):
            stack.extend(o)
        else:
            out.append(o)
    out.reverse()
    return out


# --------------------------------------------------------------------------
# shortest paths
# --------------------------------------------------------------------------


def distances(region: Region, src: int) -> list[int]:
    """Single-source distances (-1 = unreachable); BFS or a monotone bucket queue."""
    rot, head, wt = region.rot, region.head, region.wt
    dist = [-1] * len(rot)
    dist[src] = 0
    if wt is None:
        frontier = [src]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for a in rot[v]:
                    w = head[a]
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist
    buckets: list = [[src]]
    d = 0
    while d < len(buckets):
        for v in buckets[d]:
            if dist[v] != d:
                continue
            for a in rot[v]:
                w = head[a]
                nd = d + wt[a >> 1]
                dw = dist[w]
                if dw < 0 or nd < dw:
                    dist[w] = nd
                    while len(buckets) <= nd:
                        buckets.append([])
                    buckets[nd].append(w)
        buckets[d] = None
        d += 1
    return dist


def scan_bfs(region: Region, src: int, clockwise: bool = False) -> tuple[list[int], list[int]]:
    """Breadth-first visit whose neighbour scan starts next to the arrival dart.

    Counterclockwise scanning gives the leftmost visit, clockwise the
    rightmost one.  The source scans from its outer-face corner.  Weighted
    (compressed) edges are handled with FIFO buckets; a vertex keeps the
    first predecessor that reached its final distance.
    Returns ``(dist, pred)`` where ``pred[v]`` is the dart entering ``v``.
    """
    rot, head, pos = region.rot, region.head, region.pos
    wt = region.wt
    n = len(rot)
    dist = [-1] * n
    pred = [-1] * n
    dist[src] = 0
    buckets: list = [[src]]
    d = 0
    while d < len(buckets):
        for v in buckets[d]:
            if dist[v] != d:
                continue
            lst = rot[v]
            k = len(lst)
            p = pred[v]
            if p < 0:
                order = reversed(lst) if clockwise else lst
            elif clockwise:
                i0 = pos[p ^ 1]
                order = (lst[(i0 - j) % k] for j in range(1, k))
            else:
                i0 = pos[p ^ 1]
                order = (lst[(i0 + j) % k] for j in range(1, k))
            for a in order:
                w = head[a]
                nd = d + (1 if wt is None else wt[a >> 1])
                dw = dist[w]
                if dw < 0 or nd < dw:
                    dist[w] = nd
                    pred[w] = a
                    while len(buckets) <= nd:
                        buckets.append([])
                    buckets[nd].append(w)
        buckets[d] = None
        d += 1
    return dist, pred


def tree_path(region: Region, pred: Sequence[int], src: int, v: int) -> list[int]:
    path = []
    head = region.head
    while v != src:
        a = pred[v]
        if a < 0:
            raise ValueError(f"vertex {v} not reached")
        path.append(a)
        v = head[a ^ 1]
    path.reverse()
    return path


def extreme_path(
    region: Region, x: int, y: int, dist: Sequence[int], clockwise: bool = False
) -> list[int]:
    """Extreme shortest x -> y path, traced backwards from ``y`` over tight darts.

    ``dist`` holds distances from ``x``.  At each vertex the scan runs
    clockwise (for the leftmost path) or counterclockwise (rightmost) from the
    dart the path leaves by; at ``y`` the outer-face corner plays that role.
    The first tight predecessor dart found is taken, which never lets another
    shortest path slip past on the extreme side.
    """
    rot, head, pos, wt = region.rot, region.head, region.pos, region.wt
    if dist[y] < 0:
        raise ValueError("target unreachable")
    path = []
    v = y
    ref = -1
    while v != x:
        lst = rot[v]
        k = len(lst)
        dv = dist[v]
        if ref < 0:
            idxs: Iterable[int] = range(k) if clockwise else range(k - 1, -1, -1)
        else:
            p = pos[ref]
            if clockwise:
                idxs = ((p + j) % k for j in range(1, k))
            else:
                idxs = ((p - j) % k for j in range(1, k))
        for i in idxs:
            a = lst[i]
            du = dist[head[a]]
            if du >= 0 and du + (1 if wt is None else wt[a >> 1]) == dv:
                break
        else:
            raise RuntimeError("no tight predecessor dart; distances inconsistent")
        ref = a ^ 1
        path.append(ref)
        v = head[a]
    path.reverse()
    return path


# --------------------------------------------------------------------------
# splitting along a path
# --------------------------------------------------------------------------


def classify_path_darts(region: Region, source: int, path: Sequence[int]) -> tuple[list[int], bytearray]:
    """Label every dart leaving a path vertex as RIGHT, LEFT or ON_PATH.

    Both endpoints must lie on the outer face; there the outer-face corner
    stands in for the missing incoming/outgoing dart.
    """
    rot, head, pos = region.rot, region.head, region.pos
    seq = [source]
    seq.extend(head[a] for a in path)
    side = bytearray(len(head))
    for a in path:
        side[a] = ON_PATH
        side[a ^ 1] = ON_PATH
    last = len(path)
    for i, v in enumerate(seq):
        lst = rot[v]
        k = len(lst)
        if i == 0:
            po = pos[path[0]]
            for j, a in enumerate(lst):
                if j != po and not side[a]:
                    side[a] = LEFT if j > po else RIGHT
        elif i == last:
            pr = pos[path[-1] ^ 1]
            for j, a in enumerate(lst):
                if j != pr and not side[a]:
                    side[a] = LEFT if j < pr else RIGHT
        else:
            po = pos[path[i]]
            pr = pos[path[i - 1] ^ 1]
            span = (pr - po) % k
            for j, a in enumerate(lst):
                if side[a]:
                    continue
                side[a] = LEFT if 0 < (j - po) % k < span else RIGHT
    return seq, side


def _side_child(
    region: Region, seq: list[int], side: bytearray, want: int, pair_ids: Iterable[int]
) -> tuple[Region, list[int]]:
    rot, head = region.rot, region.head
    vmap = [-1] * len(rot)
    verts: list[int] = []
    for v in seq:
        vmap[v] = len(verts)
        verts.append(v)
    incl = bytearray(len(head) >> 1)
    stack: list[int] = []
    for v in seq:
        for a in rot[v]:
            sa = side[a]
            if sa != want and sa != ON_PATH:
                continue
            w = head[a]
            if w == head[a ^ 1]:
                continue  # self-loop: never on a shortest path
            incl[a >> 1] = 1
            if vmap[w] < 0:
                vmap[w] = len(verts)
                verts.append(w)
                stack.append(w)
    while stack:
        v = stack.pop()
        for a in rot[v]:
            w = head[a]
            if w == v:
                continue
            incl[a >> 1] = 1
            if vmap[w] < 0:
                vmap[w] = len(verts)
                verts.append(w)
                stack.append(w)
    emap: list[int] = []  # child edge -> parent edge
    enew: dict[int, int] = {}
    new_rot: list[list[int]] = []
    for v in verts:
        out = []
        for a in rot[v]:
            e = a >> 1
            if not incl[e]:
                continue
            ne = enew.get(e)
            if ne is None:
                ne = enew[e] = len(emap)
                emap.append(e)
            out.append(2 * ne + (a & 1))
        new_rot.append(out)
    new_head = [0] * (2 * len(emap))
    for ne, e in enumerate(emap):
        new_head[2 * ne] = vmap[head[2 * e]]
        new_head[2 * ne + 1] = vmap[head[2 * e + 1]]
    wt = region.wt
    new_wt = None
    if wt is not None:
        new_wt = [wt[e] for e in emap]
        if all(w == 1 for w in new_wt):
            new_wt = None
    orig = region.orig
    pairs = {}
    for j in pair_ids:
        x, y = region.pairs[j]
        cx, cy = vmap[x], vmap[y]
        if cx < 0 or cy < 0:
            raise AssertionError(f"pair {j} fell outside its side of the split")
        pairs[j] = (cx, cy)
    child = Region(new_rot, new_head, new_wt, [orig[e] for e in emap], pairs)
    return child, emap


def split_along_path(
    region: Region,
    source: int,
    path: Sequence[int],
    right_pairs: Iterable[int],
    left_pairs: Iterable[int],
) -> tuple[Region, list[int], Region, list[int]]:
    """Cut ``region`` along a simple outer-face-to-outer-face path.

    Returns ``(right, right_emap, left, left_emap)``: the closed sides to the
    right and to the left of the direction of travel, each containing the
    path, with child-edge -> parent-edge maps.
    """
    seq, side = classify_path_darts(region, source, path)
    right, remap = _side_child(region, seq, side, RIGHT, right_pairs)
    left, lemap = _side_child(region, seq, side, LEFT, left_pairs)
    return right, remap, left, lemap


def map_path(path: Sequence[int], emap: Sequence[int]) -> list[int]:
    inv = {e: ne for ne, e in enumerate(emap)}
    return [2 * inv[a >> 1] + (a & 1) for a in path]


# --------------------------------------------------------------------------
# degree-2 chain compression
# --------------------------------------------------------------------------


def compress_chains(region: Region) -> Region:
    """Replace maximal chains through unprotected degree-2 vertices by one weighted edge.

    Pair terminals are protected.  Rotation slots of the chain ends are kept,
    so extreme paths are unaffected.  Returns ``region`` itself when nothing
    is compressible.
    """
    rot, head = region.rot, region.head
    protected = set()
    for x, y in region.pairs.values():
        protected.add(x)
        protected.add(y)
    nv = len(rot)
    inner = bytearray(nv)
    any_inner = False
    for v, lst in enumerate(rot):
        if len(lst) == 2 and v not in protected and (lst[0] >> 1) != (lst[1] >> 1):
            inner[v] = 1
            any_inner = True
    if not any_inner:
        return region
    vmap = [-1] * nv
    anchors = []
    for v in range(nv):
        if not inner[v]:
            vmap[v] = len(anchors)
            anchors.append(v)
    if not anchors:
        return region
    wt = region.wt
    orig = region.orig
    dmap: dict[int, int] = {}
    new_head: list[int] = []
    new_wt: list[int] = []
    new_orig: list[Origin] = []
    new_rot: list[list[int]] = []
    weighted = False
    for v in anchors:
        out = []
        for a in rot[v]:
            nd = dmap.get(a)
            if nd is not None:
                if nd >= 0:
                    out.append(nd)
                continue
            w = head[a]
            if not inner[w]:
                ne = len(new_wt)
                dmap[a] = 2 * ne
                dmap[a ^ 1] = 2 * ne + 1
                new_head.extend((vmap[w], vmap[v]))
                new_wt.append(1 if wt is None else wt[a >> 1])
                new_orig.append(orig[a >> 1])
                out.append(2 * ne)
                continue
            total = 1 if wt is None else wt[a >> 1]
            parts = [orig[a >> 1]]
            came = a
            cur = w
            while inner[cur]:
                l0, l1 = rot[cur]
                nxt = l0 if l0 != (came ^ 1) else l1
                total += 1 if wt is None else wt[nxt >> 1]
                parts.append(orig[nxt >> 1])
                came = nxt
                cur = head[nxt]
            back = came ^ 1
            if cur == v:
                # chain hanging off a single anchor: a dead-end cycle
                dmap[a] = -1
                dmap[back] = -1
                continue
            ne = len(new_wt)
            dmap[a] = 2 * ne
            dmap[back] = 2 * ne + 1
            new_head.extend((vmap[cur], vmap[v]))
            new_wt.append(total)
            new_orig.append(tuple(parts))
            weighted = True
            out.append(2 * ne)
        new_rot.append(out)
    pairs = {j: (vmap[x], vmap[y]) for j, (x, y) in region.pairs.items()}
    if not weighted and wt is None:
        final_wt = None
    else:
        final_wt = new_wt
    return Region(new_rot, new_head, final_wt, new_orig, pairs)
