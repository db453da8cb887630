"""Embedded planar graphs, face tracing and the dual multigraph.

Darts are numbered from edges: edge ``e = (u, v)`` owns dart ``2*e`` (u -> v)
and dart ``2*e + 1`` (v -> u), so the reverse of dart ``d`` is ``d ^ 1``.
A rotation lists the darts leaving a vertex in counterclockwise order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence


_TAU = 2 * math.pi


class GraphError(ValueError):
    """Base class for rejected graph input."""


class InvalidGraph(GraphError):
    pass


class Disconnected(GraphError):
    pass


class InvalidTerminals(GraphError):
    pass


class NotPlanarEmbedding(GraphError):
    pass


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]  # darts in tracing order; the face lies to their left


@dataclass(frozen=True)
class FaceStructure:
    face_of: list[int]  # dart -> face id (face to the left of the dart)
    boundaries: list[list[int]]


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    s: int
    t: int
    coords: Optional[tuple[tuple[float, float], ...]] = field(default=None, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    @cached_property
    def dart_pos(self) -> list[int]:
        """Index of every dart inside the rotation of its tail."""
        pos = [0] * (2 * len(self.edges))
        for lst in self.rotation:
            for i, d in enumerate(lst):
                pos[d] = i
        return pos

    @cached_property
    def faces(self) -> FaceStructure:
        return _trace(self)

    @property
    def num_faces(self) -> int:
        return len(self.faces.boundaries)

    def with_terminals(self, s: int, t: int) -> "EmbeddedGraph":
        _check_terminals(self.n, s, t)
        return EmbeddedGraph(self.n, self.edges, self.rotation, s, t, self.coords)


def _trace(g: EmbeddedGraph) -> FaceStructure:
    edges, rot, pos = g.edges, g.rotation, g.dart_pos
    nd = 2 * len(edges)
    face_of = [-1] * nd
    boundaries: list[list[int]] = []
    for start in range(nd):
        if face_of[start] >= 0:
            continue
        fid = len(boundaries)
        bnd = []
        d = start
        while face_of[d] < 0:
            face_of[d] = fid
            bnd.append(d)
            r = d ^ 1
            h = edges[d >> 1][1 - (d & 1)]
            lst = rot[h]
            # next dart of the face: clockwise neighbour of the reverse dart at the head
            d = lst[pos[r] - 1]
        boundaries.append(bnd)
    return FaceStructure(face_of, boundaries)


def _check_terminals(n: int, s: int, t: int) -> None:
    if not (0 <= s < n and 0 <= t < n):
        raise InvalidTerminals(f"terminal out of range: s={s}, t={t}, n={n}")
    if s == t:
        raise InvalidTerminals(f"terminals must differ (s = t = {s})")


def _check_edges(n: int, edge_list: Sequence[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    seen = set()
    out = []
    for i, (u, v) in enumerate(edge_list):
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge {i} has endpoint out of range: ({u}, {v})")
        if u == v:
            raise InvalidGraph(f"edge {i} is a self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise InvalidGraph(f"edge {i} duplicates edge {key}")
        seen.add(key)
        out.append((u, v))
    return tuple(out)


def _check_connected(n: int, edges: Sequence[tuple[int, int]]) -> None:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise Disconnected(f"graph is disconnected ({count} of {n} vertices reachable from 0)")


def _finish(g: EmbeddedGraph) -> EmbeddedGraph:
    f = g.num_faces
    if g.n - g.m + f != 2:
        raise NotPlanarEmbedding(
            f"Euler check failed: n - m + f = {g.n} - {g.m} + {f} = {g.n - g.m + f}"
        )
    return g


def build_from_coordinates(
    n: int,
    edge_list: Sequence[Sequence[int]],
    coords: Sequence[Sequence[float]],
    s: int,
    t: int,
) -> EmbeddedGraph:
    """Embed a straight-line drawing: each rotation is sorted by angle.

    Angles are measured counterclockwise from the positive x-axis in
    ``[0, 2*pi)``, so every rotation list starts at the first edge at or
    above "east".

    The drawing is trusted to be non-crossing; only the Euler count is checked.
    """
    if n < 1:
        raise InvalidGraph("graph needs at least one vertex")
    if len(coords) != n:
        raise InvalidGraph(f"expected {n} coordinates, got {len(coords)}")
    edges = _check_edges(n, edge_list)
    _check_terminals(n, s, t)
    pts = tuple((float(x), float(y)) for x, y in coords)
    if len(set(pts)) != n:
        raise InvalidGraph("coordinates must be distinct points")
    _check_connected(n, edges)
    keyed: list[list[tuple[float, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        (ux, uy), (vx, vy) = pts[u], pts[v]
        keyed[u].append((math.atan2(vy - uy, vx - ux) % _TAU, 2 * e))
        keyed[v].append((math.atan2(uy - vy, ux - vx) % _TAU, 2 * e + 1))
    rotation = tuple(tuple(d for _, d in sorted(lst)) for lst in keyed)
    return _finish(EmbeddedGraph(n, edges, rotation, s, t, pts))


def build_from_rotation(
    n: int,
    edge_list: Sequence[Sequence[int]],
    rotation_lists: Sequence[Sequence[int]],
    s: int,
    t: int,
    coords: Optional[Sequence[Sequence[float]]] = None,
) -> EmbeddedGraph:
    """Embed from explicit counterclockwise lists of incident edge ids."""
    if n < 1:
        raise InvalidGraph("graph needs at least one vertex")
    edges = _check_edges(n, edge_list)
    _check_terminals(n, s, t)
    if len(rotation_lists) != n:
        raise InvalidGraph(f"expected {n} rotation lists, got {len(rotation_lists)}")
    _check_connected(n, edges)
    used = [0] * (2 * len(edges))
    rotation = []
    for v, lst in enumerate(rotation_lists):
        darts = []
        for e in lst:
            e = int(e)
            if not 0 <= e < len(edges):
                raise InvalidGraph(f"rotation of {v} names unknown edge {e}")
            u, w = edges[e]
            if u == v:
                d = 2 * e
            elif w == v:
                d = 2 * e + 1
            else:
                raise InvalidGraph(f"rotation of {v} lists edge {e} = {edges[e]} not incident to it")
            if used[d]:
                raise InvalidGraph(f"rotation of {v} lists edge {e} twice")
            used[d] = 1
            darts.append(d)
        rotation.append(tuple(darts))
    if not all(used):
        missing = used.index(0)
        raise InvalidGraph(f"edge {missing >> 1} missing from the rotation of one endpoint")
    pts = None if coords is None else tuple((float(x), float(y)) for x, y in coords)
    return _finish(EmbeddedGraph(n, edges, tuple(rotation), s, t, pts))


def trace_faces(g: EmbeddedGraph) -> list[Face]:
    return [Face(i, tuple(b)) for i, b in enumerate(g.faces.boundaries)]


@dataclass(frozen=True, eq=False)
class DualGraph:
    """One vertex per face and one dual edge per primal edge (same id).

    Dual dart ``d`` crosses primal dart ``d`` from its left face to its right
    face, and the rotation of a face is its boundary in tracing order.
    """

    num_faces: int
    edges: list[tuple[int, int]]
    primal_of: list[int]
    weight: list[int]
    face_of: list[int]
    rotation: list[list[int]]

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, d: int) -> int:
        return self.face_of[d]

    def head(self, d: int) -> int:
        return self.face_of[d ^ 1]

    def degree(self, f: int) -> int:
        return len(self.rotation[f])


def build_dual(g: EmbeddedGraph) -> DualGraph:
    fs = g.faces
    face_of = fs.face_of
    edges = [(face_of[2 * e], face_of[2 * e + 1]) for e in range(g.m)]
    return DualGraph(
        num_faces=len(fs.boundaries),
        edges=edges,
        primal_of=list(range(g.m)),
        weight=[1] * g.m,
        face_of=face_of,
        rotation=fs.boundaries,
    )


def faces_adjacent_to_vertex(g: EmbeddedGraph, v: int) -> set[int]:
    face_of = g.faces.face_of
    return {face_of[d] for d in g.rotation[v]}
