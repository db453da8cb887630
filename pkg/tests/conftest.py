from __future__ import annotations

import itertools
import random
from collections import deque

import pytest
from hypothesis import strategies as st

from planarvit.generators import gen_grid, gen_sparsified, gen_stacked_triangulation
from planarvit.planar_core import EmbeddedGraph, build_from_coordinates
from planarvit.regions import Region

# K4 drawn as triangle s, a, b around t; edge 3 is ab
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K4_COORDS = [(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (2.0, 1.5)]


def triangle() -> EmbeddedGraph:
    return build_from_coordinates(3, [(0, 1), (1, 2), (0, 2)], [(0, 0), (2, 0), (1, 2)], 0, 2)


def path_sat() -> EmbeddedGraph:
    return build_from_coordinates(3, [(0, 1), (1, 2)], [(0, 0), (1, 0), (2, 0)], 0, 2)


def k4() -> EmbeddedGraph:
    return build_from_coordinates(4, K4_EDGES, K4_COORDS, 0, 3)


def single_edge() -> EmbeddedGraph:
    return build_from_coordinates(2, [(0, 1)], [(0, 0), (1, 0)], 0, 1)


def grid3() -> EmbeddedGraph:
    return gen_grid(3, 3)


def cut_enumeration(g: EmbeddedGraph) -> tuple[int, list[int]]:
    """(min cut, vitality bits) by listing every vertex set containing s but not t."""
    others = [v for v in range(g.n) if v not in (g.s, g.t)]
    best = None
    in_min: set[int] = set()
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            side = {g.s, *extra}
            crossing = [e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side)]
            c = len(crossing)
            if best is None or c < best:
                best, in_min = c, set(crossing)
            elif c == best:
                in_min.update(crossing)
    return best, [1 if e in in_min else 0 for e in range(g.m)]


def st_connected(g: EmbeddedGraph, removed) -> bool:
    gone = set(removed)
    adj = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if e not in gone:
            adj[u].append(v)
            adj[v].append(u)
    seen = {g.s}
    q = deque([g.s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return g.t in seen


def random_terminals(g: EmbeddedGraph, seed: int) -> EmbeddedGraph:
    s, t = random.Random(seed).sample(range(g.n), 2)
    return g.with_terminals(s, t)


@st.composite
def small_planar(draw, max_n: int = 12):
    """Sparsified triangulations and grids with arbitrary terminals."""
    seed = draw(st.integers(0, 10**6))
    if draw(st.booleans()):
        g = gen_stacked_triangulation(draw(st.integers(3, max_n)), seed)
    else:
        rows = draw(st.integers(2, 4))
        g = gen_grid(rows, draw(st.integers(2, max(2, max_n // rows))))
    frac = draw(st.sampled_from([0.0, 0.2, 0.4]))
    g = gen_sparsified(g, frac, seed)
    return random_terminals(g, draw(st.integers(0, 10**6)))


@pytest.fixture
def k4_graph() -> EmbeddedGraph:
    return k4()


def cut_graph(g: EmbeddedGraph):
    from planarvit.mincut_reif import choose_terminal_faces, cut_along_path, shortest_dual_path
    from planarvit.planar_core import build_dual

    dual = build_dual(g)
    fs, ft = choose_terminal_faces(g, dual)
    pi, darts = shortest_dual_path(dual, fs, ft)
    return cut_along_path(dual, pi, darts, g)


def all_shortest_paths(region, x: int, y: int, limit: int = 5000) -> list[list[int]]:
    """Every shortest x -> y dart path, by walking tight darts (unit weights)."""
    from planarvit.regions import distances

    dx = distances(region, x)
    dy = distances(region, y)
    lam = dx[y]
    out: list[list[int]] = []
    stack = [(x, [])]
    while stack and len(out) < limit:
        v, path = stack.pop()
        if v == y:
            out.append(path)
            continue
        for a in region.rot[v]:
            w = region.head[a]
            if dx[v] + region.weight(a) + dy[w] == lam and dx[w] == dx[v] + region.weight(a):
                stack.append((w, path + [a]))
    return out


def four_cycle() -> Region:
    # x=0 left, a=1 bottom, y=2 right, b=3 top; edges xa, ay, yb, bx
    rot = [[0, 7], [2, 1], [4, 3], [6, 5]]
    head = [1, 0, 2, 1, 3, 2, 0, 3]
    return Region(rot, head, None, [0, 1, 2, 3], {0: (0, 2)})


def star() -> Region:
    # centre 0 with leaves 1, 2, 3 in counterclockwise order
    rot = [[0, 2, 4], [1], [3], [5]]
    head = [1, 0, 2, 0, 3, 0]
    return Region(rot, head, None, [0, 1, 2], {})
