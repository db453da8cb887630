"""Deterministic embedded planar test instances."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Union

from .planar_core import EmbeddedGraph, build_from_coordinates, build_from_rotation

FAMILIES = ("grid", "stacked_triangulation", "grid_minus_random_edges")
TERMINAL_RULES = ("opposite_corners", "random_distinct", "farthest_pair")


@dataclass(frozen=True)
class GenSpec:
    family: str
    size: tuple[int, ...]  # (rows, cols) for grids, (n,) for triangulations
    seed: int = 0
    terminal_rule: str = "opposite_corners"
    delete_fraction: float = 0.0


def _bfs_far(g: EmbeddedGraph, src: int) -> int:
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    far = src
    while q:
        v = q.popleft()
        if dist[v] > dist[far] or (dist[v] == dist[far] and v < far):
            far = v
        for d in g.rotation[v]:
            w = g.head(d)
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return far


def pick_terminals(g: EmbeddedGraph, rule: str, seed: int = 0) -> tuple[int, int]:
    if rule == "opposite_corners":
        return 0, g.n - 1
    if rule == "random_distinct":
        s, t = random.Random(seed).sample(range(g.n), 2)
        return s, t
    if rule == "farthest_pair":
        a = _bfs_far(g, 0)
        b = _bfs_far(g, a)
        if a == b:
            b = 1 if a == 0 else 0
        return a, b
    raise ValueError(f"unknown terminal rule {rule!r}")


def gen_grid(rows: int, cols: int, terminal_rule: str = "opposite_corners", seed: int = 0) -> EmbeddedGraph:
    if rows < 2 or cols < 2:
        raise ValueError("grid needs rows, cols >= 2")
    n = rows * cols
    edges = []
    for r in range(rows):
        base = r * cols
        edges.extend((base + c, base + c + 1) for c in range(cols - 1))
    for r in range(rows - 1):
        base = r * cols
        edges.extend((base + c, base + cols + c) for c in range(cols))
    coords = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    g = build_from_coordinates(n, edges, coords, 0, n - 1)
    s, t = pick_terminals(g, terminal_rule, seed)
    return g.with_terminals(s, t)


def gen_stacked_triangulation(n: int, seed: int = 0, terminal_rule: str = "opposite_corners") -> EmbeddedGraph:
    """Maximal planar graph: repeatedly drop a vertex into a random triangle.

    The embedding is tracked combinatorially (no angle sorting), coordinates
    are barycentres and only carried along.
    """
    if n < 3:
        raise ValueError("stacked triangulation needs n >= 3")
    rng = random.Random(seed)
    coords = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
    nbrs = [[1, 2], [2, 0], [0, 1]]  # counterclockwise neighbour lists
    faces = [(0, 1, 2)]
    for v in range(3, n):
        k = rng.randrange(len(faces))
        a, b, c = faces[k]
        nbrs.append([a, b, c])
        for p, after in ((a, b), (b, c), (c, a)):
            lst = nbrs[p]
            lst.insert(lst.index(after) + 1, v)
        faces[k] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
        (ax, ay), (bx, by), (cx, cy) = coords[a], coords[b], coords[c]
        coords.append(((ax + bx + cx) / 3, (ay + by + cy) / 3))
    eid: dict[tuple[int, int], int] = {}
    edges = []
    for u in range(n):
        for w in nbrs[u]:
            key = (u, w) if u < w else (w, u)
            if key not in eid:
                eid[key] = len(edges)
                edges.append(key)
    rot = [[eid[(u, w) if u < w else (w, u)] for w in nbrs[u]] for u in range(n)]
    g = build_from_rotation(n, edges, rot, 0, 1, coords)
    s, t = pick_terminals(g, terminal_rule, seed)
    return g.with_terminals(s, t)


def delete_edges(g: EmbeddedGraph, edge_ids) -> EmbeddedGraph:
    """Remove edges, keeping the inherited embedding and the terminals."""
    drop = set(edge_ids)
    keep = [e for e in range(g.m) if e not in drop]
    new_id = {e: i for i, e in enumerate(keep)}
    edges = [g.edges[e] for e in keep]
    rot = [[new_id[d >> 1] for d in lst if (d >> 1) in new_id] for lst in g.rotation]
    return build_from_rotation(g.n, edges, rot, g.s, g.t, g.coords)


def _connected_without(adj: list[set[int]], u: int, v: int) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b == v:
                return True
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return False


def gen_sparsified(base: Union[GenSpec, EmbeddedGraph], delete_fraction: float, seed: int = 0) -> EmbeddedGraph:
    """Delete about ``delete_fraction * m`` random edges, skipping any that would disconnect."""
    if not 0 <= delete_fraction < 1:
        raise ValueError("delete_fraction must lie in [0, 1)")
    g = generate(base) if isinstance(base, GenSpec) else base
    target = int(delete_fraction * g.m)
    if target == 0:
        return g
    rng = random.Random(seed)
    order = list(range(g.m))
    rng.shuffle(order)
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    dropped = []
    for e in order:
        if len(dropped) == target:
            break
        u, v = g.edges[e]
        adj[u].discard(v)
        adj[v].discard(u)
        if _connected_without(adj, u, v):
            dropped.append(e)
        else:
            adj[u].add(v)
            adj[v].add(u)
    return delete_edges(g, dropped)


def generate(spec: GenSpec) -> EmbeddedGraph:
    if spec.terminal_rule not in TERMINAL_RULES:
        raise ValueError(f"unknown terminal rule {spec.terminal_rule!r}")
    if spec.family == "grid":
        rows, cols = spec.size
        return gen_grid(rows, cols, spec.terminal_rule, spec.seed)
    if spec.family == "stacked_triangulation":
        (n,) = spec.size
        return gen_stacked_triangulation(n, spec.seed, spec.terminal_rule)
    if spec.family == "grid_minus_random_edges":
        rows, cols = spec.size
        g = gen_sparsified(gen_grid(rows, cols), spec.delete_fraction, spec.seed)
        s, t = pick_terminals(g, spec.terminal_rule, spec.seed)
        return g.with_terminals(s, t)
    raise ValueError(f"unknown family {spec.family!r}")


def sample_spec(
    family: str,
    seed: int,
    min_n: int,
    max_n: int,
    terminal_rule: str = "opposite_corners",
    delete_fraction: float = 0.0,
) -> GenSpec:
    """Random instance spec with ``min_n <= n <= max_n``; a pure function of its arguments."""
    rng = random.Random(seed)
    if family == "stacked_triangulation":
        lo = max(min_n, 3)
        if lo > max_n:
            raise ValueError(f"no triangulation size in [{min_n}, {max_n}]")
        return GenSpec(family, (rng.randint(lo, max_n),), seed, terminal_rule)
    if family in ("grid", "grid_minus_random_edges"):
        shapes = [
            (r, c)
            for r in range(2, max_n // 2 + 1)
            for c in range(2, max_n // r + 1)
            if min_n <= r * c <= max_n
        ]
        if not shapes:
            raise ValueError(f"no grid size in [{min_n}, {max_n}]")
        frac = delete_fraction if family == "grid_minus_random_edges" else 0.0
        return GenSpec(family, rng.choice(shapes), seed, terminal_rule, frac)
    raise ValueError(f"unknown family {family!r}")
