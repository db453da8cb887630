"""Reference max-flow and brute-force vitality for unit capacities.

Deliberately simple: shortest augmenting paths found by BFS, one unit at a
time. Used as the ground truth for the planar algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .planar_core import EmbeddedGraph


@dataclass(frozen=True)
class FlowResult:
    value: int
    # per edge (u, v): +1 = one unit u -> v, -1 = one unit v -> u, 0 = idle
    assignment: tuple[int, ...]


@dataclass(frozen=True)
class VitalityMap:
    bits: tuple[int, ...]
    max_flow: int

    @property
    def vital_edges(self) -> list[int]:
        return [e for e, b in enumerate(self.bits) if b]


def _sorted_adjacency(g: EmbeddedGraph) -> list[list[int]]:
    return [sorted(lst) for lst in g.rotation]


def _max_flow(g: EmbeddedGraph, adj: list[list[int]], disabled: set[int]) -> FlowResult:
    edges = g.edges
    flow = [0] * g.m
    s, t = g.s, g.t
    value = 0
    while True:
        pred = [-1] * g.n
        pred[s] = -2
        queue = deque([s])
        while queue and pred[t] == -1:
            u = queue.popleft()
            for d in adj[u]:
                e = d >> 1
                if e in disabled:
                    continue
                sign = 1 - 2 * (d & 1)
                if flow[e] * sign >= 1:
                    continue
                w = edges[e][1 - (d & 1)]
                if pred[w] == -1:
                    pred[w] = d
                    queue.append(w)
        if pred[t] == -1:
            return FlowResult(value, tuple(flow))
        v = t
        while v != s:
            d = pred[v]
            flow[d >> 1] += 1 - 2 * (d & 1)
            v = edges[d >> 1][d & 1]
        value += 1


def max_flow(g: EmbeddedGraph, disabled: Iterable[int] = ()) -> FlowResult:
    """Maximum s-t flow with every enabled edge of capacity one."""
    return _max_flow(g, _sorted_adjacency(g), set(disabled))


def verify_flow(g: EmbeddedGraph, fr: FlowResult, disabled: Iterable[int] = ()) -> bool:
    if len(fr.assignment) != g.m:
        return False
    off = set(disabled)
    excess = [0] * g.n
    for e, f in enumerate(fr.assignment):
        if f not in (-1, 0, 1):
            return False
        if f and e in off:
            return False
        u, v = g.edges[e]
        excess[u] -= f
        excess[v] += f
    if any(excess[v] for v in range(g.n) if v != g.s and v != g.t):
        return False
    return -excess[g.s] == fr.value


def brute_force_vitality(g: EmbeddedGraph, prune: bool = True) -> VitalityMap:
    """vit(e) = maxflow(G) - maxflow(G - e), one recomputation per edge.

    With ``prune`` an edge idle in the reference flow is skipped: that flow
    stays feasible without it, so its vitality is 0.
    """
    adj = _sorted_adjacency(g)
    base = _max_flow(g, adj, set())
    bits = [0] * g.m
    for e in range(g.m):
        if prune and base.assignment[e] == 0:
            continue
        bits[e] = base.value - _max_flow(g, adj, {e}).value
    return VitalityMap(tuple(bits), base.value)
