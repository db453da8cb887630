from __future__ import annotations

from hypothesis import given, settings

from conftest import cut_graph, grid3, k4, path_sat, small_planar, st_connected, triangle
from planarvit.flow_oracle import max_flow
from planarvit.mincut_reif import (
    choose_terminal_faces,
    independent_distances,
    reif_distances,
    shortest_dual_path,
)
from planarvit.planar_core import build_dual


def test_terminal_faces():
    g = path_sat()
    assert choose_terminal_faces(g) == (0, 0)
    fs, ft = choose_terminal_faces(k4())
    assert fs != ft
    g = grid3()
    fs, ft = choose_terminal_faces(g)
    bnd = g.faces.boundaries
    assert len(bnd[fs]) == 4 and len(bnd[ft]) == 4 and fs != ft


def test_dual_paths():
    dual = build_dual(path_sat())
    assert shortest_dual_path(dual, 0, 0) == ([0], [])
    g = triangle()
    fs, ft = choose_terminal_faces(g)
    if fs != ft:
        faces, darts = shortest_dual_path(build_dual(g), fs, ft)
        assert len(darts) == 1
    g = grid3()
    faces, darts = shortest_dual_path(build_dual(g), *choose_terminal_faces(g))
    assert len(darts) == 2 and len(faces) == 3


def test_cut_graph_counts():
    g = grid3()
    cg = cut_graph(g)
    assert len(cg.pairs) == 3
    assert cg.base.num_edges == g.m + 2
    assert cg.base.num_vertices == g.num_faces + 3  # one y-copy per pair
    # y-copies of path edges map to the same primal edge as their x-copies
    for j, d in enumerate(cg.pi_darts):
        assert cg.primal_of[g.m + j] == cg.primal_of[d >> 1]


def test_degenerate_cut_single_pair():
    g = path_sat()
    cg = cut_graph(g)
    assert len(cg.pairs) == 1
    x, y = cg.pairs[0]
    assert cg.base.rot[x] and cg.base.rot[y]
    assert len(cg.base.rot[x]) + len(cg.base.rot[y]) == 4


def test_small_lambdas():
    r = reif_distances(cut_graph(path_sat()))
    assert (r.dists, r.lam, r.K) == ([1], 1, [0])
    assert reif_distances(cut_graph(k4())).lam == 3
    assert reif_distances(cut_graph(grid3())).lam == 2
    assert reif_distances(cut_graph(triangle())).lam == 2


def _realizes_cut(g, cg, res, j):
    edges = cg.to_primal(res.cycle_edges(j))
    return len(edges) == res.dists[j] and not st_connected(g, edges)


@settings(max_examples=80, deadline=None)
@given(small_planar(max_n=14))
def test_recursion_matches_independent_searches(g):
    cg = cut_graph(g)
    ref = independent_distances(cg)
    for compress in (True, False):
        got = reif_distances(cg, compress)
        assert got.dists == ref.dists
        assert (got.lam, got.K) == (ref.lam, ref.K)
    assert ref.lam == max_flow(g).value


@settings(max_examples=80, deadline=None)
@given(small_planar(max_n=14))
def test_every_pair_path_is_a_separating_cycle(g):
    cg = cut_graph(g)
    res = reif_distances(cg)
    for j in range(len(cg.pi)):
        assert _realizes_cut(g, cg, res, j)


def test_pairs_on_larger_grid():
    from planarvit.generators import gen_grid

    g = gen_grid(12, 17, "random_distinct", seed=5)
    cg = cut_graph(g)
    res = reif_distances(cg)
    assert res.dists == independent_distances(cg).dists
    assert res.lam == max_flow(g).value
    assert all(_realizes_cut(g, cg, res, j) for j in res.K)
