from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import k4, small_planar
from planarvit.graph_io import FormatError, format_graph, parse_graph, read_graph, write_graph
from planarvit.planar_core import Disconnected

PATH_TEXT = """\
# s - a - t
planar 3 2
v 0 0 0
v 1 1 0
v 2 2 0
e 0 1
e 1 2
st 0 2
"""


def test_parse_coordinates():
    g = parse_graph(PATH_TEXT.splitlines())
    assert (g.n, g.m, g.s, g.t) == (3, 2, 0, 2)
    assert g.edges == ((0, 1), (1, 2))


def test_roundtrip_rotation(tmp_path):
    g = k4()
    write_graph(g, tmp_path / "k4.txt")
    h = read_graph(tmp_path / "k4.txt")
    assert h.edges == g.edges and h.rotation == g.rotation and (h.s, h.t) == (g.s, g.t)


def test_roundtrip_coordinates():
    g = k4()
    h = parse_graph(format_graph(g, use_coords=True).splitlines())
    assert h.rotation == g.rotation
    assert h.coords == g.coords


@settings(max_examples=40, deadline=None)
@given(small_planar())
def test_roundtrip_generated(g):
    h = parse_graph(format_graph(g).splitlines())
    assert (h.edges, h.rotation, h.s, h.t) == (g.edges, g.rotation, g.s, g.t)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 0 1\n",
        "planar 3\n",
        "planar 2 1\nplanar 2 1\n",
        "planar 2 1\ne 0 1\nv 0 0 0\nv 1 1 0\n",
        "planar 2 2\ne 0 1\nv 0 0 0\nv 1 1 0\nst 0 1\n",
        "planar 2 1\ne 0 x\nv 0 0 0\nv 1 1 0\nst 0 1\n",
        "planar 2 1\ne 0 1\nv 0 0 0\nrot 1 0\nst 0 1\n",
        "planar 2 1\ne 0 1\nv 0 0 0\nst 0 1\n",
        "planar 2 1\ne 0 1\nst 0 1\n",
        "planar 2 1\ne 0 1\nq 0\nst 0 1\n",
    ],
)
def test_format_errors(text):
    with pytest.raises(FormatError):
        parse_graph(text.splitlines())


def test_graph_errors_pass_through():
    text = "planar 3 1\ne 0 1\nrot 0 0\nrot 1 0\nrot 2\nst 0 2\n"
    with pytest.raises(Disconnected):
        parse_graph(text.splitlines())
