"""Line-oriented text format for embedded planar graphs.

::

    # comment
    planar <n> <m>
    v <id> <x> <y>
    e <u> <v>
    rot <v> <e_1> ... <e_k>
    st <s> <t>

Either every vertex has a ``v`` line or every vertex has a ``rot`` line.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

from .planar_core import EmbeddedGraph, build_from_coordinates, build_from_rotation


class FormatError(ValueError):
    pass


def parse_graph(lines: Iterable[str]) -> EmbeddedGraph:
    header = None
    coords: dict[int, tuple[float, float]] = {}
    rots: dict[int, list[int]] = {}
    edges: list[tuple[int, int]] = []
    st = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        try:
            if kind == "planar":
                if header is not None or len(tok) != 3:
                    raise FormatError("bad or repeated header")
                header = (int(tok[1]), int(tok[2]))
                continue
            if header is None:
                raise FormatError("missing 'planar <n> <m>' header")
            if kind == "v":
                if len(tok) != 4:
                    raise FormatError("expected 'v <id> <x> <y>'")
                vid = int(tok[1])
                if vid in coords:
                    raise FormatError(f"vertex {vid} given twice")
                coords[vid] = (float(tok[2]), float(tok[3]))
            elif kind == "e":
                if len(tok) != 3:
                    raise FormatError("expected 'e <u> <v>'")
                edges.append((int(tok[1]), int(tok[2])))
            elif kind == "rot":
                if len(tok) < 2:
                    raise FormatError("expected 'rot <v> <e_1> ...'")
                vid = int(tok[1])
                if vid in rots:
                    raise FormatError(f"rotation of {vid} given twice")
                rots[vid] = [int(x) for x in tok[2:]]
            elif kind == "st":
                if len(tok) != 3 or st is not None:
                    raise FormatError("expected a single 'st <s> <t>'")
                st = (int(tok[1]), int(tok[2]))
            else:
                raise FormatError(f"unknown record {kind!r}")
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        except ValueError:
            raise FormatError(f"line {lineno}: malformed number in {line!r}") from None
    if header is None:
        raise FormatError("empty input: missing header")
    n, m = header
    if st is None:
        raise FormatError("missing 'st <s> <t>' record")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    if coords and rots:
        raise FormatError("mixed input: both 'v' and 'rot' records present")
    if coords:
        if sorted(coords) != list(range(n)):
            raise FormatError("'v' records must cover vertices 0..n-1 exactly once")
        return build_from_coordinates(n, edges, [coords[i] for i in range(n)], *st)
    if rots:
        if sorted(rots) != list(range(n)):
            raise FormatError("'rot' records must cover vertices 0..n-1 exactly once")
        return build_from_rotation(n, edges, [rots[i] for i in range(n)], *st)
    raise FormatError("need either 'v' or 'rot' records for every vertex")


def read_graph(path: Union[str, Path]) -> EmbeddedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def format_graph(g: EmbeddedGraph, use_coords: bool = False) -> str:
    """Serialize ``g``; rotation records by default since they round-trip exactly."""
    out = [f"planar {g.n} {g.m}"]
    if use_coords:
        if g.coords is None:
            raise ValueError("graph has no coordinates")
        out.extend(f"v {i} {x!r} {y!r}" for i, (x, y) in enumerate(g.coords))
    out.extend(f"e {u} {v}" for u, v in g.edges)
    if not use_coords:
        for v, lst in enumerate(g.rotation):
            out.append(" ".join(["rot", str(v), *(str(d >> 1) for d in lst)]))
    out.append(f"st {g.s} {g.t}")
    return "\n".join(out) + "\n"


def write_graph(g: EmbeddedGraph, path: Union[str, Path], use_coords: bool = False) -> None:
    Path(path).write_text(format_graph(g, use_coords), encoding="utf-8")
