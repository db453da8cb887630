"""Command-line front end: compute, brute-force, cross-check, benchmark."""

from __future__ import annotations

import argparse
import gc
import json
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .flow_oracle import VitalityMap, brute_force_vitality
from .generators import FAMILIES, TERMINAL_RULES, GenSpec, gen_grid, gen_stacked_triangulation, generate, sample_spec
from .graph_io import FormatError, format_graph, read_graph
from .planar_core import EmbeddedGraph, GraphError
from .vitality import run_pipeline

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_CAP = 4

DEFAULT_ORACLE_CAP = 20000
DEFAULT_MAX_VERTICES = 2_000_000


class CapExceeded(Exception):
    pass


def _load(path: str) -> EmbeddedGraph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror or exc}") from None


def _oracle(g: EmbeddedGraph, cap: int) -> VitalityMap:
    if g.m > cap:
        raise CapExceeded(f"m={g.m} exceeds the oracle cap {cap}")
    return brute_force_vitality(g)


def build_report(
    g: EmbeddedGraph,
    vm: VitalityMap,
    phase1_ms: float,
    phase2_ms: float,
    bits: bool = False,
    verified: Optional[bool] = None,
) -> dict:
    rep = {
        "n": g.n,
        "m": g.m,
        "s": g.s,
        "t": g.t,
        "max_flow": vm.max_flow,
        "vital_edges": vm.vital_edges,
    }
    if bits:
        rep["bits"] = list(vm.bits)
    rep["phase1_ms"] = round(phase1_ms, 3)
    rep["phase2_ms"] = round(phase2_ms, 3)
    if verified is not None:
        rep["verified"] = verified
    return rep


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep)
    lines = []
    for key, val in rep.items():
        if isinstance(val, list):
            val = " ".join(map(str, val))
        elif isinstance(val, bool):
            val = "yes" if val else "no"
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def cmd_vitality(args) -> int:
    g = _load(args.file)
    res = run_pipeline(g, compress=not args.no_compress)
    verified = None
    if args.verify:
        verified = _oracle(g, args.oracle_cap) == res.vitality
    print(render(build_report(g, res.vitality, res.phase1_ms, res.phase2_ms, args.bits, verified), args.format))
    return EXIT_FAIL if verified is False else EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args.file)
    t0 = time.perf_counter()
    vm = _oracle(g, args.oracle_cap)
    ms = (time.perf_counter() - t0) * 1e3
    print(render(build_report(g, vm, ms, 0.0, args.bits), args.format))
    return EXIT_OK


def check_instance(spec: GenSpec, compress: bool = True) -> Optional[str]:
    """None when both engines agree on ``spec``, else a description of the disagreement."""
    g = generate(spec)
    got = run_pipeline(g, compress=compress)
    want = brute_force_vitality(g)
    if got.vitality.max_flow != want.max_flow:
        return f"max_flow {got.vitality.max_flow} != oracle {want.max_flow}"
    if got.vitality.bits != want.bits:
        diff = [e for e in range(g.m) if got.vitality.bits[e] != want.bits[e]]
        return f"bits differ on edges {diff[:10]}"
    return None


def _verify_specs(args) -> list[GenSpec]:
    fracs = [float(x) for x in args.delete_fraction.split(",")]
    return [
        sample_spec(
            args.family,
            args.seed + i,
            args.min_n,
            args.max_n,
            args.terminal_rule,
            fracs[i % len(fracs)],
        )
        for i in range(args.count)
    ]


def cmd_verify(args) -> int:
    specs = _verify_specs(args)
    compress = not args.no_compress
    if args.workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            outcomes = list(pool.map(check_instance, specs, [compress] * len(specs), chunksize=4))
    else:
        outcomes = [check_instance(sp, compress) for sp in specs]
    bad = 0
    for spec, why in zip(specs, outcomes):
        if why is not None:
            bad += 1
            size = "x".join(map(str, spec.size))
            print(
                f"MISMATCH family={spec.family} size={size} seed={spec.seed} "
                f"terminal_rule={spec.terminal_rule} delete_fraction={spec.delete_fraction}: {why}"
            )
    print(f"{len(specs)} instances, {bad} mismatches")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def _bench_graph(family: str, k: int) -> EmbeddedGraph:
    if family == "grid":
        return gen_grid(k, k)
    return gen_stacked_triangulation(k)


def time_pipeline(g: EmbeddedGraph) -> tuple[float, float, float]:
    """(phase1_ms, phase2_ms, total_ms) of one run, garbage collector paused."""
    gc.collect()
    was_on = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        res = run_pipeline(g)
        total = (time.perf_counter() - t0) * 1e3
    finally:
        if was_on:
            gc.enable()
    return res.phase1_ms, res.phase2_ms, total


def bench_rows(family: str, sizes: Sequence[int], repetitions: int) -> list[tuple[int, int, float, float, float]]:
    rows = []
    for k in sizes:
        samples = []
        m = 0
        for _ in range(repetitions):
            g = _bench_graph(family, k)
            m = g.m
            samples.append(time_pipeline(g))
            g = None
        n = k * k if family == "grid" else k
        med = [statistics.median(col) for col in zip(*samples)]
        rows.append((n, m, *med))
    return rows


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    for k in sizes:
        n = k * k if args.family == "grid" else k
        if n > args.max_vertices:
            raise CapExceeded(f"size {k} gives n={n}, over the budget of {args.max_vertices} vertices")
    print("n,m,phase1_ms,phase2_ms,total_ms")
    for n, m, p1, p2, tot in bench_rows(args.family, sizes, args.repetitions):
        print(f"{n},{m},{p1:.3f},{p2:.3f},{tot:.3f}", flush=True)
    return EXIT_OK


def _parse_size(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.lower().split("x"))


def cmd_generate(args) -> int:
    spec = GenSpec(args.family, _parse_size(args.size), args.seed, args.terminal_rule, args.delete_fraction)
    text = format_graph(generate(spec), use_coords=args.coords)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planarvit", description="Max-flow edge vitality in planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def report_flags(sp):
        sp.add_argument("file", help="graph file")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--bits", action="store_true", help="include the per-edge bit vector")
        sp.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, help="largest m the brute force accepts")

    sp = sub.add_parser("vitality", help="vitality bits via the planar algorithm")
    report_flags(sp)
    sp.add_argument("--no-compress", action="store_true", help="keep degree-2 chains uncompressed (testing)")
    sp.add_argument("--verify", action="store_true", help="cross-check against the brute force")
    sp.set_defaults(func=cmd_vitality)

    sp = sub.add_parser("oracle", help="vitality bits by one max-flow per edge")
    report_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="compare both engines on generated instances")
    sp.add_argument("--family", choices=FAMILIES, default="stacked_triangulation")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--min-n", type=int, default=4)
    sp.add_argument("--max-n", type=int, default=60)
    sp.add_argument("--terminal-rule", choices=TERMINAL_RULES, default="opposite_corners")
    sp.add_argument("--delete-fraction", default="0.0", help="comma list, cycled over instances")
    sp.add_argument("--no-compress", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="timing table as CSV")
    sp.add_argument("--family", choices=("grid", "stacked_triangulation"), default="grid")
    sp.add_argument("--sizes", default="64,128,256,512", help="grid side lengths (or n for triangulations)")
    sp.add_argument("--repetitions", type=int, default=3)
    sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("generate", help="write a generated instance")
    sp.add_argument("--family", choices=FAMILIES, default="grid")
    sp.add_argument("--size", default="8x8", help="ROWSxCOLS for grids, N for triangulations")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--terminal-rule", choices=TERMINAL_RULES, default="opposite_corners")
    sp.add_argument("--delete-fraction", type=float, default=0.0)
    sp.add_argument("--coords", action="store_true", help="write coordinates instead of rotations")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
