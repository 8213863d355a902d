"""Command-line entry point: ``grounded {clique,gen,reduce,bench}``."""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import cliques
from .errors import GroundedError
from .formats import emit_shapes, parse_graph, parse_shapes
from .generate import CLASSES, GenConfig, generate
from .reductions import build_ymonotone_rep, verify_reduction

BENCH_ALGORITHMS = {
    "two-sided": cliques.max_clique_two_sided,
    "square": cliques.max_clique_square,
    "one-sided": cliques.max_clique_one_sided,
}


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_clique(args) -> int:
    rep = parse_shapes(Path(args.file).read_text())
    clique = cliques.max_clique(rep) if args.algo == "auto" else cliques.ALGORITHMS[args.algo](rep)
    order = {sid: i for i, sid in enumerate(rep.ids)}
    print(f"size={clique.size}")
    for sid in sorted(clique.members, key=order.__getitem__):
        print(sid)
    return 0


def cmd_gen(args) -> int:
    cfg = GenConfig(args.cls, args.n, args.seed, direction=args.direction)
    _write(emit_shapes(generate(cfg)), args.output)
    return 0


def cmd_reduce(args) -> int:
    art = build_ymonotone_rep(parse_graph(Path(args.graph).read_text()))
    _write(emit_shapes(art.rep), args.output)
    if args.verify:
        report = verify_reduction(art)
        if not report.ok:
            print(f"verification failed: {report}", file=sys.stderr)
            return 2
        print(f"verified: {art.Gbar.n} strings, {art.Gbar.num_edges} intersections",
              file=sys.stderr)
    return 0


def bench_times(cls: str, sizes: list[int], trials: int, seed: int = 0) -> list[tuple[int, float]]:
    """Median wall time of the class's algorithm per size, generation excluded."""
    algo = BENCH_ALGORITHMS[cls]
    rows = []
    for n in sizes:
        samples = []
        for t in range(trials):
            rep = generate(GenConfig(cls, n, seed + t))
            start = time.perf_counter()
            algo(rep)
            samples.append(time.perf_counter() - start)
        rows.append((n, statistics.median(samples)))
    return rows


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    print("n,trials,median_seconds")
    for n, secs in bench_times(args.cls, sizes, args.trials, args.seed):
        print(f"{n},{args.trials},{secs:.6f}", flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grounded",
                                     description="Maximum cliques in grounded L-shape and string graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clique", help="largest clique of a shape file")
    p.add_argument("--algo", choices=["auto", *cliques.ALGORITHMS], default="auto")
    p.add_argument("file")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("gen", help="random general-position L-shape instance")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--direction", choices=["L", "R"], default="R",
                   help="arm direction for one-sided instances")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="string drawing of the complement of a 2-subdivided cubic graph")
    p.add_argument("--graph", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="median wall time per size, as CSV")
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroundedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
