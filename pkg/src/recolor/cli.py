"""Command-line front-end: solve, bench, convert-carter, stats, oracle."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import CampaignConfig, convert_carter, instance_stats, run_campaign
from .coloring import serialize_coloring
from .driver import solve_vcol
from .graph import parse_dimacs, write_dimacs
from .oracle import exact_chromatic_number, is_k_colorable
from .tabu import DynTenure, FooTenure


def _load_graph(path: str):
    return parse_dimacs(Path(path).read_text())


def _parse_init(tokens: list[str]) -> tuple[str, int]:
    kind = tokens[0]
    if kind == "recycle-t":
        if len(tokens) != 2:
            raise SystemExit("--init recycle-t requires a class count")
        return kind, int(tokens[1])
    if kind in ("recycle-star", "greedy", "random"):
        if len(tokens) != 1:
            raise SystemExit(f"--init {kind} takes no argument")
        return kind, 1
    raise SystemExit(f"unknown init generator {kind!r}")


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.instance)
    init, recycle_t = _parse_init(args.init)
    scheme = DynTenure() if args.tenure == "dyn" else FooTenure()
    record = solve_vcol(
        g,
        engine=args.alg,
        init=init,
        recycle_t=recycle_t,
        recolor=args.recolor,
        scheme=scheme,
        time_limit=args.time_limit if args.time_limit > 0 else None,
        iter_cap=args.iter_cap,
        seed=args.seed,
        instance=Path(args.instance).stem,
    )
    print(f"instance: {record.instance}")
    print(f"dsatur colors: {record.dsatur_k}")
    print(f"best legal k: {record.best_k}")
    print(f"elapsed: {record.total_elapsed:.2f}s")
    if args.record_out:
        Path(args.record_out).write_text(record.to_json())
    if args.coloring_out and record.best_coloring is not None:
        Path(args.coloring_out).write_text(
            serialize_coloring(record.best_coloring)
        )
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = CampaignConfig.from_json(Path(args.config).read_text())
    _, rows = run_campaign(cfg)
    for row in rows:
        print(
            f"{row.instance}: min_k={row.min_k} ({row.attain}/{cfg.trials} trials),"
            f" mean dsatur k={row.mean_dsatur_k:.1f}"
        )
    return 0


def cmd_convert_carter(args: argparse.Namespace) -> int:
    g = convert_carter(Path(args.input).read_text())
    Path(args.output).write_text(write_dimacs(g))
    print(f"wrote {args.output}: n={g.n}, m={g.m}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    g = _load_graph(args.instance)
    info = instance_stats(g)
    print(f"n: {info['n']}")
    print(f"m: {info['m']}")
    print(f"max degree: {info['max_degree']}")
    print(f"mean degree: {info['mean_degree']:.3f}")
    print(f"degree stddev: {info['stddev_degree']:.3f}")
    print(f"degree CV: {info['degree_cv_percent']:.1f}%")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.instance)
    if args.k is not None:
        answer = is_k_colorable(g, args.k)
        print(f"{args.k}-colorable: {'yes' if answer else 'no'}")
    else:
        print(f"chromatic number: {exact_chromatic_number(g)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolor",
        description="Iterative vertex-coloring solver and benchmark harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the iterative solver on one instance")
    p.add_argument("instance")
    p.add_argument("--alg", choices=("tabucol", "partialcol"), default="tabucol")
    p.add_argument("--tenure", choices=("dyn", "foo"), default="dyn")
    p.add_argument(
        "--init",
        nargs="+",
        default=["recycle-star"],
        metavar=("GENERATOR", "T"),
        help="recycle-star | recycle-t N | greedy | random",
    )
    p.add_argument("--recolor", choices=("random", "least"), default="random")
    p.add_argument(
        "--time-limit", type=float, default=600.0,
        help="wall-clock budget in seconds; 0 disables the clock "
        "(requires --iter-cap)",
    )
    p.add_argument("--iter-cap", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--record-out", help="write the trial record as JSON")
    p.add_argument("--coloring-out", help="write the best legal coloring")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a multi-trial campaign from JSON config")
    p.add_argument("config")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser(
        "convert-carter", help="build a DIMACS conflict graph from a student file"
    )
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_convert_carter)

    p = sub.add_parser("stats", help="print instance degree statistics")
    p.add_argument("instance")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("oracle", help="exact small-instance colorability")
    p.add_argument("instance")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
