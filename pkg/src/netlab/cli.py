"""Command line front end: generate, measure, stats, aggregate."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import harness
from .harness import (ALGORITHMS, GridConfig, NetworkSource, SuiteConfig,
                      aggregate, generate_grid, read_cost_csv, run_suite,
                      stats_rows, write_binned_csv, write_cost_csv,
                      write_stats_csv)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout-min", type=float, default=30.0)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (NETLAB_WORKERS overrides)")


def _network_sources(args) -> list[NetworkSource]:
    sources = []
    if args.manifest:
        with open(args.manifest, newline="", encoding="utf-8") as fh:
            for row in csv.DictReader(fh):
                sources.append(NetworkSource(row["name"], path=row["file"]))
    for path in args.networks:
        sources.append(NetworkSource(Path(path).stem, path=path))
    if not sources:
        raise SystemExit("no networks given (pass files or --manifest)")
    return sources


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="netlab",
        description="Generate networks, measure algorithm costs, aggregate exponents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate the parameter grid")
    p_gen.add_argument("--out", required=True, help="output directory")
    p_gen.add_argument("--n", type=int, default=10_000)
    p_gen.add_argument("--avg-degree", type=float, default=10.0,
                       help="target average degree (20 for the coloring study)")
    p_gen.add_argument("--replicates", type=int, default=5)
    p_gen.add_argument("--ground-space", choices=["torus", "square"], default="torus")
    p_gen.add_argument("--grid-file", default=None,
                       help="JSON overriding betas/temperatures/replicates")
    _add_common(p_gen)

    p_meas = sub.add_parser("measure", help="run algorithms over networks")
    p_meas.add_argument("networks", nargs="*", help="edge-list files")
    p_meas.add_argument("--manifest", default=None, help="manifest.csv from generate")
    p_meas.add_argument("--algorithms", default=",".join(ALGORITHMS),
                        help="comma-separated subset of: " + ",".join(ALGORITHMS))
    p_meas.add_argument("--replicates", type=int, default=1)
    p_meas.add_argument("--out", required=True)
    _add_common(p_meas)

    p_stats = sub.add_parser("stats", help="structural parameter report per network")
    p_stats.add_argument("networks", nargs="*", help="edge-list files")
    p_stats.add_argument("--manifest", default=None)
    p_stats.add_argument("--out", required=True)
    _add_common(p_stats)

    p_agg = sub.add_parser("aggregate", help="bin cost records by locality/heterogeneity")
    p_agg.add_argument("input", help="cost CSV from measure")
    p_agg.add_argument("--out", required=True)
    p_agg.add_argument("--loc-bin", type=float, default=0.05)
    p_agg.add_argument("--het-bin", type=float, default=0.25)

    args = parser.parse_args(argv)

    if args.command == "generate":
        overrides = {}
        if args.grid_file:
            overrides = json.loads(Path(args.grid_file).read_text())
        config = GridConfig(
            n=args.n, avg_degree=args.avg_degree,
            betas=tuple(overrides.get("betas", harness.GRID_BETAS)),
            temperatures=tuple(overrides.get("temperatures", harness.GRID_TEMPERATURES)),
            replicates=int(overrides.get("replicates", args.replicates)),
            base_seed=args.seed, ground_space=args.ground_space)
        rows = generate_grid(config, args.out, workers=args.workers or 1)
        print(f"generated {len(rows)} networks into {args.out}")
        return 0

    if args.command == "measure":
        sources = _network_sources(args)
        algorithms = tuple(a for a in args.algorithms.split(",") if a)
        config = SuiteConfig(networks=tuple(sources), algorithms=algorithms,
                             replicates=args.replicates, base_seed=args.seed,
                             timeout_min=args.timeout_min,
                             workers=args.workers or 1)
        records = run_suite(config)
        write_cost_csv(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
        return 0

    if args.command == "stats":
        sources = _network_sources(args)
        rows = stats_rows(sources, timeout_min=args.timeout_min,
                          workers=args.workers or 1)
        write_stats_csv(rows, args.out)
        print(f"wrote {len(rows)} rows to {args.out}")
        return 0

    if args.command == "aggregate":
        records = read_cost_csv(args.input)
        cells = aggregate(records, loc_bin_width=args.loc_bin,
                          het_bin_width=args.het_bin)
        write_binned_csv(cells, args.out)
        print(f"wrote {len(cells)} cells to {args.out}")
        return 0

    return 1


if __name__ == "__main__":
    sys.exit(main())
