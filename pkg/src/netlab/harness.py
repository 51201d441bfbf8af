"""Suite orchestration: ingest, generate grids, measure, aggregate, CSV I/O.

Cost records normalize every measurement into (cost, base, exponent) where
exponent = ln(max(cost, 1)) / ln(base value) and base is n or m, so regimes
can be compared across algorithms.  CSV output is deterministic: rows are
sorted by (network, algorithm, seed) and only the wall_time_s column varies
between reruns.
"""

from __future__ import annotations

import csv
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import generators
from .budget import Budget
from .cliques import enumerate_maximal_cliques, structural_report
from .community import louvain_first_phase
from .generators import GeneratorParams
from .graph import Graph, build_graph, largest_component
from .kernels import omega_core_kernel, vc_dominance_kernel
from .locality import NEG_INF, heterogeneity, locality
from .search import bidir_cost_experiment, ifub_foursweep_hd, ifub_hd

__all__ = [
    "SCHEMA_COMMENT",
    "COST_COLUMNS",
    "ALGORITHMS",
    "CostRecord",
    "BinnedCell",
    "CorpusEntry",
    "NetworkSource",
    "SuiteConfig",
    "GridConfig",
    "GRID_BETAS",
    "GRID_TEMPERATURES",
    "cost_exponent",
    "ingest",
    "run_suite",
    "aggregate",
    "generate_grid",
    "write_cost_csv",
    "read_cost_csv",
    "write_binned_csv",
    "write_stats_csv",
]

SCHEMA_COMMENT = "# netlab-schema=1"
COST_COLUMNS = ["network", "algorithm", "param_json", "seed", "cost", "base",
                "exponent", "wall_time_s", "timed_out", "locality",
                "heterogeneity", "n", "m"]

GRID_BETAS = tuple(round(float(b), 3) for b in np.geomspace(2.1, 25.0, 10))
GRID_TEMPERATURES = (0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.97)


@dataclass(frozen=True)
class CostRecord:
    network: str
    algorithm: str
    param_json: str
    seed: int
    cost: float
    base: str  # "n" or "m"
    exponent: float
    wall_time_s: float
    timed_out: bool
    locality: float
    heterogeneity: float
    n: int
    m: int


@dataclass(frozen=True)
class BinnedCell:
    algorithm: str
    locality_bin_center: float
    heterogeneity_bin_center: float
    count: int
    mean_exponent: float


@dataclass(frozen=True)
class CorpusEntry:
    path: str
    name: str
    n: int
    m: int
    density: float
    excluded_reason: str | None = None


@dataclass(frozen=True)
class NetworkSource:
    """A network to measure: either an edge-list file or generator params."""

    name: str
    path: str | None = None
    params: GeneratorParams | None = None


@dataclass(frozen=True)
class SuiteConfig:
    networks: tuple[NetworkSource, ...]
    algorithms: tuple[str, ...]
    replicates: int = 1
    base_seed: int = 0
    timeout_min: float = 30.0
    workers: int = 1


@dataclass(frozen=True)
class GridConfig:
    n: int = 10_000
    avg_degree: float = 10.0
    betas: tuple[float, ...] = GRID_BETAS
    temperatures: tuple[float, ...] = GRID_TEMPERATURES
    replicates: int = 5
    base_seed: int = 0
    ground_space: str = generators.TORUS


def cost_exponent(cost: float, base_value: int) -> float:
    if base_value <= 1:
        return 0.0
    return math.log(max(cost, 1.0)) / math.log(base_value)


# --- measurements -----------------------------------------------------------

def _measure_bidir(g: Graph, seed: int, budget: Budget):
    mean, _ = bidir_cost_experiment(g, pairs=100, seed=seed)
    return mean, "m", False, {"pairs": 100}


def _measure_ifub_hd(g: Graph, seed: int, budget: Budget):
    res = ifub_hd(g, budget)
    return float(res.bfs_count), "n", res.timed_out, {"diameter": res.diameter}


def _measure_ifub_4sweephd(g: Graph, seed: int, budget: Budget):
    res = ifub_foursweep_hd(g, budget)
    return float(res.bfs_count), "n", res.timed_out, {
        "diameter": res.diameter, "four_sweep_lower_bound": res.four_sweep_lower_bound}


def _measure_vc_dominance(g: Graph, seed: int, budget: Budget):
    res = vc_dominance_kernel(g)
    return float(res.kernel_size), "n", False, {"relative_size": res.relative_size}


def _measure_louvain(g: Graph, seed: int, budget: Budget):
    res = louvain_first_phase(g)
    return float(res.iterations), "n", False, {
        "order": "ascending", "modularity": round(res.modularity, 6)}


def _measure_clique_count(g: Graph, seed: int, budget: Budget):
    stats = enumerate_maximal_cliques(g, budget)
    return float(stats.maximal_clique_count), "m", stats.timed_out, {
        "clique_number": stats.clique_number}


def _measure_omega_core(g: Graph, seed: int, budget: Budget):
    stats = enumerate_maximal_cliques(g, budget)
    res = omega_core_kernel(g, stats.clique_number)
    return float(res.kernel_size), "n", stats.timed_out, {
        "clique_number": stats.clique_number, "relative_size": res.relative_size}


ALGORITHMS = {
    "bidir_bfs": _measure_bidir,
    "ifub_hd": _measure_ifub_hd,
    "ifub_4sweephd": _measure_ifub_4sweephd,
    "vc_dominance": _measure_vc_dominance,
    "louvain": _measure_louvain,
    "clique_count": _measure_clique_count,
    "omega_core": _measure_omega_core,
}


# --- ingest -----------------------------------------------------------------

def ingest(path: str | Path) -> tuple[CorpusEntry, Graph | None]:
    """Parse an edge-list file, reduce to the largest component, classify.

    Lines starting with '#' or '%' and blank lines are ignored; everything
    else must be a whitespace-separated integer pair.
    """
    path = Path(path)
    pairs: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            stripped = line.strip()
            if not stripped or stripped[0] in "#%":
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise ValueError(f"{path}:{lineno}: expected an integer pair")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: expected an integer pair") from None
            pairs.append((u, v))
    name = path.stem
    if not pairs:
        return CorpusEntry(str(path), name, 0, 0, 0.0, "empty"), None
    g = largest_component(build_graph(pairs))
    entry_args = (str(path), name, g.n, g.m, g.density())
    if g.n <= 1 or g.m == 0:
        return CorpusEntry(*entry_args, "empty"), None
    if g.m == g.n - 1:
        return CorpusEntry(*entry_args, "tree"), None
    if g.density() >= 0.1:
        return CorpusEntry(*entry_args, "dense"), None
    return CorpusEntry(*entry_args), g


# --- suite ------------------------------------------------------------------

def _resolve_graph(source: NetworkSource) -> Graph:
    if source.path is not None:
        entry, g = ingest(source.path)
        if g is None:
            raise ValueError(f"{source.path}: excluded ({entry.excluded_reason})")
        return g
    if source.params is not None:
        return largest_component(generators.generate(source.params))
    raise ValueError(f"network {source.name}: no path or params")


def _run_network(task) -> list[CostRecord]:
    source, algorithms, replicates, base_seed, timeout_min = task
    records: list[CostRecord] = []
    try:
        g = _resolve_graph(source)
        het = heterogeneity(g)
        loc = locality(g).locality
    except Exception as exc:  # record the failure for every planned run
        err = json.dumps({"error": str(exc)}, sort_keys=True)
        nan = float("nan")
        return [CostRecord(network=source.name, algorithm=alg, param_json=err,
                           seed=base_seed ^ rep, cost=nan, base="n",
                           exponent=nan, wall_time_s=0.0, timed_out=False,
                           locality=nan, heterogeneity=nan, n=0, m=0)
                for alg in algorithms for rep in range(replicates)]
    base_values = {"n": g.n, "m": g.m}
    for alg in algorithms:
        fn = ALGORITHMS[alg]
        for rep in range(replicates):
            seed = base_seed ^ rep
            budget = Budget(seconds=timeout_min * 60)
            t0 = time.perf_counter()
            try:
                cost, base, timed_out, extra = fn(g, seed, budget)
                exponent = cost_exponent(cost, base_values[base])
            except Exception as exc:  # isolate per-run failures
                cost, base, timed_out = float("nan"), "n", False
                exponent, extra = float("nan"), {"error": str(exc)}
            wall = time.perf_counter() - t0
            records.append(CostRecord(
                network=source.name, algorithm=alg,
                param_json=json.dumps(extra, sort_keys=True), seed=seed,
                cost=cost, base=base, exponent=exponent, wall_time_s=wall,
                timed_out=timed_out, locality=loc, heterogeneity=het,
                n=g.n, m=g.m))
    return records


def resolve_workers(requested: int | None) -> int:
    env = os.environ.get("NETLAB_WORKERS")
    if env:
        return max(1, int(env))
    if requested:
        return max(1, requested)
    return 1


def run_suite(config: SuiteConfig) -> list[CostRecord]:
    """One record per (network, algorithm, replicate); failures are recorded,
    never propagated."""
    unknown = set(config.algorithms) - set(ALGORITHMS)
    if unknown:
        raise ValueError(f"unknown algorithms: {sorted(unknown)}")
    tasks = [(src, config.algorithms, config.replicates, config.base_seed,
              config.timeout_min) for src in config.networks]
    records: list[CostRecord] = []
    workers = resolve_workers(config.workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(_run_network, tasks):
                records.extend(batch)
    else:
        for task in tasks:
            records.extend(_run_network(task))
    records.sort(key=lambda r: (r.network, r.algorithm, r.seed))
    return records


# --- aggregation ------------------------------------------------------------

def aggregate(records: list[CostRecord], loc_bin_width: float = 0.05,
              het_bin_width: float = 0.25) -> list[BinnedCell]:
    """Mean exponent per (algorithm, locality bin, heterogeneity bin).

    Bins are floor(value / width); -inf heterogeneity lands in the lowest
    occupied finite bin.  Records with undefined exponents are left out.
    """
    usable = [r for r in records
              if math.isfinite(r.exponent) and math.isfinite(r.locality)]
    finite_het_bins = [math.floor(r.heterogeneity / het_bin_width)
                       for r in usable if r.heterogeneity != NEG_INF]
    lowest = min(finite_het_bins) if finite_het_bins else 0
    cells: dict[tuple, list[float]] = {}
    for r in usable:
        lb = math.floor(r.locality / loc_bin_width)
        hb = (math.floor(r.heterogeneity / het_bin_width)
              if r.heterogeneity != NEG_INF else lowest)
        cells.setdefault((r.algorithm, lb, hb), []).append(r.exponent)
    out = []
    for (alg, lb, hb), exps in sorted(cells.items()):
        out.append(BinnedCell(
            algorithm=alg,
            locality_bin_center=(lb + 0.5) * loc_bin_width,
            heterogeneity_bin_center=(hb + 0.5) * het_bin_width,
            count=len(exps),
            mean_exponent=sum(exps) / len(exps)))
    return out


# --- grid generation --------------------------------------------------------

def grid_configurations(config: GridConfig) -> list[GeneratorParams]:
    """The default desk grid: one params object per configuration (seed 0)."""
    out = []
    for beta in config.betas:
        for t in config.temperatures:
            out.append(GeneratorParams(generators.GIRG, config.n, config.avg_degree,
                                       beta=beta, temperature=t,
                                       ground_space=config.ground_space))
    for beta in config.betas:
        out.append(GeneratorParams(generators.CHUNG_LU, config.n, config.avg_degree,
                                   beta=beta))
    out.append(GeneratorParams(generators.ER, config.n, config.avg_degree))
    return out


def config_name(p: GeneratorParams, replicate: int) -> str:
    if p.model == generators.ER:
        return f"er_r{replicate}"
    if p.model == generators.CHUNG_LU:
        return f"chung_lu_b{p.beta:g}_r{replicate}"
    return f"girg_{p.ground_space}_b{p.beta:g}_t{p.temperature:g}_r{replicate}"


def config_seed(base_seed: int, config_index: int) -> int:
    return int(np.random.SeedSequence([base_seed, config_index])
               .generate_state(1, dtype=np.uint64)[0] >> 1)


def grid_instances(config: GridConfig) -> list[tuple[str, GeneratorParams]]:
    """All (name, seeded params) pairs of the grid; replicate seeds are
    config_seed XOR replicate index."""
    out = []
    for idx, base in enumerate(grid_configurations(config)):
        cseed = config_seed(config.base_seed, idx)
        for rep in range(config.replicates):
            p = generators.with_seed(base, cseed ^ rep)
            out.append((config_name(base, rep), p))
    return out


def _generate_one(task):
    name, params, out_dir = task
    g = largest_component(generators.generate(params))
    row = {
        "name": name, "model": params.model, "n_target": params.n,
        "avg_degree_target": params.target_avg_degree, "beta": params.beta,
        "temperature": params.temperature, "ground_space": params.ground_space,
        "seed": params.seed, "n": g.n, "m": g.m,
        "avg_degree": 2.0 * g.m / g.n,
    }
    if out_dir is not None:
        fname = Path(out_dir) / f"{name}.edges"
        with open(fname, "w", encoding="utf-8") as fh:
            fh.write(f"# {params.model} n={params.n} avg_degree={params.target_avg_degree}"
                     f" beta={params.beta} T={params.temperature}"
                     f" ground={params.ground_space} seed={params.seed}\n")
            for u, v in g.edge_array():
                fh.write(f"{u} {v}\n")
        row["file"] = str(fname)
    return row


def generate_grid(config: GridConfig, out_dir: str | Path | None,
                  workers: int = 1) -> list[dict]:
    """Generate the grid, write edge lists plus manifest.csv, return the manifest."""
    if out_dir is not None:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
    tasks = [(name, params, str(out_dir) if out_dir is not None else None)
             for name, params in grid_instances(config)]
    workers = resolve_workers(workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_generate_one, tasks, chunksize=4))
    else:
        rows = [_generate_one(t) for t in tasks]
    if out_dir is not None:
        manifest = Path(out_dir) / "manifest.csv"
        with open(manifest, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
    return rows


# --- CSV I/O ----------------------------------------------------------------

def write_cost_csv(records: list[CostRecord], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(SCHEMA_COMMENT + "\n")
        writer = csv.writer(fh)
        writer.writerow(COST_COLUMNS)
        for r in records:
            writer.writerow([r.network, r.algorithm, r.param_json, r.seed,
                             repr(float(r.cost)), r.base, repr(float(r.exponent)),
                             repr(float(r.wall_time_s)), r.timed_out,
                             repr(float(r.locality)), repr(float(r.heterogeneity)),
                             r.n, r.m])


def read_cost_csv(path: str | Path) -> list[CostRecord]:
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line for line in fh if not line.startswith("#")]
    reader = csv.DictReader(rows)
    for row in reader:
        records.append(CostRecord(
            network=row["network"], algorithm=row["algorithm"],
            param_json=row["param_json"], seed=int(row["seed"]),
            cost=float(row["cost"]), base=row["base"],
            exponent=float(row["exponent"]),
            wall_time_s=float(row["wall_time_s"]),
            timed_out=row["timed_out"] == "True",
            locality=float(row["locality"]),
            heterogeneity=float(row["heterogeneity"]),
            n=int(row["n"]), m=int(row["m"])))
    return records


def write_binned_csv(cells: list[BinnedCell], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(SCHEMA_COMMENT + "\n")
        writer = csv.writer(fh)
        writer.writerow(["algorithm", "locality_bin_center",
                         "heterogeneity_bin_center", "count", "mean_exponent"])
        for c in cells:
            writer.writerow([c.algorithm, repr(float(c.locality_bin_center)),
                             repr(float(c.heterogeneity_bin_center)), c.count,
                             repr(float(c.mean_exponent))])


STATS_COLUMNS = ["network", "n", "m", "degeneracy", "closure", "weak_closure",
                 "maximal_clique_count", "clique_number", "count_relative_to_m",
                 "cliques_timed_out", "heterogeneity", "locality",
                 "degree_locality", "distance_locality", "clustering_coefficient"]


def _stats_one(task):
    source, timeout_min = task
    g = _resolve_graph(source)
    row = structural_report(g, Budget(seconds=timeout_min * 60))
    row["network"] = source.name
    return row


def stats_rows(sources: list[NetworkSource], timeout_min: float = 30.0,
               workers: int = 1) -> list[dict]:
    tasks = [(s, timeout_min) for s in sources]
    workers = resolve_workers(workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_stats_one, tasks))
    else:
        rows = [_stats_one(t) for t in tasks]
    rows.sort(key=lambda r: r["network"])
    return rows


def write_stats_csv(rows: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(SCHEMA_COMMENT + "\n")
        writer = csv.DictWriter(fh, fieldnames=STATS_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in STATS_COLUMNS})
