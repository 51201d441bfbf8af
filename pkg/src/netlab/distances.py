"""Average-distance estimation by weighted vertex sampling and uniform pairs.

The weighted estimator includes each vertex v independently with probability
p_v, runs a full BFS per sampled vertex, and scales its distance sums with
1/p_v (Horvitz-Thompson, unbiased for any plan).  The conditioned variant
rescales with p_v * |S| / E[|S|], conditioning on the realized sample size,
which trades a little bias for a substantially tighter estimate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median

import numpy as np

from .graph import Graph, bfs
from .search import bidirectional_bfs

__all__ = [
    "WEIGHTED",
    "UNIFORM_PAIRS",
    "SamplingPlan",
    "DistanceEstimate",
    "ComparisonResult",
    "uniform_inclusion_plan",
    "degree_proportional_plan",
    "exact_avg_distance",
    "weighted_avg_distance",
    "uniform_pair_avg_distance",
    "estimator_comparison",
]

WEIGHTED = "weighted"
UNIFORM_PAIRS = "uniform_pairs"


@dataclass(frozen=True)
class SamplingPlan:
    k: int
    p: np.ndarray  # per-vertex inclusion probability, all in (0, 1]
    mode: str = WEIGHTED

    @property
    def expected_sample_size(self) -> float:
        return float(self.p.sum())


@dataclass(frozen=True)
class DistanceEstimate:
    estimate: float
    realized_sample_size: int
    relative_error: float | None = None


def uniform_inclusion_plan(g: Graph, k: int) -> SamplingPlan:
    """Default plan: p_v = min(1, k/n) for every vertex."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return SamplingPlan(k, np.full(g.n, min(1.0, k / g.n)))


def degree_proportional_plan(g: Graph, k: int) -> SamplingPlan:
    """Alternative plan with p_v proportional to deg(v), scaled to sum k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    p = np.minimum(1.0, k * g.degrees / (2.0 * g.m))
    return SamplingPlan(k, p)


def _require_connected(g: Graph) -> None:
    if g.n > 1 and int(bfs(g, 0).max()) >= g.n:
        raise ValueError("graph must be connected")


def exact_avg_distance(g: Graph) -> float:
    """Exact mean distance over unordered vertex pairs (all-sources BFS)."""
    _require_connected(g)
    total = 0
    for v in range(g.n):
        total += int(bfs(g, v).sum())
    return total / (g.n * (g.n - 1))


def weighted_avg_distance(g: Graph, k: int, seed: int, conditioned: bool = True,
                          plan: SamplingPlan | None = None,
                          exact: float | None = None) -> DistanceEstimate:
    """Weighted-sampling estimate of the mean distance.

    An empty sample is redrawn from the next block of the same stream.
    """
    _require_connected(g)
    if plan is None:
        plan = uniform_inclusion_plan(g, k)
    rng = np.random.default_rng(seed)
    while True:
        sample = np.nonzero(rng.random(g.n) < plan.p)[0]
        if sample.size:
            break
    expected = plan.expected_sample_size
    total = 0.0
    for u in sample:
        q = float(plan.p[u])
        if conditioned:
            q = q * sample.size / expected
        total += float(bfs(g, int(u)).sum()) / q
    estimate = float(total / (g.n * (g.n - 1)))
    err = abs(estimate - float(exact)) / float(exact) if exact is not None else None
    return DistanceEstimate(estimate, int(sample.size), err)


def uniform_pair_avg_distance(g: Graph, k: int, seed: int,
                              exact: float | None = None) -> DistanceEstimate:
    """Mean distance over k uniform distinct vertex pairs (bidirectional BFS)."""
    _require_connected(g)
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = np.random.default_rng(seed)
    total = 0
    for _ in range(k):
        while True:
            s, t = rng.integers(0, g.n, size=2)
            if s != t:
                break
        total += bidirectional_bfs(g, int(s), int(t)).distance
    err = abs(total / k - float(exact)) / float(exact) if exact is not None else None
    return DistanceEstimate(total / k, k, err)


@dataclass(frozen=True)
class ComparisonResult:
    """Summary rows (mode, k, median error, median wall time) plus raw runs."""

    summary: list[dict]
    runs: list[dict]


RUN_COLUMNS = ["mode", "k", "run", "relative_error", "wall_time_s",
               "realized_sample_size"]


def comparison_rows_to_csv(result: ComparisonResult, path) -> None:
    """Persist the per-run comparison rows (the figure tooling reads these)."""
    import csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write("# netlab-schema=1\n")
        writer = csv.DictWriter(fh, fieldnames=RUN_COLUMNS)
        writer.writeheader()
        writer.writerows(result.runs)


def estimator_comparison(g: Graph, k_values: tuple[int, ...] = (400,), runs: int = 50,
                         seed: int = 0, exact: float | None = None,
                         modes: tuple[str, ...] = (WEIGHTED, UNIFORM_PAIRS)) -> ComparisonResult:
    """Median relative error and wall time per (mode, k) over seeded runs.

    Mode names: ``weighted`` (conditioned), ``weighted_unconditioned``, and
    ``uniform_pairs``.  All modes share the same run seeds so errors pair up.
    Realized sample sizes stay visible in the raw rows.
    """
    if exact is None:
        exact = exact_avg_distance(g)
    run_seeds = [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(runs)]
    raw: list[dict] = []
    summary: list[dict] = []
    for mode in modes:
        for k in k_values:
            errors, times = [], []
            for r, rs in enumerate(run_seeds):
                t0 = time.perf_counter()
                if mode == WEIGHTED:
                    est = weighted_avg_distance(g, k, rs, conditioned=True, exact=exact)
                elif mode == "weighted_unconditioned":
                    est = weighted_avg_distance(g, k, rs, conditioned=False, exact=exact)
                elif mode == UNIFORM_PAIRS:
                    est = uniform_pair_avg_distance(g, k, rs, exact=exact)
                else:
                    raise ValueError(f"unknown mode {mode!r}")
                wall = time.perf_counter() - t0
                errors.append(est.relative_error)
                times.append(wall)
                raw.append({"mode": mode, "k": k, "run": r,
                            "relative_error": est.relative_error,
                            "wall_time_s": wall,
                            "realized_sample_size": est.realized_sample_size})
            summary.append({"mode": mode, "k": k,
                            "median_relative_error": float(median(errors)),
                            "median_wall_time_s": float(median(times))})
    return ComparisonResult(summary, raw)
