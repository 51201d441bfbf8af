"""Render netlab CSV outputs into the standard figure set.

Pure CSV consumer: nothing here computes metrics, it only draws what the
measurement pipeline emitted.  Rendering is deterministic (fixed layout,
salted SVG ids, scrubbed timestamps) so output files hash identically across
reruns of the same inputs.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import Normalize  # noqa: E402

__all__ = ["FigureSpec", "KINDS", "load_spec", "build_figure", "render",
           "binned_point_size"]

KINDS = ("heat_scatter", "binned_scatter", "error_boxes", "error_vs_time",
         "pair_panel", "density_panel")

BASE_RADIUS = 4.0  # points; binned markers scale as 1 + log10(count)
CMAP = "RdYlGn_r"

plt.rcParams["svg.hashsalt"] = "netlab-plots"


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple[str, ...]
    output: str  # file stem; render writes <stem>.svg and <stem>.png
    color_min: float = 0.0
    color_max: float = 1.0
    titles: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}")
        if not self.inputs:
            raise ValueError("figure needs at least one input CSV")


def load_spec(path: str | Path) -> FigureSpec:
    raw = json.loads(Path(path).read_text())
    return FigureSpec(
        kind=raw["kind"],
        inputs=tuple(raw["inputs"]),
        output=raw.get("output", raw["kind"]),
        color_min=float(raw.get("color_min", 0.0)),
        color_max=float(raw.get("color_max", 1.0)),
        titles=tuple(raw.get("titles", ())),
    )


def _read_csv(path: str | Path, required: tuple[str, ...]) -> dict[str, list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        rows = [line for line in fh if not line.startswith("#")]
    reader = csv.DictReader(rows)
    fieldnames = reader.fieldnames or []
    missing = [c for c in required if c not in fieldnames]
    if missing:
        raise ValueError(f"{path}: missing columns {missing}")
    table: dict[str, list[str]] = {c: [] for c in fieldnames}
    for row in reader:
        for c in fieldnames:
            table[c].append(row[c])
    return table


def _floats(table: dict[str, list[str]], column: str) -> np.ndarray:
    return np.array([float(x) for x in table[column]])


def binned_point_size(count: np.ndarray | float) -> np.ndarray | float:
    """Marker area for an aggregated cell; radius grows as 1 + log10(count)."""
    radius = BASE_RADIUS * (1.0 + np.log10(count))
    return radius ** 2


def _kde(values: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Gaussian kernel density with Silverman bandwidth."""
    values = values[np.isfinite(values)]
    if len(values) == 0:
        return np.zeros_like(grid)
    sigma = values.std()
    if sigma == 0:
        sigma = max(abs(values[0]), 1.0) * 0.01
    bw = 1.06 * sigma * len(values) ** (-1 / 5)
    diff = (grid[:, None] - values[None, :]) / bw
    return np.exp(-0.5 * diff ** 2).sum(axis=1) / (len(values) * bw * math.sqrt(2 * math.pi))


def _panel_title(spec: FigureSpec, i: int) -> str:
    if i < len(spec.titles):
        return spec.titles[i]
    return Path(spec.inputs[i]).stem


def _heat_scatter(spec: FigureSpec):
    norm = Normalize(spec.color_min, spec.color_max)
    n = len(spec.inputs)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n + 1.2, 3.6), squeeze=False)
    for i, path in enumerate(spec.inputs):
        table = _read_csv(path, ("heterogeneity", "locality", "exponent"))
        het = _floats(table, "heterogeneity")
        loc = _floats(table, "locality")
        exp = _floats(table, "exponent")
        keep = np.isfinite(het) & np.isfinite(loc) & np.isfinite(exp)
        ax = axes[0][i]
        sc = ax.scatter(het[keep], loc[keep], c=exp[keep], cmap=CMAP, norm=norm,
                        s=14, linewidths=0)
        ax.set_xlabel("heterogeneity")
        ax.set_ylabel("locality")
        ax.set_title(_panel_title(spec, i))
        ax.set_ylim(-0.02, 1.02)
    fig.colorbar(sc, ax=[a for row in axes for a in row], label="exponent",
                 fraction=0.04)
    return fig


def _binned_scatter(spec: FigureSpec):
    norm = Normalize(spec.color_min, spec.color_max)
    n = len(spec.inputs)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n + 1.2, 3.6), squeeze=False)
    for i, path in enumerate(spec.inputs):
        table = _read_csv(path, ("locality_bin_center", "heterogeneity_bin_center",
                                 "count", "mean_exponent"))
        het = _floats(table, "heterogeneity_bin_center")
        loc = _floats(table, "locality_bin_center")
        cnt = _floats(table, "count")
        exp = _floats(table, "mean_exponent")
        ax = axes[0][i]
        sc = ax.scatter(het, loc, c=exp, cmap=CMAP, norm=norm,
                        s=binned_point_size(cnt), linewidths=0.25,
                        edgecolors="black")
        ax.set_xlabel("heterogeneity")
        ax.set_ylabel("locality")
        ax.set_title(_panel_title(spec, i))
        ax.set_ylim(-0.02, 1.02)
    fig.colorbar(sc, ax=[a for row in axes for a in row], label="mean exponent",
                 fraction=0.04)
    return fig


MODE_COLORS = {"weighted": "tab:blue", "weighted_unconditioned": "tab:green",
               "uniform_pairs": "tab:red"}


def _error_boxes(spec: FigureSpec):
    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    table = _read_csv(spec.inputs[0], ("mode", "k", "relative_error"))
    modes = sorted(set(table["mode"]))
    ks = sorted({int(k) for k in table["k"]})
    width = 0.8 / max(len(modes), 1)
    for mi, mode in enumerate(modes):
        data, positions = [], []
        for ki, k in enumerate(ks):
            errs = [float(e) for m, kk, e in zip(table["mode"], table["k"],
                                                 table["relative_error"])
                    if m == mode and int(kk) == k]
            if errs:
                data.append(errs)
                positions.append(ki + width * (mi - (len(modes) - 1) / 2))
        color = MODE_COLORS.get(mode, "gray")
        bp = ax.boxplot(data, positions=positions, widths=width * 0.9,
                        patch_artist=True, manage_ticks=False)
        for box in bp["boxes"]:
            box.set_facecolor(color)
        ax.plot([], [], color=color, label=mode)
    ax.set_xticks(range(len(ks)))
    ax.set_xticklabels([str(k) for k in ks])
    ax.set_yscale("log")
    ax.set_xlabel("k")
    ax.set_ylabel("relative error")
    ax.legend(loc="upper right", fontsize=8)
    return fig


def _error_vs_time(spec: FigureSpec):
    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    table = _read_csv(spec.inputs[0], ("mode", "wall_time_s", "relative_error"))
    modes = sorted(set(table["mode"]))
    for mode in modes:
        t = np.array([float(x) for m, x in zip(table["mode"], table["wall_time_s"])
                      if m == mode])
        e = np.array([float(x) for m, x in zip(table["mode"], table["relative_error"])
                      if m == mode])
        e = np.maximum(e, 1e-12)  # keep zero errors drawable on the log axis
        ax.scatter(t, e, s=10, linewidths=0, label=mode,
                   color=MODE_COLORS.get(mode, "gray"))
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("wall time [s]")
    ax.set_ylabel("relative error")
    ax.legend(loc="upper right", fontsize=8)
    return fig


PAIR_VARIABLES = ("degeneracy", "weak_closure", "closure", "heterogeneity",
                  "locality", "count_relative_to_m")
LOG_VARIABLES = {"degeneracy", "weak_closure", "closure"}


def _pair_panel(spec: FigureSpec):
    table = _read_csv(spec.inputs[0], PAIR_VARIABLES)
    data = {}
    for var in PAIR_VARIABLES:
        vals = _floats(table, var)
        if var in LOG_VARIABLES:
            vals = np.log10(np.maximum(vals, 1.0))
        data[var] = vals
    k = len(PAIR_VARIABLES)
    fig, axes = plt.subplots(k, k, figsize=(2.0 * k, 2.0 * k))
    for i, vy in enumerate(PAIR_VARIABLES):
        for j, vx in enumerate(PAIR_VARIABLES):
            ax = axes[i][j]
            if i == j:
                vals = data[vx][np.isfinite(data[vx])]
                if len(vals):
                    lo, hi = vals.min(), vals.max()
                    pad = (hi - lo) * 0.1 + 1e-9
                    grid = np.linspace(lo - pad, hi + pad, 120)
                    ax.plot(grid, _kde(vals, grid), lw=1.0, color="tab:blue")
            elif i > j:
                keep = np.isfinite(data[vx]) & np.isfinite(data[vy])
                ax.scatter(data[vx][keep], data[vy][keep], s=4, linewidths=0,
                           color="tab:blue", alpha=0.6)
            else:
                ax.axis("off")
            label_x = f"log10 {vx}" if vx in LOG_VARIABLES else vx
            label_y = f"log10 {vy}" if vy in LOG_VARIABLES else vy
            if i == k - 1 and j <= i:
                ax.set_xlabel(label_x, fontsize=7)
            if j == 0 and i > 0:
                ax.set_ylabel(label_y, fontsize=7)
            ax.tick_params(labelsize=6)
    fig.suptitle("structural parameters, pairwise", fontsize=10)
    return fig


DENSITY_VARIABLES = ("heterogeneity", "degree_locality", "distance_locality",
                     "locality")


def _density_panel(spec: FigureSpec):
    table = _read_csv(spec.inputs[0], DENSITY_VARIABLES)
    fig, axes = plt.subplots(1, 4, figsize=(12.0, 2.8))
    for ax, var in zip(axes, DENSITY_VARIABLES):
        vals = _floats(table, var)
        vals = vals[np.isfinite(vals)]
        if len(vals):
            lo, hi = vals.min(), vals.max()
            pad = (hi - lo) * 0.1 + 1e-9
            grid = np.linspace(lo - pad, hi + pad, 200)
            ax.plot(grid, _kde(vals, grid), lw=1.2, color="tab:blue")
            ax.fill_between(grid, _kde(vals, grid), alpha=0.2, color="tab:blue")
        ax.set_xlabel(var)
        ax.set_ylabel("density")
    return fig


_BUILDERS = {
    "heat_scatter": _heat_scatter,
    "binned_scatter": _binned_scatter,
    "error_boxes": _error_boxes,
    "error_vs_time": _error_vs_time,
    "pair_panel": _pair_panel,
    "density_panel": _density_panel,
}


def build_figure(spec: FigureSpec):
    """The matplotlib figure for a spec (exposed for introspection in tests)."""
    return _BUILDERS[spec.kind](spec)


def render(spec: FigureSpec, out_dir: str | Path) -> list[Path]:
    """Write <output>.svg (vector, primary) and <output>.png (raster preview)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fig = build_figure(spec)
    svg = out_dir / f"{spec.output}.svg"
    png = out_dir / f"{spec.output}.png"
    fig.savefig(svg, format="svg", metadata={"Date": None})
    fig.savefig(png, format="png", dpi=110, metadata={"Software": None})
    plt.close(fig)
    return [svg, png]
