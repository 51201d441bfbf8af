"""Random network generators: Erdos-Renyi, Chung-Lu, and geometric (torus/square).

All generators are deterministic per seed.  The random stream layout is fixed
and part of the contract:

* Erdos-Renyi consumes (u, v) index pairs in fixed-size rejection batches
  until m distinct edges are collected.
* Chung-Lu consumes one uniform per vertex pair in u-major order, i.e. for
  u = 0..n-2 the uniforms for pairs (u, u+1), ..., (u, n-1).
* The geometric model first consumes the n*d position coordinates
  (vertex-major, dimension-minor), then, for temperature > 0, per-pair
  uniforms in the same u-major order.  The threshold variant (T = 0) draws
  no pair uniforms.

Weights follow w_v = c * v^(-1/(beta-1)) for v = 1..n; beta = math.inf marks
uniform weights.  The constant c is calibrated so the model's expected
average degree hits the target, by bisection against an exact evaluation of
the pairwise connection probabilities (closed-form position integral for the
geometric model).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .graph import Graph, from_edges

__all__ = [
    "ER",
    "CHUNG_LU",
    "GIRG",
    "TORUS",
    "SQUARE",
    "GeneratorParams",
    "WeightVector",
    "torus_distance",
    "power_law_weights",
    "calibrate_weight_constant",
    "expected_avg_degree",
    "generate_er",
    "generate_chung_lu",
    "generate_girg",
    "generate_girg_square",
    "generate",
]

ER = "er"
CHUNG_LU = "chung_lu"
GIRG = "girg"
TORUS = "torus"
SQUARE = "square"

_MODELS = (ER, CHUNG_LU, GIRG)


@dataclass(frozen=True)
class GeneratorParams:
    model: str
    n: int
    target_avg_degree: float
    beta: float = math.inf  # power-law exponent; inf = uniform weights
    temperature: float = 0.0
    dimension: int = 2
    ground_space: str = TORUS
    seed: int = 0

    def __post_init__(self):
        if self.model not in _MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not 0 < self.target_avg_degree < self.n - 1:
            raise ValueError("target average degree must be in (0, n-1)")
        if not (self.beta > 2 or math.isinf(self.beta)):
            raise ValueError("beta must exceed 2 (or be infinite)")
        if not 0 <= self.temperature < 1:
            raise ValueError("temperature must be in [0, 1)")
        if self.ground_space not in (TORUS, SQUARE):
            raise ValueError(f"unknown ground space {self.ground_space!r}")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")


@dataclass(frozen=True)
class WeightVector:
    """Power-law vertex weights w_v = c * v^(-1/(beta-1)) and their sum."""

    w: np.ndarray
    total: float


def torus_distance(p, q) -> float:
    """Max-norm distance with per-dimension wrap-around on [0,1]^d."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError("dimension mismatch")
    delta = np.abs(p - q)
    return float(np.max(np.minimum(delta, 1.0 - delta)))


def _base_weights(n: int, beta: float) -> np.ndarray:
    """Unit-constant weights v^(-1/(beta-1)), v = 1..n (descending, max 1)."""
    if math.isinf(beta):
        return np.ones(n)
    return np.arange(1, n + 1, dtype=float) ** (-1.0 / (beta - 1.0))


def power_law_weights(n: int, beta: float, c: float) -> WeightVector:
    if c <= 0:
        raise ValueError("c must be positive")
    if not (beta > 2 or math.isinf(beta)):
        raise ValueError("beta must exceed 2 (or be infinite)")
    w = c * _base_weights(n, beta)
    return WeightVector(w, float(w.sum()))


def _pair_sum(n: int, b: np.ndarray, coef: float, temperature: float | None) -> float:
    """Sum over vertex pairs u < v of the connection probability.

    The per-pair score is s = coef * b_u * b_v.  For Chung-Lu and the
    threshold model the probability is min(s, 1).  For temperature T > 0 the
    probability, already integrated over the torus position distribution, is
    (s - T * s^(1/T)) / (1 - T) for s < 1 and 1 otherwise.

    b must be sorted descending with b[0] = 1, which makes both the clamped
    prefix and the tail sums computable from suffix arrays in O(n log n).
    """
    a = coef * b  # a[u] * b[v] is the pair score
    s1 = np.concatenate([np.cumsum(b[::-1])[::-1], [0.0]])
    # count of v with a_u * b_v >= 1, i.e. b_v >= 1/a_u (b descending)
    j = np.searchsorted(-b, -1.0 / a, side="right")
    u = np.arange(n)
    start = np.maximum(u + 1, j)
    clamped = np.clip(j - (u + 1), 0, n - (u + 1)).sum()
    lin = float((a * s1[start]).sum())
    if temperature is None or temperature == 0.0:
        return float(clamped) + lin
    inv_t = 1.0 / temperature
    sp = np.concatenate([np.cumsum((b ** inv_t)[::-1])[::-1], [0.0]])
    # a^(1/T) through logs; every summed term a_u*b_v < 1 so products stay finite
    with np.errstate(over="ignore"):
        a_pow = np.exp(np.log(a) * inv_t)
    power = float(np.where(sp[start] > 0, a_pow * sp[start], 0.0).sum())
    return float(clamped) + (lin - temperature * power) / (1.0 - temperature)


def expected_avg_degree(model: str, n: int, beta: float, c: float,
                        temperature: float = 0.0, dimension: int = 2) -> float:
    """Exact expected average degree of the model at weight constant c."""
    b = _base_weights(n, beta)
    big_b = float(b.sum())
    if model == CHUNG_LU:
        coef = c / big_b
        total = _pair_sum(n, b, coef, None)
    elif model == GIRG:
        coef = (2.0 ** dimension) * c / big_b
        total = _pair_sum(n, b, coef, temperature)
    else:
        raise ValueError(f"no calibration for model {model!r}")
    return 2.0 * total / n


@lru_cache(maxsize=None)
def calibrate_weight_constant(n: int, beta: float, target_avg_degree: float,
                              model: str = CHUNG_LU, temperature: float = 0.0,
                              dimension: int = 2) -> float:
    """Weight constant c whose expected average degree matches the target.

    Monotone bisection; raises if no bracket is found or the final value is
    off by more than 1%.
    """
    if target_avg_degree <= 0:
        raise ValueError("target average degree must be positive")

    def f(c: float) -> float:
        return expected_avg_degree(model, n, beta, c, temperature, dimension)

    lo, hi = 0.0, max(target_avg_degree, 1.0)
    for _ in range(200):
        if f(hi) >= target_avg_degree:
            break
        hi *= 2.0
    else:
        raise RuntimeError("calibration bracket not found")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if f(mid) < target_avg_degree:
            lo = mid
        else:
            hi = mid
    c = 0.5 * (lo + hi)
    if abs(f(c) - target_avg_degree) > 0.01 * target_avg_degree:
        raise RuntimeError("calibration did not converge after 60 bisection steps")
    return c


def generate_er(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly m distinct edges (rejection sampling)."""
    max_m = n * (n - 1) // 2
    if m > max_m:
        raise ValueError(f"m={m} infeasible for n={n}")
    rng = np.random.default_rng(seed)
    seen: set[int] = set()
    edges: list[int] = []
    while len(edges) < m:
        batch = max(4096, int(1.2 * (m - len(edges))))
        pairs = rng.integers(0, n, size=(batch, 2))
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        keep = lo != hi
        for code in (lo[keep] * n + hi[keep]).tolist():
            if code not in seen:
                seen.add(code)
                edges.append(code)
                if len(edges) == m:
                    break
    codes = np.asarray(edges, dtype=np.int64)
    return from_edges(n, np.column_stack([codes // n, codes % n]))


def _collect_rows(n: int, row_edges: list[tuple[int, np.ndarray]]) -> Graph:
    parts = []
    for u, vs in row_edges:
        if vs.size:
            parts.append(np.column_stack([np.full(vs.size, u, dtype=np.int64), vs]))
    if not parts:
        return from_edges(n, np.empty((0, 2), dtype=np.int64))
    return from_edges(n, np.concatenate(parts))


def generate_chung_lu(params: GeneratorParams) -> Graph:
    """Independent edges with probability min(w_u * w_v / W, 1)."""
    n = params.n
    c = calibrate_weight_constant(n, params.beta, params.target_avg_degree, CHUNG_LU)
    b = _base_weights(n, params.beta)
    coef = c / float(b.sum())
    rng = np.random.default_rng(params.seed)
    rows = []
    for u in range(n - 1):
        pr = coef * b[u] * b[u + 1 :]
        hits = np.nonzero(rng.random(n - 1 - u) < pr)[0]
        rows.append((u, hits + u + 1))
    return _collect_rows(n, rows)


def _girg_edges(params: GeneratorParams, weight_scale: float, pos_scale: float) -> Graph:
    n, d, t = params.n, params.dimension, params.temperature
    c = calibrate_weight_constant(n, params.beta, params.target_avg_degree,
                                  GIRG, params.temperature, d)
    b = _base_weights(n, params.beta)
    # scaling all weights by f multiplies w_u*w_v/W by f
    coef = weight_scale * c / float(b.sum())
    rng = np.random.default_rng(params.seed)
    pos = rng.random((n, d)) * pos_scale
    rows = []
    for u in range(n - 1):
        delta = np.abs(pos[u + 1 :] - pos[u])
        dist = np.minimum(delta, 1.0 - delta).max(axis=1)
        score = coef * b[u] * b[u + 1 :]
        if t == 0.0:
            hits = np.nonzero(dist ** d <= score)[0]
        else:
            uni = rng.random(n - 1 - u)
            with np.errstate(divide="ignore"):
                log_p = (np.log(score) - d * np.log(dist)) / t
            hits = np.nonzero(np.log(uni) < log_p)[0]
        rows.append((u, hits + u + 1))
    return _collect_rows(n, rows)


def generate_girg(params: GeneratorParams) -> Graph:
    """Geometric graph on the torus: p = min((w_u w_v / (W dist^d))^(1/T), 1).

    T = 0 is the threshold variant: edge iff dist^d <= w_u * w_v / W.
    """
    return _girg_edges(params, weight_scale=1.0, pos_scale=1.0)


def generate_girg_square(params: GeneratorParams) -> Graph:
    """Geometric graph on the unit cube via the torus machinery.

    Coordinates are scaled by 0.5 into [0, 0.5]^d, where torus wrap never
    triggers and max-norm distances equal cube distances; weights are scaled
    by 0.5^d to compensate.  The weight constant stays torus-calibrated, so
    realized degrees land slightly below the target.
    """
    return _girg_edges(params, weight_scale=0.5 ** params.dimension, pos_scale=0.5)


def generate(params: GeneratorParams) -> Graph:
    """Dispatch on model (and ground space for the geometric model)."""
    if params.model == ER:
        m = round(params.n * params.target_avg_degree / 2)
        return generate_er(params.n, m, params.seed)
    if params.model == CHUNG_LU:
        return generate_chung_lu(params)
    if params.ground_space == SQUARE:
        return generate_girg_square(params)
    return generate_girg(params)


def with_seed(params: GeneratorParams, seed: int) -> GeneratorParams:
    return replace(params, seed=seed)
