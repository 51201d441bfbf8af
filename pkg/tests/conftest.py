"""Shared fixtures: an on-disk cache of generated networks.

Generated networks are cached as .npz (edge array of the largest component)
keyed by their parameters.  The cache lives in a session temp dir unless
NETLAB_TEST_CACHE points somewhere persistent, which makes repeated local
runs of the heavy acceptance tests cheap.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from acc_workers import ensure_network, load_graph, pool_map, test_workers
from netlab.generators import GeneratorParams

CACHE_ENV = "NETLAB_TEST_CACHE"


def params_key(p: GeneratorParams) -> str:
    return (f"{p.model}_n{p.n}_d{p.target_avg_degree:g}_b{p.beta:g}"
            f"_t{p.temperature:g}_{p.ground_space}_s{p.seed}")


class NetworkCache:
    def __init__(self, base: Path, workers: int):
        self.base = base
        self.workers = workers

    def path_for(self, params: GeneratorParams) -> Path:
        return self.base / (params_key(params) + ".npz")

    def ensure(self, params_list) -> list[Path]:
        """Generate any missing networks, in parallel; return their paths."""
        tasks = [(p, str(self.path_for(p))) for p in params_list]
        missing = [t for t in tasks if not Path(t[1]).exists()]
        pool_map(ensure_network, missing, self.workers)
        return [Path(t[1]) for t in tasks]

    def load(self, params: GeneratorParams):
        path = self.ensure([params])[0]
        return load_graph(path)


@pytest.fixture(scope="session")
def netcache(tmp_path_factory) -> NetworkCache:
    root = os.environ.get(CACHE_ENV)
    base = Path(root) if root else tmp_path_factory.mktemp("netcache")
    base.mkdir(parents=True, exist_ok=True)
    return NetworkCache(base, test_workers())
