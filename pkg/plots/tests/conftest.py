"""Handcrafted fixture CSVs matching the netlab output schemas."""

from __future__ import annotations

import pytest

COST_HEADER = ("network,algorithm,param_json,seed,cost,base,exponent,"
               "wall_time_s,timed_out,locality,heterogeneity,n,m")


def cost_csv_text(rows):
    lines = ["# netlab-schema=1", COST_HEADER]
    for i, (loc, het, exp) in enumerate(rows):
        lines.append(f"net{i},bidir_bfs,{{}},0,100.0,m,{exp},0.1,False,{loc},{het},100,400")
    return "\n".join(lines) + "\n"


@pytest.fixture
def cost_csv(tmp_path):
    f = tmp_path / "costs.csv"
    f.write_text(cost_csv_text([(0.1, -0.5, 0.95), (0.4, 0.2, 0.55),
                                (0.8, -1.2, 0.30), (0.6, 0.8, 0.70)]))
    return f


@pytest.fixture
def single_row_cost_csv(tmp_path):
    f = tmp_path / "single.csv"
    f.write_text(cost_csv_text([(0.5, 0.0, 0.8)]))
    return f


@pytest.fixture
def binned_csv(tmp_path):
    f = tmp_path / "binned.csv"
    f.write_text(
        "# netlab-schema=1\n"
        "algorithm,locality_bin_center,heterogeneity_bin_center,count,mean_exponent\n"
        "bidir_bfs,0.125,-0.375,1,0.9\n"
        "bidir_bfs,0.375,0.125,10,0.5\n"
        "bidir_bfs,0.625,0.375,100,0.3\n")
    return f


@pytest.fixture
def estimator_csv(tmp_path):
    f = tmp_path / "estimator_runs.csv"
    lines = ["# netlab-schema=1",
             "mode,k,run,relative_error,wall_time_s,realized_sample_size"]
    for mode, scale in (("weighted", 0.001), ("weighted_unconditioned", 0.02),
                        ("uniform_pairs", 0.01)):
        for k in (100, 200, 400):
            for run in range(6):
                err = scale * (1 + 0.3 * run) * (100 / k) ** 0.5
                t = 0.01 * k / 100 * (1 + 0.1 * run)
                lines.append(f"{mode},{k},{run},{err},{t},{k}")
    f.write_text("\n".join(lines) + "\n")
    return f


@pytest.fixture
def stats_csv(tmp_path):
    f = tmp_path / "stats.csv"
    lines = ["# netlab-schema=1",
             "network,n,m,degeneracy,closure,weak_closure,maximal_clique_count,"
             "clique_number,count_relative_to_m,cliques_timed_out,heterogeneity,"
             "locality,degree_locality,distance_locality,clustering_coefficient"]
    rows = [("a", 100, 400, 6, 9, 4, 300, 5, 0.75, False, -0.3, 0.7, 0.6, 0.8, 0.5),
            ("b", 120, 500, 9, 14, 6, 480, 6, 0.96, False, 0.2, 0.3, 0.2, 0.4, 0.2),
            ("c", 90, 300, 4, 5, 3, 290, 4, 0.97, False, -1.1, 0.5, 0.4, 0.6, 0.4),
            ("d", 150, 700, 12, 30, 8, 650, 8, 0.93, False, 0.6, 0.2, 0.1, 0.3, 0.1)]
    for r in rows:
        lines.append(",".join(str(x) for x in r))
    f.write_text("\n".join(lines) + "\n")
    return f
