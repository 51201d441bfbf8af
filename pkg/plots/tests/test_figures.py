import hashlib
import json
import math

import pytest

from netlab_plots.figures import (FigureSpec, binned_point_size, build_figure,
                                  load_spec, render)


def sha(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def spec_for(kind, inputs, output="fig", **kw):
    return FigureSpec(kind=kind, inputs=tuple(str(p) for p in inputs),
                      output=output, **kw)


class TestRenderKinds:
    def test_heat_scatter(self, cost_csv, tmp_path):
        paths = render(spec_for("heat_scatter", [cost_csv]), tmp_path / "out")
        assert [p.suffix for p in paths] == [".svg", ".png"]
        assert all(p.exists() and p.stat().st_size > 0 for p in paths)

    def test_single_row_single_point(self, single_row_cost_csv, tmp_path):
        paths = render(spec_for("heat_scatter", [single_row_cost_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)

    def test_binned_scatter(self, binned_csv, tmp_path):
        paths = render(spec_for("binned_scatter", [binned_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)

    def test_error_boxes(self, estimator_csv, tmp_path):
        paths = render(spec_for("error_boxes", [estimator_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)

    def test_error_vs_time(self, estimator_csv, tmp_path):
        paths = render(spec_for("error_vs_time", [estimator_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)

    def test_pair_panel(self, stats_csv, tmp_path):
        paths = render(spec_for("pair_panel", [stats_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)

    def test_density_panel(self, stats_csv, tmp_path):
        paths = render(spec_for("density_panel", [stats_csv]), tmp_path)
        assert all(p.stat().st_size > 0 for p in paths)


class TestDeterminism:
    @pytest.mark.parametrize("kind,fixture", [
        ("heat_scatter", "cost_csv"),
        ("binned_scatter", "binned_csv"),
        ("error_boxes", "estimator_csv"),
        ("error_vs_time", "estimator_csv"),
        ("pair_panel", "stats_csv"),
        ("density_panel", "stats_csv"),
    ])
    def test_stable_hashes_across_two_runs(self, kind, fixture, tmp_path, request):
        src = request.getfixturevalue(fixture)
        before = sha(src)
        a = render(spec_for(kind, [src]), tmp_path / "a")
        b = render(spec_for(kind, [src]), tmp_path / "b")
        assert [sha(p) for p in a] == [sha(p) for p in b]
        assert sha(src) == before  # inputs are never mutated


class TestBinnedRadii:
    def test_log_rule(self):
        # radii proportional to 1 + log10(count): counts 1 and 10 give ratio 2
        r1 = math.sqrt(binned_point_size(1))
        r10 = math.sqrt(binned_point_size(10))
        r100 = math.sqrt(binned_point_size(100))
        assert r10 / r1 == pytest.approx(2.0)
        assert r100 / r1 == pytest.approx(3.0)

    def test_figure_uses_the_rule(self, binned_csv, tmp_path):
        fig = build_figure(spec_for("binned_scatter", [binned_csv]))
        sizes = fig.axes[0].collections[0].get_sizes()
        assert sizes[1] / sizes[0] == pytest.approx(4.0)  # area ratio = radius^2


class TestSharedColorScale:
    def test_panels_share_norm(self, cost_csv, single_row_cost_csv):
        fig = build_figure(spec_for("heat_scatter",
                                    [cost_csv, single_row_cost_csv],
                                    color_min=0.0, color_max=1.0))
        norms = [ax.collections[0].norm for ax in fig.axes[:2]]
        assert norms[0].vmin == norms[1].vmin == 0.0
        assert norms[0].vmax == norms[1].vmax == 1.0


class TestSpecHandling:
    def test_missing_column_named(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("foo,bar\n1,2\n")
        with pytest.raises(ValueError, match="exponent"):
            build_figure(spec_for("heat_scatter", [bad]))

    def test_unknown_kind_rejected(self, cost_csv):
        with pytest.raises(ValueError, match="kind"):
            FigureSpec(kind="sparkline", inputs=(str(cost_csv),), output="x")

    def test_load_spec_roundtrip(self, cost_csv, tmp_path):
        doc = {"kind": "heat_scatter", "inputs": [str(cost_csv)],
               "output": "models", "color_min": 0.2, "color_max": 0.9,
               "titles": ["generated"]}
        f = tmp_path / "spec.json"
        f.write_text(json.dumps(doc))
        spec = load_spec(f)
        assert spec.kind == "heat_scatter"
        assert spec.color_max == 0.9
        assert spec.titles == ("generated",)
