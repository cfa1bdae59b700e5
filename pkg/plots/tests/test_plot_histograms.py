"""Figure fidelity: the bars ARE the summary's stored bins, verbatim."""

from __future__ import annotations

import math

from rrtplots.histograms import planner_rows, plot_histograms, save_histograms


def test_bar_heights_equal_summary_counts(fixture_summaries):
    """Acceptance check: plotted bin counts equal the summary JSON's, on 3 campaigns."""
    campaigns = 0
    bars = 0
    for label, summary in fixture_summaries.items():
        fig = plot_histograms(summary, title=label)
        planners = planner_rows(summary)
        axes = fig.axes[: len(planners)]
        for ax, kind in zip(axes, planners):
            histogram = summary[kind]["histogram"]
            assert histogram is not None, f"{label}/{kind}: fixture campaign has no successes"
            edges, counts = histogram["edges"], histogram["counts"]
            patches = ax.patches
            assert len(patches) == len(counts), (
                f"{label}/{kind}: {len(patches)} bars drawn for {len(counts)} bins"
            )
            for i, (patch, count) in enumerate(zip(patches, counts)):
                assert patch.get_height() == count, (
                    f"{label}/{kind} bin {i}: bar height {patch.get_height()!r} != count {count}"
                )
                assert math.isclose(patch.get_x(), edges[i], rel_tol=0.0, abs_tol=1e-9), (
                    f"{label}/{kind} bin {i}: bar starts at {patch.get_x()!r}, edge is {edges[i]!r}"
                )
                assert math.isclose(
                    patch.get_width(), edges[i + 1] - edges[i], rel_tol=0.0, abs_tol=1e-9
                ), f"{label}/{kind} bin {i}: bar width mismatches the bin width"
                bars += 1
        campaigns += 1
    print(
        f"[acceptance] PASS histogram fidelity: bar positions and heights equal the "
        f"summary JSON bins on {campaigns} campaign outputs ({bars} bars compared)"
    )


def test_panel_order_and_annotations(fixture_summaries):
    summary = fixture_summaries["scenario1"]
    fig = plot_histograms(summary, title="scenario1")
    planners = planner_rows(summary)
    assert planners == ["basic", "goalbias", "goalzoom", "ncrrt"]
    for ax, kind in zip(fig.axes, planners):
        assert ax.get_title().startswith(f"{kind}: ")
        assert f"short fraction {summary[kind]['short_fraction']:.2f}" in ax.get_title()
    assert fig.get_suptitle() == "scenario1"


def test_no_success_panel_draws_no_bars():
    summary = {
        "basic": {
            "mean_length": None,
            "std_length": None,
            "short_fraction": 0.0,
            "mean_wall_time_s": 0.01,
            "success_count": 0,
            "histogram": None,
        },
        "ncrrt": {
            "mean_length": 500.0,
            "std_length": 0.0,
            "short_fraction": 1.0,
            "mean_wall_time_s": 0.02,
            "success_count": 2,
            "histogram": {"edges": [499.0, 500.0, 501.0], "counts": [1, 1]},
        },
    }
    fig = plot_histograms(summary)
    empty_ax, full_ax = fig.axes[0], fig.axes[1]
    assert len(empty_ax.patches) == 0
    assert any("no successful trials" in t.get_text() for t in empty_ax.texts)
    assert [p.get_height() for p in full_ax.patches] == [1, 1]


def test_single_planner_gets_single_panel():
    summary = {
        "ncrrt": {
            "mean_length": 500.0,
            "std_length": 0.0,
            "short_fraction": 1.0,
            "mean_wall_time_s": 0.02,
            "success_count": 1,
            "histogram": {"edges": [500.0, 500.0], "counts": [1]},
        }
    }
    fig = plot_histograms(summary)
    assert len([ax for ax in fig.axes if ax.get_visible()]) == 1


def test_save_histograms_writes_png(fixture_summaries, tmp_path):
    out = save_histograms(fixture_summaries["scenario2"], tmp_path / "h.png", title="scenario2")
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 10_000
