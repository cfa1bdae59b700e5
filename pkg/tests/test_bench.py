"""Campaign harness, histograms, summaries, and CSV round-trips."""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rrtkit import (
    PlannerParams,
    TrialRecord,
    classify_short,
    derive_seed,
    make_histogram,
    run_campaign,
    summarize,
    summary_document,
)
from rrtkit.bench import (
    CSV_HEADER,
    ResultsFormatError,
    format_records_csv,
    parse_records_csv,
    read_results_csv,
    write_results_csv,
)

FAST = PlannerParams(max_iterations=100)


def record(
    planner: str = "basic",
    success: bool = True,
    length: float | None = 500.0,
    wall: float = 0.01,
    seed: int = 1,
    iterations: int = 40,
    scenario: str = "demo",
) -> TrialRecord:
    return TrialRecord(
        scenario_name=scenario,
        planner=planner,
        seed=seed,
        success=success,
        iterations=iterations,
        path_length=length if success else None,
        wall_time=wall,
    )


def strip_wall_time(r: TrialRecord) -> TrialRecord:
    return dataclasses.replace(r, wall_time=0.0)


# ---------------------------------------------------------------- histograms


def test_histogram_constant_data_widens_range():
    h = make_histogram([500.0] * 30, bins=30)
    assert h.bin_edges[0] == pytest.approx(499.5)
    assert h.bin_edges[-1] == pytest.approx(500.5)
    assert sum(h.counts) == 30
    assert max(h.counts) == 30  # all mass in a single bin


def test_histogram_one_count_per_bin():
    h = make_histogram([float(v) for v in range(30)], bins=30)
    assert h.counts == (1,) * 30
    assert len(h.bin_edges) == 31


def test_histogram_edges_ascending_and_equal_width():
    h = make_histogram([3.0, 9.0, 27.0, 14.0], bins=8)
    widths = np.diff(h.bin_edges)
    assert (widths > 0).all()
    assert widths == pytest.approx(np.full(8, widths[0]))


def test_histogram_max_lands_in_last_closed_bin():
    h = make_histogram([0.0, 10.0], bins=10)
    assert h.counts[-1] == 1
    assert h.counts[0] == 1


def test_histogram_conservation_randomized():
    rng = np.random.default_rng(123)
    for _ in range(1000):
        n = int(rng.integers(1, 60))
        data = rng.uniform(0, 2000, n).tolist()
        bins = int(rng.integers(1, 45))
        h = make_histogram(data, bins)
        assert sum(h.counts) == n
        assert len(h.bin_edges) == bins + 1


def test_histogram_rejects_empty_and_bad_bins():
    with pytest.raises(ValueError):
        make_histogram([], bins=30)
    with pytest.raises(ValueError):
        make_histogram([1.0], bins=0)


# ---------------------------------------------------------- classify / stats


def test_classify_all_failures_zero():
    records = [record(success=False) for _ in range(10)]
    assert classify_short(records, 800.0) == {"basic": 0.0}


def test_classify_example_fraction():
    records = [record(length=500.0) for _ in range(82)] + [record(length=1100.0) for _ in range(18)]
    assert classify_short(records, 800.0) == {"basic": 0.82}


def test_classify_threshold_below_minimum():
    records = [record(length=500.0, planner=k) for k in ("basic", "ncrrt") for _ in range(5)]
    fractions = classify_short(records, 100.0)
    assert fractions == {"basic": 0.0, "ncrrt": 0.0}


def test_classify_counts_failures_in_denominator():
    records = [record(length=500.0), record(success=False)]
    assert classify_short(records, 800.0) == {"basic": 0.5}


def test_classify_rejects_bad_threshold():
    with pytest.raises(ValueError):
        classify_short([record()], 0.0)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.booleans(), st.floats(min_value=1, max_value=2000, allow_nan=False)),
        min_size=1,
        max_size=50,
    ),
    st.floats(min_value=1, max_value=2500, allow_nan=False),
    st.floats(min_value=0, max_value=500, allow_nan=False),
)
def test_classify_monotone_in_threshold(outcomes, threshold, bump):
    records = [record(success=ok, length=length) for ok, length in outcomes]
    low = classify_short(records, threshold)
    high = classify_short(records, threshold + bump)
    assert low["basic"] <= high["basic"]


def test_summarize_population_std():
    records = [record(length=v) for v in (3.0, 4.0, 5.0)]
    stats = summarize(records, 100.0)["basic"]
    assert stats.mean_length == pytest.approx(4.0)
    assert stats.std_length == pytest.approx(math.sqrt(2.0 / 3.0))
    assert stats.success_count == 3


def test_summarize_single_success():
    stats = summarize([record(length=123.0)], 100.0)["basic"]
    assert stats.mean_length == 123.0
    assert stats.std_length == 0.0


def test_summarize_no_successes_absent_stats():
    stats = summarize([record(success=False)], 100.0)["basic"]
    assert stats.mean_length is None
    assert stats.std_length is None
    assert stats.short_fraction == 0.0
    assert stats.success_count == 0


def test_summarize_wall_time_covers_failures():
    records = [record(wall=0.2), record(success=False, wall=0.4)]
    stats = summarize(records, 800.0)["basic"]
    assert stats.mean_wall_time == pytest.approx(0.3)


def test_summarize_agrees_with_two_pass_computation():
    rng = np.random.default_rng(77)
    lengths = rng.uniform(100, 1500, 400)
    records = [record(length=float(v)) for v in lengths]
    stats = summarize(records, 800.0)["basic"]
    mean = sum(lengths) / len(lengths)
    var = sum((v - mean) ** 2 for v in lengths) / len(lengths)
    assert stats.mean_length == pytest.approx(mean, rel=1e-9)
    assert stats.std_length == pytest.approx(math.sqrt(var), rel=1e-9)


def test_summary_document_shape_and_null_histogram():
    records = [record(length=500.0), record(planner="ncrrt", success=False)]
    doc = summary_document(records, 800.0)
    assert set(doc) == {"basic", "ncrrt"}
    basic = doc["basic"]
    assert set(basic) == {
        "mean_length",
        "std_length",
        "short_fraction",
        "mean_wall_time_s",
        "success_count",
        "histogram",
    }
    assert sum(basic["histogram"]["counts"]) == 1
    assert len(basic["histogram"]["edges"]) == 31
    assert doc["ncrrt"]["histogram"] is None
    assert doc["ncrrt"]["mean_length"] is None


# ------------------------------------------------------------------ campaign


def test_campaign_zero_trials_empty(empty_scenario):
    assert run_campaign(empty_scenario, ["basic"], FAST, 0, 1) == []


def test_campaign_rejects_negative_trials(empty_scenario):
    with pytest.raises(ValueError):
        run_campaign(empty_scenario, ["basic"], FAST, -1, 1)


def test_campaign_rejects_unknown_kind_before_running(empty_scenario):
    with pytest.raises(ValueError):
        run_campaign(empty_scenario, ["basic", "bogus"], FAST, 2, 1)


def test_campaign_cardinality_and_order(wall_scenario):
    records = run_campaign(wall_scenario, ["basic", "ncrrt"], FAST, 7, 42)
    assert len(records) == 14
    assert [r.planner for r in records] == ["basic"] * 7 + ["ncrrt"] * 7
    assert [r.seed for r in records] == [
        derive_seed(42, kind, i) for kind in ("basic", "ncrrt") for i in range(7)
    ]
    assert all(r.scenario_name == wall_scenario.name for r in records)
    assert all(r.success == (r.path_length is not None) for r in records)


def test_campaign_deterministic_modulo_wall_time(wall_scenario):
    a = run_campaign(wall_scenario, ["basic", "goalbias"], FAST, 5, 9)
    b = run_campaign(wall_scenario, ["basic", "goalbias"], FAST, 5, 9)
    assert [strip_wall_time(r) for r in a] == [strip_wall_time(r) for r in b]


def test_campaign_planner_isolation(wall_scenario):
    # A planner's records must not depend on which other planners ran.
    alone = run_campaign(wall_scenario, ["goalbias"], FAST, 5, 9)
    paired = run_campaign(wall_scenario, ["basic", "goalbias"], FAST, 5, 9)
    assert [strip_wall_time(r) for r in alone] == [strip_wall_time(r) for r in paired[5:]]


# ----------------------------------------------------------------------- CSV


def test_csv_header_and_failure_row():
    text = format_records_csv([record(length=311.69074663088435), record(success=False, wall=0.25)])
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1] == "demo,basic,1,true,40,311.691,0.01"
    assert lines[2] == "demo,basic,1,false,40,,0.25"


def test_csv_six_significant_digits():
    text = format_records_csv([record(length=123456.789, wall=0.000123456789)])
    assert "123457," in text
    assert ",0.000123457" in text


def test_csv_round_trip_identity():
    records = [
        record(length=500.25, seed=derive_seed(1, "basic", 0)),
        record(planner="ncrrt", success=False, seed=derive_seed(1, "ncrrt", 0), wall=1.5),
    ]
    text = format_records_csv(records)
    assert format_records_csv(parse_records_csv(text)) == text


def test_csv_file_round_trip(tmp_path, wall_scenario):
    records = run_campaign(wall_scenario, ["basic"], FAST, 3, 7)
    path = tmp_path / "results.csv"
    write_results_csv(records, path)
    parsed = read_results_csv(path)
    assert [r.planner for r in parsed] == ["basic"] * 3
    assert [r.seed for r in parsed] == [r.seed for r in records]
    assert [r.success for r in parsed] == [r.success for r in records]


def test_csv_rejects_unknown_header():
    with pytest.raises(ResultsFormatError):
        parse_records_csv("foo,bar\n1,2\n")
    with pytest.raises(ResultsFormatError):
        parse_records_csv("")


def test_csv_rejects_malformed_rows():
    with pytest.raises(ResultsFormatError):
        parse_records_csv(CSV_HEADER + "\nonly,three,fields\n")
    with pytest.raises(ResultsFormatError):
        parse_records_csv(CSV_HEADER + "\ndemo,basic,1,YES,40,500,0.1\n")
    with pytest.raises(ResultsFormatError):
        parse_records_csv(CSV_HEADER + "\ndemo,basic,notanint,true,40,500,0.1\n")


def test_read_results_csv_missing_file(tmp_path):
    with pytest.raises(ResultsFormatError):
        read_results_csv(tmp_path / "absent.csv")
