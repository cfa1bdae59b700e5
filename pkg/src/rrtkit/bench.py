"""Benchmark harness: seeded multi-trial campaigns and their statistics.

A campaign runs each requested planner for a fixed number of trials on one
scenario. Per-trial seeds are pure functions of (base_seed, planner token,
trial index), so the record stream is reproducible bit-for-bit; only the
wall_time field varies between runs.

External formats:

* results CSV: header ``scenario,planner,seed,success,iterations,path_length,
  wall_time_s``; one row per trial ordered by (planner, trial index); floats
  printed with 6 significant digits; path_length empty on failure; success is
  ``true``/``false``.
* summary JSON: object mapping planner token to {mean_length, std_length,
  short_fraction, mean_wall_time_s, success_count, histogram{edges, counts}};
  mean/std/histogram are null when the planner had no successes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .planners import PLANNER_KINDS, PlannerParams, plan
from .rng import RngStream, derive_seed
from .space import Scenario

__all__ = [
    "TrialRecord",
    "Histogram",
    "SummaryStats",
    "ResultsFormatError",
    "run_trial",
    "run_campaign",
    "make_histogram",
    "classify_short",
    "summarize",
    "summary_document",
    "CSV_HEADER",
    "format_records_csv",
    "write_results_csv",
    "parse_records_csv",
    "read_results_csv",
    "write_summary_json",
]

CSV_HEADER = "scenario,planner,seed,success,iterations,path_length,wall_time_s"


class ResultsFormatError(ValueError):
    """A results CSV does not conform to the documented schema."""


@dataclass(frozen=True)
class TrialRecord:
    """One planner run inside a campaign; path_length is present iff success."""

    scenario_name: str
    planner: str
    seed: int
    success: bool
    iterations: int
    path_length: float | None
    wall_time: float


@dataclass(frozen=True)
class Histogram:
    """Equal-width histogram; the last bin is closed so the maximum is counted."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]


@dataclass(frozen=True)
class SummaryStats:
    """Per-planner campaign summary.

    mean_length and std_length cover successful trials only and are absent
    (None) when there were no successes; std is the population deviation.
    mean_wall_time averages over all trials, failures included.
    """

    mean_length: float | None
    std_length: float | None
    short_fraction: float
    mean_wall_time: float
    success_count: int


def run_trial(s: Scenario, kind: str, params: PlannerParams, seed: int) -> TrialRecord:
    """Run one seeded plan and flatten the outcome into a record."""
    outcome = plan(kind, s, params, RngStream(seed))
    return TrialRecord(
        scenario_name=s.name,
        planner=kind,
        seed=seed,
        success=outcome.success,
        iterations=outcome.iterations_used,
        path_length=outcome.path_length,
        wall_time=outcome.wall_time,
    )


def run_campaign(
    s: Scenario,
    kinds: list[str] | tuple[str, ...],
    params: PlannerParams,
    trials: int,
    base_seed: int,
) -> list[TrialRecord]:
    """Run ``trials`` seeded plans per planner kind; records ordered by (kind, trial).

    Trial seeds depend only on (base_seed, kind, trial index), never on the
    kinds list as a whole, so adding a planner to a campaign leaves every other
    planner's trials untouched. Execution interleaves the planners round-robin
    over the trial index — cross-planner wall-time comparisons then sample any
    slow drift in machine load evenly — and the returned records are sorted
    back to (kind, trial) order, which seed derivation makes independent of
    execution order.
    """
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials!r}")
    for kind in kinds:
        if kind not in PLANNER_KINDS:
            raise ValueError(f"unknown planner kind {kind!r}; expected one of {', '.join(PLANNER_KINDS)}")
    per_slot: list[list[TrialRecord]] = [[] for _ in kinds]
    for i in range(trials):
        for slot, kind in enumerate(kinds):
            per_slot[slot].append(run_trial(s, kind, params, derive_seed(base_seed, kind, i)))
    records: list[TrialRecord] = []
    for slot_records in per_slot:
        records.extend(slot_records)
    return records


def make_histogram(lengths: list[float], bins: int = 30) -> Histogram:
    """Equal-width histogram over [min, max]; degenerate ranges widen by 0.5.

    Bins are half-open [lo, hi) except the last, which is closed so the
    maximum value is counted; counts always sum to len(lengths).
    """
    if bins < 1:
        raise ValueError(f"bins must be at least 1, got {bins!r}")
    if not lengths:
        raise ValueError("cannot histogram an empty list of lengths")
    lo = min(lengths)
    hi = max(lengths)
    if lo == hi:
        lo -= 0.5
        hi += 0.5
    counts, edges = np.histogram(np.asarray(lengths, dtype=np.float64), bins=bins, range=(lo, hi))
    return Histogram(tuple(float(e) for e in edges), tuple(int(c) for c in counts))


def _planners_in_order(records: list[TrialRecord]) -> list[str]:
    seen: dict[str, None] = {}
    for r in records:
        if r.planner not in seen:
            seen[r.planner] = None
    return list(seen)


def classify_short(records: list[TrialRecord], threshold: float) -> dict[str, float]:
    """Per-planner fraction of trials that succeeded with length <= threshold.

    Failed trials count in the denominator and never in the numerator, so the
    fraction reflects the chance of actually obtaining a short path.
    """
    if not (math.isfinite(threshold) and threshold > 0):
        raise ValueError(f"threshold must be positive, got {threshold!r}")
    fractions: dict[str, float] = {}
    for kind in _planners_in_order(records):
        mine = [r for r in records if r.planner == kind]
        short = sum(1 for r in mine if r.success and r.path_length is not None and r.path_length <= threshold)
        fractions[kind] = short / len(mine)
    return fractions


def summarize(records: list[TrialRecord], threshold: float) -> dict[str, SummaryStats]:
    """Per-planner summary statistics of a campaign's records."""
    fractions = classify_short(records, threshold)
    out: dict[str, SummaryStats] = {}
    for kind in _planners_in_order(records):
        mine = [r for r in records if r.planner == kind]
        lengths = [r.path_length for r in mine if r.success and r.path_length is not None]
        if lengths:
            arr = np.asarray(lengths, dtype=np.float64)
            mean = float(arr.mean())
            std = float(arr.std(ddof=0))
        else:
            mean = None
            std = None
        out[kind] = SummaryStats(
            mean_length=mean,
            std_length=std,
            short_fraction=fractions[kind],
            mean_wall_time=float(np.mean([r.wall_time for r in mine])),
            success_count=len(lengths),
        )
    return out


def summary_document(records: list[TrialRecord], threshold: float, bins: int = 30) -> dict:
    """JSON-ready summary: planner token -> stats plus a path-length histogram."""
    stats = summarize(records, threshold)
    doc: dict = {}
    for kind, st in stats.items():
        lengths = [
            r.path_length for r in records if r.planner == kind and r.success and r.path_length is not None
        ]
        if lengths:
            h = make_histogram(lengths, bins)
            histogram = {"edges": list(h.bin_edges), "counts": list(h.counts)}
        else:
            histogram = None
        doc[kind] = {
            "mean_length": st.mean_length,
            "std_length": st.std_length,
            "short_fraction": st.short_fraction,
            "mean_wall_time_s": st.mean_wall_time,
            "success_count": st.success_count,
            "histogram": histogram,
        }
    return doc


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def format_records_csv(records: list[TrialRecord]) -> str:
    """Render records as the documented CSV text, trailing newline included."""
    lines = [CSV_HEADER]
    for r in records:
        length = "" if r.path_length is None else _fmt(r.path_length)
        lines.append(
            f"{r.scenario_name},{r.planner},{r.seed},"
            f"{'true' if r.success else 'false'},{r.iterations},{length},{_fmt(r.wall_time)}"
        )
    return "\n".join(lines) + "\n"


def write_results_csv(records: list[TrialRecord], path: str | Path) -> None:
    Path(path).write_text(format_records_csv(records))


def parse_records_csv(text: str) -> list[TrialRecord]:
    """Parse the documented CSV format back into records.

    Raises ResultsFormatError on a wrong header or malformed rows; scenario
    names containing commas are unsupported by the format and rejected at row
    level via the field count.
    """
    lines = [ln for ln in text.splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ResultsFormatError(
            f"unexpected results CSV header {lines[0]!r}" if lines else "results CSV is empty"
        )
    records: list[TrialRecord] = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 7:
            raise ResultsFormatError(f"line {i}: expected 7 fields, got {len(parts)}")
        scenario, planner, seed, success, iterations, length, wall = parts
        if success not in ("true", "false"):
            raise ResultsFormatError(f"line {i}: success must be true or false, got {success!r}")
        try:
            records.append(
                TrialRecord(
                    scenario_name=scenario,
                    planner=planner,
                    seed=int(seed),
                    success=success == "true",
                    iterations=int(iterations),
                    path_length=None if length == "" else float(length),
                    wall_time=float(wall),
                )
            )
        except ValueError as exc:
            raise ResultsFormatError(f"line {i}: {exc}") from exc
    return records


def read_results_csv(path: str | Path) -> list[TrialRecord]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ResultsFormatError(f"cannot read results CSV {path}: {exc}") from exc
    return parse_records_csv(text)


def write_summary_json(records: list[TrialRecord], threshold: float, path: str | Path, bins: int = 30) -> None:
    Path(path).write_text(json.dumps(summary_document(records, threshold, bins), indent=2) + "\n")
