"""Readers for the two benchmark artifact formats.

The benchmark writes two kinds of files and this module parses exactly
those:

* the results CSV, one row per trial, header
  ``scenario,planner,seed,success,iterations,path_length,wall_time_s``;
* the summary JSON, mapping each planner token to its campaign statistics
  (``mean_length``, ``std_length``, ``short_fraction``, ``mean_wall_time_s``,
  ``success_count``, and a ``histogram`` of the successful path lengths as
  ``{"edges": [...], "counts": [...]}`` — ``mean_length``, ``std_length``
  and ``histogram`` are null for a planner with no successes).

Both readers validate shape and internal consistency and raise
``ValueError`` with a pointed message on anything malformed, so mispaired
or truncated files fail loudly instead of producing wrong figures.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

EXPECTED_HEADER = ("scenario", "planner", "seed", "success", "iterations", "path_length", "wall_time_s")

_STAT_KEYS = frozenset(
    {"mean_length", "std_length", "short_fraction", "mean_wall_time_s", "success_count", "histogram"}
)


@dataclass(frozen=True)
class TrialRow:
    """One benchmark trial as recorded in the results CSV."""

    scenario: str
    planner: str
    seed: int
    success: bool
    iterations: int
    path_length: float | None
    wall_time_s: float


def parse_results_csv(path: str | Path) -> list[TrialRow]:
    """Read a results CSV into typed rows, validating the header and fields."""
    path = Path(path)
    rows: list[TrialRow] = []
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a results CSV") from None
        if tuple(header) != EXPECTED_HEADER:
            raise ValueError(
                f"{path}: unexpected header {header!r}, expected {','.join(EXPECTED_HEADER)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(EXPECTED_HEADER):
                raise ValueError(f"{path}:{lineno}: expected {len(EXPECTED_HEADER)} fields, got {len(row)}")
            scenario, planner, seed, success, iterations, length, wall = row
            if success not in ("true", "false"):
                raise ValueError(f"{path}:{lineno}: success must be 'true' or 'false', got {success!r}")
            try:
                rows.append(
                    TrialRow(
                        scenario=scenario,
                        planner=planner,
                        seed=int(seed),
                        success=success == "true",
                        iterations=int(iterations),
                        path_length=None if length == "" else float(length),
                        wall_time_s=float(wall),
                    )
                )
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return rows


def _validate_histogram(planner: str, histogram: object, success_count: int, where: str) -> None:
    if histogram is None:
        if success_count != 0:
            raise ValueError(
                f"{where}: planner {planner!r} has {success_count} successes but a null histogram"
            )
        return
    if not isinstance(histogram, dict) or set(histogram) != {"edges", "counts"}:
        raise ValueError(f"{where}: planner {planner!r} histogram must have exactly 'edges' and 'counts'")
    edges, counts = histogram["edges"], histogram["counts"]
    if not isinstance(edges, list) or not isinstance(counts, list):
        raise ValueError(f"{where}: planner {planner!r} histogram edges/counts must be lists")
    if len(edges) != len(counts) + 1:
        raise ValueError(
            f"{where}: planner {planner!r} histogram has {len(edges)} edges for {len(counts)} counts"
        )
    if any(not isinstance(c, int) or c < 0 for c in counts):
        raise ValueError(f"{where}: planner {planner!r} histogram counts must be non-negative integers")
    if sum(counts) != success_count:
        raise ValueError(
            f"{where}: planner {planner!r} histogram counts sum to {sum(counts)}, "
            f"but success_count is {success_count}"
        )
    if any(b < a for a, b in zip(edges, edges[1:])):
        raise ValueError(f"{where}: planner {planner!r} histogram edges are not non-decreasing")


def load_summary(path: str | Path) -> dict:
    """Read and validate one summary JSON document."""
    path = Path(path)
    with path.open() as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict) or not doc:
        raise ValueError(f"{path}: summary must be a non-empty JSON object keyed by planner")
    for planner, stats in doc.items():
        if not isinstance(stats, dict) or set(stats) != _STAT_KEYS:
            raise ValueError(
                f"{path}: planner {planner!r} entry must have exactly the keys "
                f"{sorted(_STAT_KEYS)}, got {sorted(stats) if isinstance(stats, dict) else type(stats).__name__}"
            )
        count = stats["success_count"]
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"{path}: planner {planner!r} success_count must be a non-negative integer")
        if (stats["mean_length"] is None) != (count == 0) or (stats["std_length"] is None) != (count == 0):
            raise ValueError(
                f"{path}: planner {planner!r} mean/std must be null exactly when success_count is 0"
            )
        _validate_histogram(planner, stats["histogram"], count, str(path))
    return doc


def load_summaries(items: Iterable[tuple[str, str | Path]]) -> dict[str, dict]:
    """Load several summaries as an ordered {label: summary} mapping.

    ``items`` are (label, path) pairs; the label names the campaign (usually
    the scenario) and becomes a column heading in rendered tables.
    """
    out: dict[str, dict] = {}
    for label, path in items:
        if label in out:
            raise ValueError(f"duplicate summary label {label!r}")
        out[label] = load_summary(path)
    if not out:
        raise ValueError("no summaries given")
    return out
