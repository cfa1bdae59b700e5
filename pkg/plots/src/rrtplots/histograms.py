"""Path-length histogram figures from summary JSON documents.

The figure is drawn directly from the histogram stored in the summary —
the bin edges and counts appear verbatim as bar positions and heights,
with no re-binning — so the picture is exactly the data the benchmark
recorded. The fidelity tests read the bars back out of the figure and
compare them to the JSON.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

PLANNER_ORDER = ("basic", "goalbias", "goalzoom", "ncrrt")

_BAR_COLOR = "#4878a8"


def planner_rows(summary: dict) -> list[str]:
    """Planner tokens of a summary in canonical order, unknowns last, sorted."""
    known = [k for k in PLANNER_ORDER if k in summary]
    extra = sorted(k for k in summary if k not in PLANNER_ORDER)
    return known + extra


def plot_histograms(summary: dict, *, title: str | None = None) -> Figure:
    """One bar-chart panel per planner, bars = the summary's stored bins.

    Planners with no successful trials get an annotated empty panel. The
    returned figure is backend-free; save it with ``fig.savefig(path)`` or
    use :func:`save_histograms`.
    """
    planners = planner_rows(summary)
    cols = 2 if len(planners) > 1 else 1
    rows = math.ceil(len(planners) / cols)
    fig = Figure(figsize=(6.0 * cols, 4.0 * rows), dpi=100, layout="constrained")
    axes = fig.subplots(rows, cols, squeeze=False)
    for ax, kind in zip(axes.flat, planners):
        stats = summary[kind]
        histogram = stats["histogram"]
        ax.set_title(
            f"{kind}: {stats['success_count']} successes, "
            f"short fraction {stats['short_fraction']:.2f}"
        )
        ax.set_xlabel("path length")
        ax.set_ylabel("successful trials")
        if histogram is None:
            ax.text(0.5, 0.5, "no successful trials", ha="center", va="center", transform=ax.transAxes)
            continue
        edges = np.asarray(histogram["edges"], dtype=np.float64)
        counts = np.asarray(histogram["counts"], dtype=np.int64)
        ax.bar(
            edges[:-1],
            counts,
            width=np.diff(edges),
            align="edge",
            color=_BAR_COLOR,
            edgecolor="white",
            linewidth=0.4,
        )
    for ax in list(axes.flat)[len(planners) :]:
        ax.set_visible(False)
    if title:
        fig.suptitle(title)
    return fig


def save_histograms(summary: dict, out_path: str | Path, *, title: str | None = None) -> Path:
    """Render :func:`plot_histograms` straight to an image file."""
    out_path = Path(out_path)
    fig = plot_histograms(summary, title=title)
    fig.savefig(out_path)
    return out_path
