"""Markdown summary tables from summary JSON documents.

Three tables, planners as rows and campaigns (scenarios) as columns:

* mean successful path length, printed as ``mean ± std`` at one decimal;
* short-path fraction, printed at two decimals;
* mean wall time in seconds, printed at four decimals.

Cells print the summary's values at those fixed precisions and nothing
else — the fidelity tests parse the cells back and hold them to the JSON
within half a unit of the printed precision. A planner with no successes
renders an em dash in the length table; a planner absent from a campaign
renders an em dash everywhere.
"""

from __future__ import annotations

from rrtplots.histograms import PLANNER_ORDER

_MISSING = "—"

LENGTH_DECIMALS = 1
FRACTION_DECIMALS = 2
WALL_DECIMALS = 4


def _all_planners(summaries: dict[str, dict]) -> list[str]:
    seen = set()
    for doc in summaries.values():
        seen.update(doc)
    known = [k for k in PLANNER_ORDER if k in seen]
    extra = sorted(k for k in seen if k not in PLANNER_ORDER)
    return known + extra


def _length_cell(stats: dict) -> str:
    if stats["mean_length"] is None:
        return _MISSING
    return f"{stats['mean_length']:.{LENGTH_DECIMALS}f} ± {stats['std_length']:.{LENGTH_DECIMALS}f}"


def _fraction_cell(stats: dict) -> str:
    return f"{stats['short_fraction']:.{FRACTION_DECIMALS}f}"


def _wall_cell(stats: dict) -> str:
    return f"{stats['mean_wall_time_s']:.{WALL_DECIMALS}f}"


_SECTIONS = (
    ("Mean successful path length", _length_cell),
    ("Short-path fraction", _fraction_cell),
    ("Mean wall time (s)", _wall_cell),
)


def render_tables(summaries: dict[str, dict]) -> str:
    """Render the three summary tables as one markdown document.

    ``summaries`` maps a campaign label (column heading, usually the
    scenario name) to its loaded summary document; column order follows
    the mapping's order.
    """
    if not summaries:
        raise ValueError("no summaries given")
    labels = list(summaries)
    planners = _all_planners(summaries)
    lines: list[str] = ["# Benchmark summary", ""]
    for heading, cell in _SECTIONS:
        lines.append(f"## {heading}")
        lines.append("")
        lines.append("| planner | " + " | ".join(labels) + " |")
        lines.append("| --- | " + " | ".join("---" for _ in labels) + " |")
        for kind in planners:
            row = [
                cell(summaries[label][kind]) if kind in summaries[label] else _MISSING
                for label in labels
            ]
            lines.append(f"| {kind} | " + " | ".join(row) + " |")
        lines.append("")
    return "\n".join(lines)
