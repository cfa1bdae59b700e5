"""Command-line front end: benchmark artifact files in, figures/tables out."""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from rrtplots.histograms import save_histograms
from rrtplots.io import load_summaries, load_summary, parse_results_csv
from rrtplots.tables import render_tables


def _labelled(value: str) -> tuple[str, str]:
    label, sep, path = value.partition("=")
    if not sep or not label or not path:
        raise argparse.ArgumentTypeError(f"expected LABEL=PATH, got {value!r}")
    return label, path


def _cross_check_csv(csv_path: str, summary: dict) -> str:
    """Verify a results CSV belongs to the summary; return the scenario name.

    The summary file does not carry the scenario name, so pairing mistakes
    are easy; per-planner success counts are compared to catch them.
    """
    rows = parse_results_csv(csv_path)
    scenarios = sorted({r.scenario for r in rows})
    if len(scenarios) != 1:
        raise SystemExit(f"{csv_path}: expected one scenario per results CSV, found {scenarios}")
    csv_counts = Counter(r.planner for r in rows if r.success)
    summary_counts = {kind: stats["success_count"] for kind, stats in summary.items()}
    if set(csv_counts) - set(summary_counts) or any(
        csv_counts.get(kind, 0) != count for kind, count in summary_counts.items()
    ):
        raise SystemExit(
            f"{csv_path}: per-planner success counts {dict(csv_counts)} do not match "
            f"the summary's {summary_counts}; these files are not from the same campaign"
        )
    return scenarios[0]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="rrtplots", description="render benchmark results CSV / summary JSON artifacts"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hist = sub.add_parser("histograms", help="per-planner path-length histogram panels")
    p_hist.add_argument("--summary", required=True, help="summary JSON path")
    p_hist.add_argument("--out", required=True, help="output image path (png, svg, pdf, ...)")
    p_hist.add_argument(
        "--csv",
        help="matching results CSV; cross-checks that the files belong together "
        "and provides the figure title",
    )
    p_hist.add_argument("--title", help="figure title (overrides the CSV-derived one)")

    p_tab = sub.add_parser("tables", help="markdown tables across one or more campaigns")
    p_tab.add_argument(
        "--summary",
        dest="summaries",
        metavar="LABEL=PATH",
        type=_labelled,
        action="append",
        required=True,
        help="labelled summary JSON, repeatable; the label becomes the column heading",
    )
    p_tab.add_argument("--out", help="write the markdown here instead of stdout")

    args = parser.parse_args(argv)
    if args.command == "histograms":
        summary = load_summary(args.summary)
        title = args.title
        if args.csv:
            scenario = _cross_check_csv(args.csv, summary)
            title = title or scenario
        out = save_histograms(summary, args.out, title=title)
        print(f"wrote {out}")
        return 0
    if args.command == "tables":
        text = render_tables(load_summaries(args.summaries))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(text)
        return 0
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
