"""Command-line interface: single plans, benchmark campaigns, and statistics.

Exit codes are uniform across subcommands: 0 for success, 1 when a single
plan exhausts its iteration cap (``plan`` only; campaigns treat failures as
data), 2 for usage or validation errors.

``--scenario`` accepts either a path to a scenario JSON file or the name of a
shipped scenario (``scenario1`` .. ``scenario4``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (
    ResultsFormatError,
    format_records_csv,
    read_results_csv,
    run_campaign,
    summary_document,
)
from .planners import PLANNER_KINDS, PlannerParams, plan
from .render import RenderSpec, render_svg
from .rng import RngStream
from .samplers import SamplerParams
from .space import Scenario, ScenarioError, load_builtin_scenario, load_scenario

__all__ = ["main"]


def _resolve_scenario(token: str) -> Scenario:
    path = Path(token)
    if path.exists():
        return load_scenario(path)
    if path.suffix == "" and "/" not in token:
        return load_builtin_scenario(token)
    raise ScenarioError(f"scenario file {token!r} does not exist")


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=float, default=20.0, help="extension step size (default 20)")
    parser.add_argument("--k", type=int, default=1500, help="iteration cap (default 1500)")
    parser.add_argument("--p", type=float, default=0.9, help="probability of a uniform sample (default 0.9)")
    parser.add_argument("--alpha", type=int, default=3, help="narrow-bias period of ncrrt (default 3)")
    parser.add_argument(
        "--lambda", dest="cluster_radius", type=float, default=20.0, help="narrowness probe radius (default 20)"
    )
    parser.add_argument(
        "--sigma", type=float, default=40.0, help="narrowness threshold, percent colliding (default 40)"
    )
    parser.add_argument("--cluster-size", type=int, default=50, help="probes per narrowness test (default 50)")
    parser.add_argument("--delta", type=float, default=2.0, help="edge collision-check resolution (default 2)")


def _params_from_args(args: argparse.Namespace) -> PlannerParams:
    sampler = SamplerParams(
        uniform_prob=args.p,
        cluster_radius=args.cluster_radius,
        narrow_threshold_pct=args.sigma,
        cluster_size=args.cluster_size,
    )
    return PlannerParams(
        step_size=args.epsilon,
        max_iterations=args.k,
        edge_resolution=args.delta,
        narrow_period=args.alpha,
        sampler=sampler,
    )


def _cmd_plan(args: argparse.Namespace) -> int:
    try:
        scenario = _resolve_scenario(args.scenario)
        params = _params_from_args(args)
    except (ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    outcome = plan(args.planner, scenario, params, RngStream(args.seed))
    if outcome.success:
        print(
            f"success: reached the goal in {outcome.iterations_used} iterations, "
            f"path length {outcome.path_length:.6g}"
        )
    else:
        print(f"failure: iteration cap {params.max_iterations} reached without connecting to the goal")
    try:
        if args.json:
            doc = {
                "success": outcome.success,
                "iterations": outcome.iterations_used,
                "path": None if outcome.path is None else [[c.x, c.y] for c in outcome.path],
                "path_length": outcome.path_length,
                "wall_time_s": outcome.wall_time,
                "tree": outcome.tree.as_records(),
            }
            Path(args.json).write_text(json.dumps(doc, indent=2) + "\n")
        if args.svg:
            Path(args.svg).write_text(render_svg(outcome, scenario, RenderSpec()))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    return 0 if outcome.success else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    kinds = [token.strip() for token in args.planners.split(",") if token.strip()]
    try:
        scenario = _resolve_scenario(args.scenario)
        params = _params_from_args(args)
        if not kinds:
            raise ValueError("--planners must name at least one planner")
        records = run_campaign(scenario, kinds, params, args.trials, args.seed_base)
    except (ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        Path(args.out).write_text(format_records_csv(records))
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {len(records)} trial records to {args.out}")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    try:
        records = read_results_csv(args.input)
    except ResultsFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    threshold = args.threshold
    if threshold is None:
        names = sorted({r.scenario_name for r in records})
        if len(names) != 1:
            print(
                "error: --threshold is required when the CSV does not cover exactly one scenario",
                file=sys.stderr,
            )
            return 2
        try:
            scenario = _resolve_scenario(args.scenario if args.scenario else names[0])
        except ScenarioError as exc:
            print(f"error: cannot resolve a scenario for its threshold: {exc}", file=sys.stderr)
            return 2
        threshold = scenario.short_path_threshold
        if threshold is None:
            print(
                f"error: scenario {scenario.name!r} defines no short_path_threshold; pass --threshold",
                file=sys.stderr,
            )
            return 2
    try:
        doc = summary_document(records, threshold, args.bins)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rrtkit", description="2D sampling-based path planning toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_plan = sub.add_parser("plan", help="run a single planner and optionally dump JSON/SVG artifacts")
    p_plan.add_argument("--scenario", required=True, help="scenario JSON file or shipped scenario name")
    p_plan.add_argument("--planner", required=True, choices=PLANNER_KINDS)
    p_plan.add_argument("--seed", required=True, type=int)
    _add_param_flags(p_plan)
    p_plan.add_argument("--svg", help="write an SVG drawing of the run to this path")
    p_plan.add_argument("--json", help="write the outcome (path, tree dump) as JSON to this path")
    p_plan.set_defaults(func=_cmd_plan)

    p_bench = sub.add_parser("bench", help="run a seeded multi-trial campaign and write a results CSV")
    p_bench.add_argument("--scenario", required=True, help="scenario JSON file or shipped scenario name")
    p_bench.add_argument("--planners", required=True, help="comma-separated planner tokens")
    p_bench.add_argument("--trials", required=True, type=int)
    p_bench.add_argument("--seed-base", required=True, type=int)
    p_bench.add_argument("--out", required=True, help="output CSV path")
    _add_param_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_stats = sub.add_parser("stats", help="summarize a results CSV into the summary JSON")
    p_stats.add_argument("--in", dest="input", required=True, help="results CSV path")
    p_stats.add_argument("--bins", type=int, default=30, help="histogram bin count (default 30)")
    p_stats.add_argument(
        "--threshold",
        type=float,
        default=None,
        help="short-path length threshold; defaults to the scenario file's short_path_threshold",
    )
    p_stats.add_argument(
        "--scenario",
        default=None,
        help="scenario JSON file to take the default threshold from (default: look up the CSV's scenario name)",
    )
    p_stats.add_argument("--out", default=None, help="write the summary JSON here instead of stdout")
    p_stats.set_defaults(func=_cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
