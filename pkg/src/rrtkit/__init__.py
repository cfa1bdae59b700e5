"""2D sampling-based path planning with narrow-channel-biased tree growth.

The package provides four planners over rectangular-obstacle worlds (uniform,
goal-biased, goal-zoom, and a narrow-channel-biased variant), a deterministic
seeded benchmark harness with CSV/JSON outputs, SVG rendering of tree growth,
and four shipped benchmark scenarios.
"""

from .bench import (
    Histogram,
    SummaryStats,
    TrialRecord,
    classify_short,
    make_histogram,
    run_campaign,
    run_trial,
    summarize,
    summary_document,
)
from .planners import (
    PLANNER_KINDS,
    ExtendStatus,
    PlannerParams,
    PlanOutcome,
    extend,
    new_state,
    plan,
)
from .render import RenderSpec, render_svg
from .rng import RngStream, derive_seed
from .samplers import (
    SamplerParams,
    SamplingError,
    goal_bias_state,
    goal_zoom_state,
    is_narrow,
    narrow_state,
    random_state,
)
from .space import (
    Config,
    Obstacle,
    Scenario,
    ScenarioError,
    WorldBounds,
    builtin_scenario_names,
    collision_check,
    load_builtin_scenario,
    load_scenario,
    metric,
    scenario_from_dict,
    segment_free,
)
from .tree import Tree, path_length

__version__ = "0.1.0"

__all__ = [
    "Config",
    "WorldBounds",
    "Obstacle",
    "Scenario",
    "ScenarioError",
    "metric",
    "collision_check",
    "segment_free",
    "load_scenario",
    "scenario_from_dict",
    "builtin_scenario_names",
    "load_builtin_scenario",
    "Tree",
    "path_length",
    "RngStream",
    "derive_seed",
    "SamplerParams",
    "SamplingError",
    "random_state",
    "goal_bias_state",
    "goal_zoom_state",
    "is_narrow",
    "narrow_state",
    "PLANNER_KINDS",
    "PlannerParams",
    "PlanOutcome",
    "ExtendStatus",
    "new_state",
    "extend",
    "plan",
    "TrialRecord",
    "Histogram",
    "SummaryStats",
    "run_trial",
    "run_campaign",
    "make_histogram",
    "classify_short",
    "summarize",
    "summary_document",
    "RenderSpec",
    "render_svg",
    "__version__",
]
