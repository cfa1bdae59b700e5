"""Tree-growth planners: the extend primitive and four sampling strategies.

All four planners share one loop: draw a sample, extend the tree at most one
step toward it, then try to connect to the goal whenever some node is within
one step of it. They differ only in where samples come from:

=========  ==============================================================
token      sample source
=========  ==============================================================
basic      uniform over free space
goalbias   the goal itself with probability 1 - p, else uniform
goalzoom   a goal-centered shrinking disk with probability 1 - p, else uniform
ncrrt      every alpha-th iteration a narrow-channel-biased sample, else uniform
=========  ==============================================================

Success is declared only by an extend toward the exact goal configuration
returning Reached, so a successful path always ends at the goal verbatim.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field

from .rng import RngStream
from .samplers import SamplerParams, goal_bias_state, goal_zoom_state, narrow_state, random_state
from .space import Config, Scenario, metric, segment_free
from .tree import Tree, path_length

__all__ = [
    "PLANNER_KINDS",
    "PlannerParams",
    "ExtendStatus",
    "PlanOutcome",
    "new_state",
    "extend",
    "plan",
]

# CLI/CSV tokens of the four planners, in canonical order.
PLANNER_KINDS = ("basic", "goalbias", "goalzoom", "ncrrt")


class ExtendStatus(enum.Enum):
    REACHED = "reached"
    ADVANCED = "advanced"
    TRAPPED = "trapped"


@dataclass(frozen=True)
class PlannerParams:
    """Planner knobs; defaults reproduce the benchmark configuration.

    step_size: maximum extension length per iteration, world units.
    max_iterations: iteration cap K; exceeding it is reported as failure.
    edge_resolution: spacing of collision probes along candidate edges; must
        not exceed step_size or probes could skip past a thin obstacle wall.
    narrow_period: the ncrrt planner draws its narrow-biased sample on every
        iteration k with k % narrow_period == 0 (k counted from 1).
    """

    step_size: float = 20.0
    max_iterations: int = 1500
    edge_resolution: float = 2.0
    narrow_period: int = 3
    sampler: SamplerParams = field(default_factory=SamplerParams)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.step_size) and self.step_size > 0):
            raise ValueError(f"step_size must be positive, got {self.step_size!r}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be at least 1, got {self.max_iterations!r}")
        if not (math.isfinite(self.edge_resolution) and self.edge_resolution > 0):
            raise ValueError(f"edge_resolution must be positive, got {self.edge_resolution!r}")
        if self.edge_resolution > self.step_size:
            raise ValueError(
                f"edge_resolution ({self.edge_resolution!r}) must not exceed step_size ({self.step_size!r})"
            )
        if self.narrow_period < 1:
            raise ValueError(f"narrow_period must be at least 1, got {self.narrow_period!r}")


@dataclass(frozen=True)
class PlanOutcome:
    """Result of one planner run.

    path and its length are present exactly when success is true; on failure
    the full tree is still returned for rendering and analysis.
    """

    success: bool
    tree: Tree
    path: list[Config] | None
    path_length: float | None
    iterations_used: int
    wall_time: float


def new_state(x: Config, x_near: Config, step: float) -> Config:
    """Target of one extension from x_near toward x, clamped to ``step``.

    Returns x verbatim when it is within ``step`` of x_near, so callers can
    detect an exact arrival by coordinate equality.
    """
    if step <= 0:
        raise ValueError(f"step must be positive, got {step!r}")
    d = metric(x_near, x)
    if d <= step:
        return x
    f = step / d
    return Config(x_near.x + f * (x.x - x_near.x), x_near.y + f * (x.y - x_near.y))


def extend(t: Tree, x: Config, params: PlannerParams, s: Scenario) -> ExtendStatus:
    """Grow the tree one clamped step from its nearest node toward x.

    The new node and its connecting edge must both be collision-free, or the
    tree is left unchanged (Trapped). Reached means x itself was added (exact
    coordinate equality); on Reached/Advanced the new node is the tree's last.
    """
    near_id = t.nearest_neighbour(x)
    x_near = t.node(near_id)
    x_new = new_state(x, x_near, params.step_size)
    if s.collides(x_new.x, x_new.y) or not segment_free(x_near, x_new, s, params.edge_resolution):
        return ExtendStatus.TRAPPED
    t.add_node(x_new, near_id)
    if x_new.x == x.x and x_new.y == x.y:
        return ExtendStatus.REACHED
    return ExtendStatus.ADVANCED


def plan(kind: str, s: Scenario, params: PlannerParams, rng: RngStream) -> PlanOutcome:
    """Run one planner to the goal or to the iteration cap.

    Per iteration: one sample from the kind-specific source, one extend toward
    it, then, if any node is within step_size of the goal, one extend toward
    the exact goal. Reached on that goal extend ends the run successfully with
    the root-to-goal path; exhausting max_iterations reports failure with the
    partial tree. The goal-distance gate tracks the minimum over nodes
    incrementally, which is equivalent to querying the nearest node each
    iteration.
    """
    if kind not in PLANNER_KINDS:
        raise ValueError(f"unknown planner kind {kind!r}; expected one of {', '.join(PLANNER_KINDS)}")
    start_time = time.perf_counter()
    tree = Tree(s.start)
    goal = s.goal
    sampler = params.sampler
    best_goal_dist = metric(s.start, goal)
    for k in range(1, params.max_iterations + 1):
        if kind == "basic":
            x_rand = random_state(s, rng)
        elif kind == "goalbias":
            x_rand = goal_bias_state(s, rng, sampler.uniform_prob)
        elif kind == "goalzoom":
            x_rand = goal_zoom_state(s, tree, rng, sampler.uniform_prob, sampler.max_attempts)
        else:
            if k % params.narrow_period == 0:
                x_rand = narrow_state(s, rng, sampler)
            else:
                x_rand = random_state(s, rng)
        if extend(tree, x_rand, params, s) is not ExtendStatus.TRAPPED:
            d = metric(tree.node(len(tree) - 1), goal)
            if d < best_goal_dist:
                best_goal_dist = d
        if best_goal_dist <= params.step_size:
            # Gate open: some node is within one step, so the clamped target
            # is the goal itself and the extend is Reached or Trapped.
            if extend(tree, goal, params, s) is ExtendStatus.REACHED:
                path = tree.extract_path(len(tree) - 1)
                return PlanOutcome(
                    success=True,
                    tree=tree,
                    path=path,
                    path_length=path_length(path),
                    iterations_used=k,
                    wall_time=time.perf_counter() - start_time,
                )
    return PlanOutcome(
        success=False,
        tree=tree,
        path=None,
        path_length=None,
        iterations_used=params.max_iterations,
        wall_time=time.perf_counter() - start_time,
    )
