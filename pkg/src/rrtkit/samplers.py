"""Random-state generators: uniform, goal-biased, goal-zoom, and narrow-channel.

Every sampler is a pure function of its inputs and the stream state, so equal
seeds give equal outputs bit-for-bit. Draw accounting is fixed and documented
per sampler; no code path consumes a data-dependent number of draws except the
rejection loops, whose budgets are explicit parameters.

Probability convention: ``p`` is the probability of a plain uniform sample;
the biased branch (goal, zoom disk) fires with probability 1 - p. With the
default p = 0.9 one draw in ten is biased.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import RngStream
from .space import Config, Scenario
from .tree import Tree

__all__ = [
    "SamplerParams",
    "SamplingError",
    "random_state",
    "goal_bias_state",
    "goal_zoom_state",
    "sample_in_disk",
    "is_narrow",
    "narrow_state",
]

# Rejection budget of random_state: 10x the default candidate budget below.
DEFAULT_MAX_REJECTIONS = 1000


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its budget; the free space is degenerate."""


@dataclass(frozen=True)
class SamplerParams:
    """Knobs shared by the biased samplers.

    uniform_prob: probability of a plain uniform sample (biased branch: 1 - p).
    cluster_radius: radius of the narrowness probe disk, world units.
    narrow_threshold_pct: colliding-probe percentage at or above which a
        candidate counts as narrow.
    cluster_size: probes per narrowness test.
    max_attempts: candidate budget per narrow_state call, and the zoom-disk
        rejection budget of goal_zoom_state.
    """

    uniform_prob: float = 0.9
    cluster_radius: float = 20.0
    narrow_threshold_pct: float = 40.0
    cluster_size: int = 50
    max_attempts: int = 100

    def __post_init__(self) -> None:
        if not 0.0 <= self.uniform_prob <= 1.0:
            raise ValueError(f"uniform_prob must be in [0, 1], got {self.uniform_prob!r}")
        if not (math.isfinite(self.cluster_radius) and self.cluster_radius > 0):
            raise ValueError(f"cluster_radius must be positive, got {self.cluster_radius!r}")
        if not 0.0 < self.narrow_threshold_pct <= 100.0:
            raise ValueError(f"narrow_threshold_pct must be in (0, 100], got {self.narrow_threshold_pct!r}")
        if self.cluster_size < 1:
            raise ValueError(f"cluster_size must be at least 1, got {self.cluster_size!r}")
        if self.max_attempts < 1:
            raise ValueError(f"max_attempts must be at least 1, got {self.max_attempts!r}")


def _random_point(s: Scenario, rng: RngStream, max_rejections: int) -> tuple[float, float]:
    """Rejection-sampling core of random_state on raw coordinates."""
    b = s.bounds
    x0, y0, w, h = b.x_min, b.y_min, b.width, b.height
    for _ in range(max_rejections):
        x = x0 + rng.random() * w
        y = y0 + rng.random() * h
        if not s.collides(x, y):
            return x, y
    raise SamplingError(
        f"no free sample found in {max_rejections} attempts on scenario {s.name!r}; free space is degenerate"
    )


def random_state(s: Scenario, rng: RngStream, max_rejections: int = DEFAULT_MAX_REJECTIONS) -> Config:
    """Uniform sample over the free space by rejection.

    Each attempt consumes two draws, x-coordinate then y-coordinate. Raises
    SamplingError after ``max_rejections`` consecutive colliding attempts,
    which signals a map whose free space is (nearly) empty.
    """
    return Config(*_random_point(s, rng, max_rejections))


def goal_bias_state(s: Scenario, rng: RngStream, p: float) -> Config:
    """The goal itself with probability 1 - p, else a uniform free sample.

    The coin is one draw; the uniform branch then consumes draws as
    random_state does.
    """
    if rng.random() < 1.0 - p:
        return s.goal
    return random_state(s, rng)


def sample_in_disk(rng: RngStream, center: Config, radius: float) -> tuple[float, float]:
    """One point uniform in the closed disk; two draws, radius then angle.

    Exact-uniform construction: distance = radius * sqrt(u), angle = 2*pi*v.
    Rejection-free, so the draw count is fixed.
    """
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return center.x + r * math.cos(theta), center.y + r * math.sin(theta)


def goal_zoom_state(s: Scenario, t: Tree, rng: RngStream, p: float, max_attempts: int = 100) -> Config:
    """Zoom sample toward the goal with probability 1 - p, else uniform.

    The zoom branch samples uniformly in the disk centered at the goal whose
    radius is the current distance from the tree to the goal, so the region
    shrinks as the tree closes in. Colliding disk samples are rejected; after
    ``max_attempts`` rejections the call falls back to a plain uniform sample.
    """
    if rng.random() < 1.0 - p:
        d = t.nearest_distance(s.goal)
        for _ in range(max_attempts):
            x, y = sample_in_disk(rng, s.goal, d)
            if not s.collides(x, y):
                return Config(x, y)
        return random_state(s, rng, 10 * max_attempts)
    return random_state(s, rng)


def _is_narrow_xy(
    x: float,
    y: float,
    s: Scenario,
    rng: RngStream,
    cluster_radius: float,
    narrow_threshold_pct: float,
    cluster_size: int,
) -> bool:
    """Cluster test core on raw coordinates.

    The probe disk is generated from one block of 2 * cluster_size draws
    (radii first, then angles), transformed in a handful of vector ops:
    radius = cluster_radius * sqrt(u), angle = 2 * pi * v, probes at the
    polar offsets from (x, y).
    """
    block = rng.random_array(2 * cluster_size)
    rs = block[:cluster_size]
    np.sqrt(rs, out=rs)
    rs *= cluster_radius
    thetas = block[cluster_size:]
    thetas *= 2.0 * math.pi
    px = np.cos(thetas)
    px *= rs
    px += x
    py = np.sin(thetas)
    py *= rs
    py += y
    colliding = s.count_colliding(px, py)
    return colliding * 100.0 >= narrow_threshold_pct * cluster_size


def is_narrow(
    c: Config,
    s: Scenario,
    rng: RngStream,
    cluster_radius: float,
    narrow_threshold_pct: float,
    cluster_size: int,
) -> bool:
    """Cluster test: is ``c`` hemmed in by obstacles?

    Probes ``cluster_size`` points uniform in the disk of radius
    ``cluster_radius`` around ``c`` and reports True iff the colliding
    percentage is at or above ``narrow_threshold_pct``. Consumes exactly one
    block of 2 * cluster_size draws (radii first, then angles) regardless of
    the outcome, so replaying the stream reproduces the exact probe cluster.
    """
    return _is_narrow_xy(c.x, c.y, s, rng, cluster_radius, narrow_threshold_pct, cluster_size)


def narrow_state(s: Scenario, rng: RngStream, params: SamplerParams) -> Config:
    """A free sample biased toward narrow channels.

    Draws up to ``params.max_attempts`` uniform free candidates, returning the
    first that passes the narrowness test. If none passes, the last candidate
    is returned unchanged: on channel-free maps this sampler gracefully
    degrades to plain uniform sampling.

    Draw for draw this behaves exactly like alternating ``random_state`` and
    ``is_narrow``; the body is the two inlined into one loop with scratch
    buffers and spatial-grid lookups because this is the planner's hot path,
    and the replay tests hold it to the documented sequence.
    """
    b = s.bounds
    x0b, y0b, w, h = b.x_min, b.y_min, b.width, b.height
    budget = 10 * params.max_attempts
    radius = params.cluster_radius
    m = params.cluster_size
    need = params.narrow_threshold_pct * m
    two_pi = 2.0 * math.pi
    # The wrapper methods are bypassed for speed; gen.random() scalar and
    # gen.random(out=...) consume the stream exactly as RngStream.random and
    # RngStream.random_array do.
    rand = rng._gen.random
    obs_grid, obs_inv, obs_max_ix, obs_max_iy = s._scalar_grid
    grid, ginv, gmax_ix, gmax_iy = s._supercell_grid
    matrix = s._collision_matrix
    block = np.empty(2 * m, dtype=np.float64)
    rs = block[:m]
    thetas = block[m:]
    px = np.empty(m, dtype=np.float64)
    py = np.empty(m, dtype=np.float64)
    pxc = px[:, None]
    pyc = py[:, None]

    x = y = 0.0
    for _ in range(params.max_attempts):
        # Uniform free candidate: random_state's rejection loop. Drawn x/y
        # never leave the bounds, so only obstacles in the block can collide.
        for _ in range(budget):
            x = x0b + float(rand()) * w
            y = y0b + float(rand()) * h
            row = obs_grid[min(int((y - y0b) * obs_inv), obs_max_iy)]
            free = True
            for ox0, oy0, ox1, oy1 in row[min(int((x - x0b) * obs_inv), obs_max_ix)]:
                if ox0 <= x <= ox1 and oy0 <= y <= oy1:
                    free = False
                    break
            if free:
                break
        else:
            raise SamplingError(
                f"no free sample found in {budget} attempts on scenario {s.name!r}; free space is degenerate"
            )
        # Narrowness test: is_narrow's probe block and count. The grid block
        # is picked from the analytic probe bounding box (x +- radius), a
        # superset of the probes, so the count matches count_colliding.
        rand(out=block)
        np.sqrt(rs, out=rs)
        rs *= radius
        thetas *= two_pi
        np.cos(thetas, out=px)
        px *= rs
        px += x
        np.sin(thetas, out=py)
        py *= rs
        py += y
        ix0 = int((x - radius - x0b) * ginv)
        iy0 = int((y - radius - y0b) * ginv)
        ix1 = int((x + radius - x0b) * ginv)
        iy1 = int((y + radius - y0b) * ginv)
        if 0 <= ix1 - ix0 <= 1 and 0 <= iy1 - iy0 <= 1:
            rows = grid[min(max(iy0, 0), gmax_iy)][min(max(ix0, 0), gmax_ix)]
            if rows is None:
                continue  # zero probes collide; never at or above the threshold
            bx0, by0, bx1, by1 = rows
        else:
            bx0, by0, bx1, by1 = matrix
        inside = (pxc >= bx0) & (pxc <= bx1) & (pyc >= by0) & (pyc <= by1)
        if np.count_nonzero(inside.any(axis=1)) * 100.0 >= need:
            return Config(x, y)
    # No candidate passed; the last one is returned unchanged (its test ran,
    # keeping the draw pattern fixed).
    return Config(x, y)
