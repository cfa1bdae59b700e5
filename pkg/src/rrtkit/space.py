"""Planar configuration space: world bounds, rectangular obstacles, collision tests.

World geometry is deliberately minimal: axis-aligned rectangles over a bounded
rectangular world. Obstacles are closed sets (boundary points collide), and
everything outside the world bounds is treated as infeasible, so samplers can
never leak outside the map.

Scenario files are JSON documents::

    {
      "name": "corridor",
      "bounds": [x_min, y_min, x_max, y_max],
      "obstacles": [[x_min, y_min, x_max, y_max], ...],
      "start": [x, y],
      "goal": [x, y],
      "short_path_threshold": 560.0        # optional
    }

Files violating the scenario invariants (start/goal infeasible, obstacle
entirely outside the world, inverted bounds) are rejected at load time with a
descriptive :class:`ScenarioError`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

import numpy as np

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
]


class ScenarioError(ValueError):
    """A scenario document or its geometry violates the scenario contract."""


def _merge_intervals(intervals):
    """Merge closed 1-D intervals; touching intervals coalesce."""
    intervals.sort()
    merged = []
    for lo, hi in intervals:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def _union_strips(rects, window):
    """Rewrite a rectangle set as disjoint strips covering the same union.

    Rectangles are clipped to ``window`` first, so the rewrite is exact for
    every point inside the window: a point hits some input rectangle iff it
    hits some output strip (all sets closed). The sweep cuts the union at
    every rectangle edge, merges the covered y-intervals per x-slab, then
    fuses neighbouring slabs with identical coverage, which collapses heavily
    overlapping wall stacks into a handful of strips. Rectangles that clip to
    a zero-width line keep their own degenerate strips.
    """
    wx0, wy0, wx1, wy1 = window
    clipped = []
    for x0, y0, x1, y1 in rects:
        cx0, cy0 = max(x0, wx0), max(y0, wy0)
        cx1, cy1 = min(x1, wx1), min(y1, wy1)
        if cx0 <= cx1 and cy0 <= cy1:
            clipped.append((cx0, cy0, cx1, cy1))
    if not clipped:
        return []
    xs = sorted({r[0] for r in clipped} | {r[2] for r in clipped})
    strips = []
    run_ys: tuple = ()
    run_x0 = run_x1 = 0.0
    for i in range(len(xs) - 1):
        sx0, sx1 = xs[i], xs[i + 1]
        ys = tuple(_merge_intervals([[r[1], r[3]] for r in clipped if r[0] <= sx0 and r[2] >= sx1]))
        if ys == run_ys and run_x1 == sx0:
            run_x1 = sx1
            continue
        strips.extend((run_x0, lo, run_x1, hi) for lo, hi in run_ys)
        run_ys, run_x0, run_x1 = ys, sx0, sx1
    strips.extend((run_x0, lo, run_x1, hi) for lo, hi in run_ys)
    for b in xs:
        degenerate = [[r[1], r[3]] for r in clipped if r[0] == r[2] == b]
        if degenerate:
            strips.extend((b, lo, b, hi) for lo, hi in _merge_intervals(degenerate))
    return strips


@dataclass(frozen=True)
class Config:
    """A point (x, y) of the planar configuration space, in world units."""

    x: float
    y: float

    def __post_init__(self) -> None:
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"configuration coordinates must be finite, got ({self.x!r}, {self.y!r})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


@dataclass(frozen=True)
class WorldBounds:
    """Closed rectangular extent of the world; points outside are infeasible."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x_min, self.y_min, self.x_max, self.y_max)):
            raise ScenarioError("world bounds must be finite")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ScenarioError(
                f"world bounds must satisfy x_min < x_max and y_min < y_max, got "
                f"[{self.x_min}, {self.y_min}, {self.x_max}, {self.y_max}]"
            )

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def contains(self, x: float, y: float) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max


@dataclass(frozen=True)
class Obstacle:
    """Axis-aligned rectangular obstacle, a closed set: boundary points collide.

    Degenerate rectangles (zero width and/or height) are permitted and act as
    line or point obstacles.
    """

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.x_min, self.y_min, self.x_max, self.y_max)):
            raise ScenarioError("obstacle coordinates must be finite")
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ScenarioError(
                f"obstacle must satisfy x_min <= x_max and y_min <= y_max, got "
                f"[{self.x_min}, {self.y_min}, {self.x_max}, {self.y_max}]"
            )

    def contains(self, x: float, y: float) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max

    def intersects(self, bounds: WorldBounds) -> bool:
        return (
            self.x_min <= bounds.x_max
            and self.x_max >= bounds.x_min
            and self.y_min <= bounds.y_max
            and self.y_max >= bounds.y_min
        )


@dataclass(frozen=True)
class Scenario:
    """A planning problem: world, obstacle set, start and goal configurations.

    ``short_path_threshold`` is the per-scenario path length separating the
    short (narrow-channel) route from the long (broad) detour; it feeds the
    benchmark's short-path fractions and may be overridden on the CLI.
    """

    name: str
    bounds: WorldBounds
    obstacles: tuple[Obstacle, ...]
    start: Config
    goal: Config
    short_path_threshold: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "obstacles", tuple(self.obstacles))
        for i, obs in enumerate(self.obstacles):
            if not obs.intersects(self.bounds):
                raise ScenarioError(f"obstacle {i} of scenario {self.name!r} lies entirely outside the world bounds")
        for role, c in (("start", self.start), ("goal", self.goal)):
            if not self.bounds.contains(c.x, c.y):
                raise ScenarioError(f"{role} ({c.x}, {c.y}) of scenario {self.name!r} lies outside the world bounds")
            if self.collides(c.x, c.y):
                raise ScenarioError(f"{role} ({c.x}, {c.y}) of scenario {self.name!r} is not collision-free")
        if self.short_path_threshold is not None and not (
            math.isfinite(self.short_path_threshold) and self.short_path_threshold > 0
        ):
            raise ScenarioError(f"short_path_threshold must be a positive number, got {self.short_path_threshold!r}")

    @cached_property
    def _obstacle_tuples(self) -> list[tuple[float, float, float, float]]:
        return [(o.x_min, o.y_min, o.x_max, o.y_max) for o in self.obstacles]

    @cached_property
    def _collision_rows(self) -> list[tuple[float, float, float, float]]:
        """Obstacles plus four out-of-bounds strips as closed rectangles.

        The strips turn the open out-of-bounds predicate (x < x_min, ...) into
        closed rectangles by ending one float below/above the boundary, so a
        point-in-rectangle pass over the rows reproduces collides() exactly.
        """
        b = self.bounds
        inf = math.inf
        rows = list(self._obstacle_tuples)
        rows.append((-inf, -inf, float(np.nextafter(b.x_min, -inf)), inf))
        rows.append((float(np.nextafter(b.x_max, inf)), -inf, inf, inf))
        rows.append((-inf, -inf, inf, float(np.nextafter(b.y_min, -inf))))
        rows.append((-inf, float(np.nextafter(b.y_max, inf)), inf, inf))
        return rows

    @cached_property
    def _collision_matrix(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """The collision rows as four column arrays (x0, y0, x1, y1)."""
        arr = np.asarray(self._collision_rows, dtype=np.float64)
        return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy(), arr[:, 3].copy()

    @cached_property
    def _supercell_grid(self):
        """Spatial index over the collision rows for tight point batches.

        The world is cut into a coarse grid; for every 2x2 cell block the
        rows touching it are rewritten by :func:`_union_strips` into a small
        set of disjoint strips held as four column arrays. A batch whose
        bounding box fits inside one block only tests those strips. Border
        blocks extend to infinity, so points beyond the world bounds still
        meet the out-of-bounds strips.
        """
        b = self.bounds
        cell = 40.0
        nx = max(int(math.ceil(b.width / cell)), 2)
        ny = max(int(math.ceil(b.height / cell)), 2)
        grid = []
        for iy in range(ny - 1):
            cy0 = -math.inf if iy == 0 else b.y_min + iy * cell
            cy1 = math.inf if iy == ny - 2 else b.y_min + (iy + 2) * cell
            row = []
            for ix in range(nx - 1):
                cx0 = -math.inf if ix == 0 else b.x_min + ix * cell
                cx1 = math.inf if ix == nx - 2 else b.x_min + (ix + 2) * cell
                strips = _union_strips(self._collision_rows, (cx0, cy0, cx1, cy1))
                if strips:
                    arr = np.asarray(strips, dtype=np.float64)
                    row.append((arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy(), arr[:, 3].copy()))
                else:
                    row.append(None)
            grid.append(row)
        return grid, 1.0 / cell, nx - 2, ny - 2

    @cached_property
    def _scalar_grid(self):
        """Per-block obstacle strips for scalar tests on in-bounds points.

        Mirrors the 2x2-cell blocks of ``_supercell_grid`` but stores plain
        python tuples of the obstacle union only: a point already known to
        lie inside the world bounds collides iff it hits a strip in its
        block's list, and most blocks list zero to three strips.
        """
        b = self.bounds
        cell = 40.0
        nx = max(int(math.ceil(b.width / cell)), 2)
        ny = max(int(math.ceil(b.height / cell)), 2)
        grid = []
        for iy in range(ny - 1):
            cy0 = b.y_min + iy * cell
            cy1 = b.y_min + (iy + 2) * cell
            row = []
            for ix in range(nx - 1):
                cx0 = b.x_min + ix * cell
                cx1 = b.x_min + (ix + 2) * cell
                row.append(_union_strips(self._obstacle_tuples, (cx0, cy0, cx1, cy1)))
            grid.append(row)
        return grid, 1.0 / cell, nx - 2, ny - 2

    def collides(self, x: float, y: float) -> bool:
        """Scalar collision test on raw coordinates (hot path for samplers)."""
        b = self.bounds
        if not (b.x_min <= x <= b.x_max and b.y_min <= y <= b.y_max):
            return True
        for ox0, oy0, ox1, oy1 in self._obstacle_tuples:
            if ox0 <= x <= ox1 and oy0 <= y <= oy1:
                return True
        return False

    def collides_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized collision test; returns a boolean array, True where infeasible."""
        x0, y0, x1, y1 = self._collision_matrix
        xs = xs[:, None]
        ys = ys[:, None]
        inside = (xs >= x0) & (xs <= x1) & (ys >= y0) & (ys <= y1)
        return inside.any(axis=1)

    def count_colliding(self, xs: np.ndarray, ys: np.ndarray) -> int:
        """Number of colliding points among (xs, ys).

        Tight batches (the narrowness-test probe disks) resolve against the
        pre-joined rows of one spatial-grid block, which is often empty in
        open space; batches too spread out fall back to the full matrix.
        Either route tests the same rectangles a point could possibly hit,
        so the count is identical.
        """
        if xs.size == 0:
            return 0
        grid, inv, max_ix, max_iy = self._supercell_grid
        b = self.bounds
        ix = int((float(xs.min()) - b.x_min) * inv)
        iy = int((float(ys.min()) - b.y_min) * inv)
        jx = int((float(xs.max()) - b.x_min) * inv)
        jy = int((float(ys.max()) - b.y_min) * inv)
        if 0 <= jx - ix <= 1 and 0 <= jy - iy <= 1:
            block = grid[min(max(iy, 0), max_iy)][min(max(ix, 0), max_ix)]
            if block is None:
                return 0
            x0, y0, x1, y1 = block
        else:
            x0, y0, x1, y1 = self._collision_matrix
        xs = xs[:, None]
        ys = ys[:, None]
        inside = (xs >= x0) & (xs <= x1) & (ys >= y0) & (ys <= y1)
        return int(np.count_nonzero(inside.any(axis=1)))


def metric(a: Config, b: Config) -> float:
    """Euclidean distance between two configurations."""
    return math.hypot(a.x - b.x, a.y - b.y)


def collision_check(c: Config, s: Scenario) -> bool:
    """True iff ``c`` lies inside any obstacle (closed) or outside the world bounds."""
    return s.collides(c.x, c.y)


def segment_free(a: Config, b: Config, s: Scenario, delta: float) -> bool:
    """Check the straight segment a-b for collisions at fixed resolution ``delta``.

    Interpolated points are spaced ``delta`` apart along the segment, starting
    at one endpoint, with the far endpoint always included. The walk starts at
    the lexicographically smaller endpoint so the sample grid is identical for
    (a, b) and (b, a).
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    if (b.x, b.y) < (a.x, a.y):
        a, b = b, a
    length = metric(a, b)
    if length == 0.0:
        return not s.collides(a.x, a.y)
    n = math.ceil(length / delta)
    ts = np.arange(n + 1, dtype=np.float64) * (delta / length)
    ts[-1] = 1.0
    xs = a.x + ts * (b.x - a.x)
    ys = a.y + ts * (b.y - a.y)
    return not bool(s.collides_many(xs, ys).any())


def _as_number(value: object, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"{what} must be a number, got {value!r}")
    return float(value)


def _as_quad(value: object, what: str) -> tuple[float, float, float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise ScenarioError(f"{what} must be a list of 4 numbers, got {value!r}")
    x0, y0, x1, y1 = (_as_number(v, what) for v in value)
    return x0, y0, x1, y1


def _as_pair(value: object, what: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ScenarioError(f"{what} must be a list of 2 numbers, got {value!r}")
    x, y = (_as_number(v, what) for v in value)
    return x, y


def scenario_from_dict(doc: dict) -> Scenario:
    """Build a validated Scenario from a parsed scenario document."""
    if not isinstance(doc, dict):
        raise ScenarioError(f"scenario document must be a JSON object, got {type(doc).__name__}")
    missing = [k for k in ("name", "bounds", "obstacles", "start", "goal") if k not in doc]
    if missing:
        raise ScenarioError(f"scenario document is missing required fields: {', '.join(missing)}")
    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise ScenarioError(f"scenario name must be a non-empty string, got {name!r}")
    bounds = WorldBounds(*_as_quad(doc["bounds"], "bounds"))
    raw_obstacles = doc["obstacles"]
    if not isinstance(raw_obstacles, list):
        raise ScenarioError(f"obstacles must be a list, got {raw_obstacles!r}")
    obstacles = tuple(Obstacle(*_as_quad(o, f"obstacle {i}")) for i, o in enumerate(raw_obstacles))
    try:
        start = Config(*_as_pair(doc["start"], "start"))
        goal = Config(*_as_pair(doc["goal"], "goal"))
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    threshold = doc.get("short_path_threshold")
    if threshold is not None:
        threshold = _as_number(threshold, "short_path_threshold")
    return Scenario(name, bounds, obstacles, start, goal, threshold)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file {path} is not valid JSON: {exc}") from exc
    return scenario_from_dict(doc)


def builtin_scenario_names() -> list[str]:
    """Names of the scenario files shipped with the package."""
    pkg = resources.files("rrtkit.scenarios")
    return sorted(p.name.removesuffix(".json") for p in pkg.iterdir() if p.name.endswith(".json"))


def load_builtin_scenario(name: str) -> Scenario:
    """Load a shipped scenario by name (``scenario1`` .. ``scenario4``)."""
    res = resources.files("rrtkit.scenarios").joinpath(f"{name}.json")
    if not res.is_file():
        raise ScenarioError(f"unknown builtin scenario {name!r}; available: {', '.join(builtin_scenario_names())}")
    return scenario_from_dict(json.loads(res.read_text()))
