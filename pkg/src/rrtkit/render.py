"""SVG rendering of a planner run: obstacles, tree growth, endpoints, path.

The drawing is a standalone SVG document with a fixed vocabulary of classed
elements so tests and downstream tools can count them:

* ``rect.world``      - one white background rectangle
* ``rect.obstacle``   - one per obstacle, clipped to the world bounds
* ``line.tree-edge``  - one per tree edge (tree size - 1)
* ``polyline.path``   - the successful path, when present
* ``circle.start`` / ``circle.goal`` - the endpoints (start blue, goal orange)

World coordinates are y-up; SVG is y-down, so the vertical axis is flipped by
the affine world-to-pixel map. The canvas aspect ratio always equals the
world bounds aspect ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import quoteattr

from .planners import PlanOutcome
from .space import Scenario

__all__ = ["RenderSpec", "render_svg"]


@dataclass(frozen=True)
class RenderSpec:
    """Canvas size and style roles for render_svg."""

    width_px: float = 800.0
    background: str = "#ffffff"
    obstacle_color: str = "#000000"
    tree_edge_color: str = "#8a9ba8"
    tree_edge_width: float = 1.0
    path_color: str = "#d62728"
    path_width: float = 2.5
    start_color: str = "#1f77b4"
    goal_color: str = "#ff7f0e"
    endpoint_radius: float = 5.0

    def __post_init__(self) -> None:
        if self.width_px <= 0:
            raise ValueError(f"width_px must be positive, got {self.width_px!r}")


def _f(value: float) -> str:
    # Compact coordinate formatting; SVG tolerates trailing precision, tests don't need it.
    return f"{value:.2f}".rstrip("0").rstrip(".")


def render_svg(outcome: PlanOutcome, s: Scenario, spec: RenderSpec | None = None) -> str:
    """Render one plan outcome over its scenario as an SVG document string."""
    spec = spec or RenderSpec()
    b = s.bounds
    scale = spec.width_px / b.width
    height_px = b.height * scale

    def px(x: float) -> float:
        return (x - b.x_min) * scale

    def py(y: float) -> float:
        return height_px - (y - b.y_min) * scale

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(spec.width_px)}" '
        f'height="{_f(height_px)}" viewBox="0 0 {_f(spec.width_px)} {_f(height_px)}">'
    )
    parts.append(
        f'<rect class="world" x="0" y="0" width="{_f(spec.width_px)}" height="{_f(height_px)}" '
        f"fill={quoteattr(spec.background)}/>"
    )
    for obs in s.obstacles:
        # Clip to the world: obstacles may extend past the map edge.
        x0, x1 = max(obs.x_min, b.x_min), min(obs.x_max, b.x_max)
        y0, y1 = max(obs.y_min, b.y_min), min(obs.y_max, b.y_max)
        parts.append(
            f'<rect class="obstacle" x="{_f(px(x0))}" y="{_f(py(y1))}" '
            f'width="{_f((x1 - x0) * scale)}" height="{_f((y1 - y0) * scale)}" '
            f"fill={quoteattr(spec.obstacle_color)}/>"
        )
    tree = outcome.tree
    records = tree.as_records()
    for rec in records:
        if rec["parent"] is None:
            continue
        parent = records[rec["parent"]]
        parts.append(
            f'<line class="tree-edge" x1="{_f(px(parent["x"]))}" y1="{_f(py(parent["y"]))}" '
            f'x2="{_f(px(rec["x"]))}" y2="{_f(py(rec["y"]))}" '
            f"stroke={quoteattr(spec.tree_edge_color)} stroke-width=\"{_f(spec.tree_edge_width)}\"/>"
        )
    if outcome.path:
        points = " ".join(f"{_f(px(c.x))},{_f(py(c.y))}" for c in outcome.path)
        parts.append(
            f'<polyline class="path" points="{points}" fill="none" '
            f"stroke={quoteattr(spec.path_color)} stroke-width=\"{_f(spec.path_width)}\"/>"
        )
    for cls, cfg, color in (("start", s.start, spec.start_color), ("goal", s.goal, spec.goal_color)):
        parts.append(
            f'<circle class="{cls}" cx="{_f(px(cfg.x))}" cy="{_f(py(cfg.y))}" '
            f'r="{_f(spec.endpoint_radius)}" fill={quoteattr(color)}/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
