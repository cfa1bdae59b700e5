"""Shared fixtures: small scenarios used across the unit suites."""

from __future__ import annotations

import pytest

from rrtkit import Scenario, scenario_from_dict


def build_scenario(
    obstacles: list[list[float]],
    start: tuple[float, float] = (120.0, 250.0),
    goal: tuple[float, float] = (380.0, 250.0),
    bounds: tuple[float, float, float, float] = (0.0, 0.0, 500.0, 500.0),
    name: str = "test",
    threshold: float | None = None,
) -> Scenario:
    doc = {
        "name": name,
        "bounds": list(bounds),
        "obstacles": obstacles,
        "start": list(start),
        "goal": list(goal),
    }
    if threshold is not None:
        doc["short_path_threshold"] = threshold
    return scenario_from_dict(doc)


@pytest.fixture
def empty_scenario() -> Scenario:
    """500x500 world with no obstacles."""
    return build_scenario([])


@pytest.fixture
def wall_scenario() -> Scenario:
    """A vertical wall with a 16-unit slot off the start-goal axis."""
    return build_scenario(
        [[240, 0, 270, 330], [240, 346, 270, 500]],
        name="wall",
    )


@pytest.fixture
def corridor_scenario() -> Scenario:
    """Two large blocks forming a width-4 vertical corridor at x in [248, 252]."""
    return build_scenario(
        [[0, 100, 248, 400], [252, 100, 500, 400]],
        start=(250.0, 50.0),
        goal=(250.0, 450.0),
        name="corridor",
    )


@pytest.fixture
def sealed_goal_scenario() -> Scenario:
    """The goal sits in a pocket sealed on all four sides; unreachable."""
    return build_scenario(
        [
            [340, 210, 420, 230],
            [340, 270, 420, 290],
            [340, 230, 360, 270],
            [400, 230, 420, 270],
        ],
        goal=(380.0, 250.0),
    )
