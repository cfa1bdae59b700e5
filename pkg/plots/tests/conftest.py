from __future__ import annotations

from pathlib import Path

import pytest

from rrtplots.io import load_summaries

DATA = Path(__file__).parent / "data"
FIXTURE_LABELS = ("scenario1", "scenario2", "scenario4")


@pytest.fixture(scope="session")
def fixture_summaries() -> dict[str, dict]:
    """The three checked-in 100-trial campaign summaries."""
    return load_summaries((label, DATA / f"{label}.summary.json") for label in FIXTURE_LABELS)


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA
