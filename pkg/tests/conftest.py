"""
Pytest fixtures for all tests.

Provides:
- Logging configured once per session
- Hypothesis profiles (select with HYPOTHESIS_PROFILE)
- Common prospects, utilities and distortions
- A helper that writes JSON input files for command-line tests
"""

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

import pytest
from hypothesis import settings

from riskpref.core.context import clear_run_context
from riskpref.core.logging_config import setup_logging
from riskpref.models import DiscreteMeasure, DistortionFunction, StepQuantile, UtilityFunction
from tests.factories import DatasetFactory, DistortionFactory, MeasureFactory

# exact arithmetic on wide supports has no useful per-example deadline
settings.register_profile("standard", deadline=None)
settings.register_profile("thorough", deadline=None, max_examples=1000)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "standard"))


@pytest.fixture(scope="session", autouse=True)
def configure_logging():
    """Quiet structured logging for the whole session."""
    setup_logging("WARNING", "console")


@pytest.fixture
def clean_run_context():
    """Start and end a test without command/suite/seed context."""
    clear_run_context()
    yield
    clear_run_context()


@pytest.fixture
def coin() -> DiscreteMeasure:
    """Fair coin on {0, 1}."""
    return MeasureFactory.create()


@pytest.fixture
def skewed() -> DiscreteMeasure:
    """Masses 1/4, 1/2, 1/4 on -1, 0, 2."""
    return MeasureFactory.create(points=[-1, 0, 2], masses=["0.25", "0.5", "0.25"])


@pytest.fixture
def identity_u() -> UtilityFunction:
    return UtilityFunction.identity()


@pytest.fixture
def sqrt_like_u() -> UtilityFunction:
    """Concave piecewise-linear utility with slopes 2, 1, 1/2."""
    return UtilityFunction.piecewise_linear([0, 1, 2, 4], [0, 2, 3, 4])


@pytest.fixture
def concave_w() -> DistortionFunction:
    """w(p) = min(2p, (p + 1)/2) sampled on {0, 1/3, 1}."""
    return DistortionFactory.create()


@pytest.fixture
def convex_w() -> DistortionFunction:
    """w(p) = p^2 interpolated on quarters."""
    return DistortionFunction.tabulate(lambda p: p * p, [0, "0.25", "0.5", "0.75", 1])


@pytest.fixture
def two_point_phi() -> StepQuantile:
    """Mass 0.3 at 0 and 0.7 at 1."""
    return StepQuantile.create(["0.3", 1], [0, 1])


@pytest.fixture
def cyclic_dataset():
    return DatasetFactory.cyclic_eu()


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """
    Write a JSON document under tmp_path and return its path.

    Usage:
        path = write_json("w.json", {"knots": [0, 1], "values": [0, 1]})
    """

    def _write(name: str, payload: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload, default=_encode), encoding="utf-8")
        return str(path)

    return _write


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"cannot encode {type(value).__name__}")
