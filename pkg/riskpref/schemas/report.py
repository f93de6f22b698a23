"""
Report schemas written by the command-line surface.
"""

from typing import Any

from pydantic import Field

from riskpref.schemas.common import BaseSchema, ExactNumber
from riskpref.schemas.quantile import QuantileSchema
from riskpref.schemas.utility import DistortionSchema, UtilitySchema


class ValueReport(BaseSchema):
    """Single evaluated value."""

    command: str
    value: ExactNumber


class CheckReport(BaseSchema):
    """Boolean property check."""

    command: str
    result: bool


class AuditReport(BaseSchema):
    """
    Outcome of a seeded property suite.

    `violations` holds at most `max_reported_violations` failing instances
    in trial order; `failures` counts all of them.
    """

    suite: str
    seed: int
    trials: int
    tolerance: float
    max_residual: ExactNumber
    failures: int
    violations: list[dict[str, Any]]
    cases: dict[str, int] = Field(default_factory=dict)
    passed: bool


class ElicitationReport(BaseSchema):
    """Elicitation answer; `witness` is absent when infeasible."""

    mode: str
    feasible: bool
    phase_one_value: float
    grid_size: int
    witness: UtilitySchema | DistortionSchema | None = None
    signed_feasible: bool | None = None
    reproduces: bool | None = None


class CounterexampleReport(BaseSchema):
    """Four-point prospect preferred to its own coarsening."""

    found: bool
    p1: ExactNumber | None = None
    p2: ExactNumber | None = None
    p3: ExactNumber | None = None
    quantile: QuantileSchema | None = None
    betas: list[ExactNumber] | None = None
    violation: ExactNumber | None = None

