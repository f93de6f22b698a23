"""
Wire schema for step quantile functions.
"""

from pydantic import Field

from riskpref.models.quantile import StepQuantile
from riskpref.schemas.common import BaseSchema, ExactNumber


class QuantileSchema(BaseSchema):
    """
    Step quantile: values[i] on (levels[i-1], levels[i]], last level 1.

    Example:
        {"levels": [0.3, 1], "values": [0, 1]}
    """

    levels: list[ExactNumber] = Field(..., min_length=1)
    values: list[ExactNumber] = Field(..., min_length=1)

    def to_model(self) -> StepQuantile:
        return StepQuantile.create(self.levels, self.values)

    @classmethod
    def from_model(cls, phi: StepQuantile) -> "QuantileSchema":
        return cls(levels=list(phi.levels), values=list(phi.values))
