"""
Wire schemas for utility and distortion functions.
"""

from pydantic import Field

from riskpref.models.distortion import DistortionFunction
from riskpref.models.utility import UtilityFunction, UtilityKind
from riskpref.schemas.common import BaseSchema, ExactNumber


class UtilitySchema(BaseSchema):
    """
    Piecewise-linear utility (scalar knots) or table (points of any dimension).

    Example:
        {"kind": "pwl", "knots": [0, 1, 2], "values": [0, 1, 1.5]}
    """

    kind: UtilityKind = UtilityKind.PWL
    knots: list[ExactNumber | list[ExactNumber]] = Field(..., min_length=1)
    values: list[ExactNumber] = Field(..., min_length=1)

    def to_model(self) -> UtilityFunction:
        if self.kind is UtilityKind.PWL:
            return UtilityFunction.piecewise_linear(
                [k[0] if isinstance(k, list) and len(k) == 1 else k for k in self.knots],
                self.values,
            )
        return UtilityFunction.table(self.knots, self.values)

    @classmethod
    def from_model(cls, u: UtilityFunction) -> "UtilitySchema":
        knots = [k[0] if u.dim == 1 else list(k) for k in u.knots]
        return cls(kind=u.kind, knots=knots, values=list(u.values))


class DistortionSchema(BaseSchema):
    """
    Piecewise-linear distortion with knots 0 = q0 < ... < qm = 1.

    Example:
        {"knots": [0, 0.5, 1], "values": [0, 0.75, 1]}
    """

    knots: list[ExactNumber] = Field(..., min_length=2)
    values: list[ExactNumber] = Field(..., min_length=2)

    def to_model(self) -> DistortionFunction:
        return DistortionFunction.create(self.knots, self.values)

    @classmethod
    def from_model(cls, w: DistortionFunction) -> "DistortionSchema":
        return cls(knots=list(w.knots), values=list(w.values))
