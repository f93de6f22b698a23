"""
Wire schemas for measures, partitions and random variables.
"""

from pydantic import Field

from riskpref.models.measure import (
    DiscreteMeasure,
    FiniteRandomVariable,
    IntervalPartition,
    MeasureKind,
)
from riskpref.schemas.common import BaseSchema, ExactNumber


class AtomSchema(BaseSchema):
    """A support point (scalar or coordinate list) and its mass."""

    point: ExactNumber | list[ExactNumber] = Field(..., union_mode="left_to_right")
    mass: ExactNumber


class MeasureSchema(BaseSchema):
    """
    Finite-support measure.

    Example:
        {"atoms": [{"point": 0, "mass": 0.25}, {"point": 1, "mass": 0.75}]}
    """

    atoms: list[AtomSchema] = Field(..., min_length=1)
    kind: MeasureKind = MeasureKind.PROBABILITY

    def to_model(self) -> DiscreteMeasure:
        return DiscreteMeasure.from_atoms(
            ((atom.point, atom.mass) for atom in self.atoms), self.kind
        )

    @classmethod
    def from_model(cls, mu: DiscreteMeasure) -> "MeasureSchema":
        atoms = [
            AtomSchema(point=a.point[0] if mu.dim == 1 else list(a.point), mass=a.mass)
            for a in mu.atoms
        ]
        return cls(atoms=atoms, kind=mu.kind)


class PartitionSchema(BaseSchema):
    """Interval partition given by its cut points."""

    cuts: list[ExactNumber] = []

    def to_model(self) -> IntervalPartition:
        return IntervalPartition.from_cuts(self.cuts)


class RandomVariableSchema(BaseSchema):
    """Random variable as sample-point weights and values."""

    weights: list[ExactNumber] = Field(..., min_length=1)
    values: list[ExactNumber] = Field(..., min_length=1)

    def to_model(self) -> FiniteRandomVariable:
        return FiniteRandomVariable.create(self.weights, self.values)

    @classmethod
    def from_model(cls, z: FiniteRandomVariable) -> "RandomVariableSchema":
        return cls(weights=list(z.weights), values=list(z.values))


class RandomVariableSetSchema(BaseSchema):
    """Several random variables on one sample space."""

    variables: list[RandomVariableSchema] = Field(..., min_length=1)

    def to_model(self) -> list[FiniteRandomVariable]:
        return [v.to_model() for v in self.variables]
