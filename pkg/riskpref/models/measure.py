"""
Finite-support measures, interval partitions and finite random variables.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, TypeAlias

from riskpref.config import settings
from riskpref.core.exceptions import InputValidationError, UnsupportedKindError
from riskpref.core.numeric import Number, to_exact, to_exact_tuple

OutcomePoint: TypeAlias = tuple[Fraction, ...]


class MeasureKind(str, Enum):
    """Kind of a discrete measure."""

    PROBABILITY = "probability"
    SIGNED = "signed"


def as_point(point: Number | Sequence[Number], field: str = "point") -> OutcomePoint:
    """Coerce a scalar or a coordinate sequence to an outcome point."""
    if isinstance(point, (list, tuple)):
        if not point:
            raise InputValidationError(f"{field}: empty outcome point")
        return to_exact_tuple(point, field)
    return (to_exact(point, field),)


@dataclass(frozen=True, slots=True)
class Atom:
    """A single support point and its mass."""

    point: OutcomePoint
    mass: Fraction


@dataclass(frozen=True, slots=True)
class DiscreteMeasure:
    """
    Finite-support measure in canonical form.

    Atoms have pairwise distinct points, nonzero masses and are sorted
    ascending (lexicographically when d > 1). Probability measures have
    positive masses summing to exactly 1. Build instances through
    `from_atoms`, which canonicalizes.
    """

    atoms: tuple[Atom, ...]
    kind: MeasureKind = MeasureKind.PROBABILITY

    @classmethod
    def from_atoms(
        cls,
        atoms: Iterable[tuple[Number | Sequence[Number], Number]],
        kind: MeasureKind | str = MeasureKind.PROBABILITY,
    ) -> "DiscreteMeasure":
        """
        Canonicalize (point, mass) pairs into a measure.

        Duplicate points are merged, zero masses dropped. A probability
        measure whose masses sum within `mass_sum_tolerance` of 1 is
        renormalized so that the sum is exactly 1.

        Raises:
            InputValidationError: Empty support, mixed dimensions, negative
                probability mass, or a mass sum far from 1
        """
        kind = MeasureKind(kind)
        merged: dict[OutcomePoint, Fraction] = defaultdict(Fraction)
        dim: int | None = None
        for i, (raw_point, raw_mass) in enumerate(atoms):
            point = as_point(raw_point, f"atoms[{i}].point")
            mass = to_exact(raw_mass, f"atoms[{i}].mass")
            if dim is None:
                dim = len(point)
            elif len(point) != dim:
                raise InputValidationError(
                    f"atoms[{i}].point: dimension {len(point)} differs from {dim}",
                    {"index": i},
                )
            if kind is MeasureKind.PROBABILITY and mass < 0:
                raise InputValidationError(
                    f"atoms[{i}].mass: negative probability mass {float(mass)}",
                    {"index": i},
                )
            merged[point] += mass

        cleaned = sorted((p, m) for p, m in merged.items() if m != 0)
        if not cleaned:
            raise InputValidationError("measure has no atom with nonzero mass")

        if kind is MeasureKind.PROBABILITY:
            total = sum((m for _, m in cleaned), Fraction(0))
            if abs(total - 1) > to_exact(settings.mass_sum_tolerance):
                raise InputValidationError(
                    f"probability masses sum to {float(total)}, not 1",
                    {"total": float(total)},
                )
            cleaned = [(p, m / total) for p, m in cleaned]

        return cls(tuple(Atom(p, m) for p, m in cleaned), kind)

    @classmethod
    def point_mass(cls, point: Number | Sequence[Number]) -> "DiscreteMeasure":
        """Dirac measure at `point`."""
        return cls.from_atoms([(point, 1)])

    @property
    def dim(self) -> int:
        return len(self.atoms[0].point)

    @property
    def is_probability(self) -> bool:
        return self.kind is MeasureKind.PROBABILITY

    @property
    def points(self) -> tuple[OutcomePoint, ...]:
        return tuple(a.point for a in self.atoms)

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(a.mass for a in self.atoms)

    def scalar_points(self) -> tuple[Fraction, ...]:
        """Atom points of a one-dimensional measure as scalars."""
        self.require_scalar()
        return tuple(a.point[0] for a in self.atoms)

    def require_probability(self) -> None:
        if not self.is_probability:
            raise UnsupportedKindError(
                "operation is defined for probability measures only",
                {"kind": self.kind.value},
            )

    def require_scalar(self) -> None:
        if self.dim != 1:
            raise UnsupportedKindError(
                f"operation is defined for one-dimensional measures only, got d={self.dim}",
                {"dim": self.dim},
            )


@dataclass(frozen=True, slots=True)
class IntervalPartition:
    """
    Partition of the real line by cut points c1 < ... < ck.

    Cells are (-inf, c1], (c1, c2], ..., (ck, inf).
    """

    cuts: tuple[Fraction, ...] = ()

    @classmethod
    def from_cuts(cls, cuts: Iterable[Number]) -> "IntervalPartition":
        values = to_exact_tuple(cuts, "cuts")
        for i in range(1, len(values)):
            if values[i] <= values[i - 1]:
                raise InputValidationError(
                    f"cuts[{i}]: cut points must be strictly increasing", {"index": i}
                )
        return cls(values)

    @property
    def cell_count(self) -> int:
        return len(self.cuts) + 1


@dataclass(frozen=True, slots=True)
class FiniteRandomVariable:
    """Real random variable on a finite sample space with positive weights."""

    weights: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def create(
        cls, weights: Iterable[Number], values: Iterable[Number]
    ) -> "FiniteRandomVariable":
        """
        Validate and normalize a weight/value table.

        Raises:
            InputValidationError: Length mismatch, empty table, nonpositive
                weight, or weights not summing to 1
        """
        w = to_exact_tuple(weights, "weights")
        v = to_exact_tuple(values, "values")
        if not w:
            raise InputValidationError("random variable needs at least one sample point")
        if len(w) != len(v):
            raise InputValidationError(
                f"weights has {len(w)} entries but values has {len(v)}"
            )
        for i, weight in enumerate(w):
            if weight <= 0:
                raise InputValidationError(
                    f"weights[{i}]: sample-point weights must be positive", {"index": i}
                )
        total = sum(w, Fraction(0))
        if abs(total - 1) > to_exact(settings.mass_sum_tolerance):
            raise InputValidationError(f"weights sum to {float(total)}, not 1")
        return cls(tuple(x / total for x in w), v)

    @property
    def size(self) -> int:
        return len(self.weights)
