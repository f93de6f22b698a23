"""
Utility functions for expected utility evaluation.
"""

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from riskpref.core.exceptions import EvaluationDomainError, InputValidationError
from riskpref.core.numeric import Number, to_exact, to_exact_tuple
from riskpref.models.measure import OutcomePoint, as_point


class UtilityKind(str, Enum):
    """Representation of a utility function."""

    PWL = "pwl"
    TABLE = "table"


def _dominates(p: OutcomePoint, q: OutcomePoint) -> bool:
    return all(a >= b for a, b in zip(p, q))


@dataclass(frozen=True, slots=True)
class UtilityFunction:
    """
    Utility u on outcomes.

    PWL: knots x1 < ... < xm with values, linear in between and linearly
    extrapolated with the end slopes (a single knot means a constant).
    TABLE: explicit values on a finite set of outcome points of any dimension.
    """

    kind: UtilityKind
    knots: tuple[OutcomePoint, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def piecewise_linear(
        cls, knots: Iterable[Number], values: Iterable[Number]
    ) -> "UtilityFunction":
        """
        Build a piecewise-linear utility on the real line.

        Raises:
            InputValidationError: Empty, length mismatch or non-increasing knots
        """
        k = to_exact_tuple(knots, "knots")
        v = to_exact_tuple(values, "values")
        if not k:
            raise InputValidationError("utility needs at least one knot")
        if len(k) != len(v):
            raise InputValidationError(f"knots has {len(k)} entries but values has {len(v)}")
        for i in range(1, len(k)):
            if k[i] <= k[i - 1]:
                raise InputValidationError(
                    f"knots[{i}]: knots must be strictly increasing", {"index": i}
                )
        return cls(UtilityKind.PWL, tuple((x,) for x in k), v)

    @classmethod
    def table(
        cls, points: Iterable[Number | Sequence[Number]], values: Iterable[Number]
    ) -> "UtilityFunction":
        """
        Build a tabulated utility on a finite outcome set.

        Raises:
            InputValidationError: Empty, length mismatch, duplicate points or
                mixed dimensions
        """
        pts = [as_point(p, f"points[{i}]") for i, p in enumerate(points)]
        v = to_exact_tuple(values, "values")
        if not pts:
            raise InputValidationError("utility table needs at least one point")
        if len(pts) != len(v):
            raise InputValidationError(f"points has {len(pts)} entries but values has {len(v)}")
        dim = len(pts[0])
        seen: set[OutcomePoint] = set()
        for i, p in enumerate(pts):
            if len(p) != dim:
                raise InputValidationError(
                    f"points[{i}]: dimension {len(p)} differs from {dim}", {"index": i}
                )
            if p in seen:
                raise InputValidationError(f"points[{i}]: duplicate point", {"index": i})
            seen.add(p)
        ordered = sorted(zip(pts, v))
        return cls(
            UtilityKind.TABLE,
            tuple(p for p, _ in ordered),
            tuple(x for _, x in ordered),
        )

    @classmethod
    def identity(cls) -> "UtilityFunction":
        return cls.piecewise_linear([0, 1], [0, 1])

    @classmethod
    def constant(cls, c: Number) -> "UtilityFunction":
        return cls.piecewise_linear([0], [c])

    @property
    def dim(self) -> int:
        return len(self.knots[0])

    @property
    def scalar_knots(self) -> tuple[Fraction, ...]:
        return tuple(k[0] for k in self.knots)

    def __call__(self, point: Number | Sequence[Number]) -> Fraction:
        """
        Evaluate u at an outcome point.

        Raises:
            EvaluationDomainError: Point outside a table, or wrong dimension
        """
        p = as_point(point)
        if self.kind is UtilityKind.TABLE:
            index = self._table_index(p)
            if index is None:
                raise EvaluationDomainError(
                    "tabulated utility is not defined at the outcome point",
                    {"point": [float(c) for c in p]},
                )
            return self.values[index]
        if len(p) != 1:
            raise EvaluationDomainError(
                f"piecewise-linear utility is one-dimensional, got d={len(p)}"
            )
        return self._interpolate(p[0])

    def _table_index(self, p: OutcomePoint) -> int | None:
        i = bisect_right(self.knots, p) - 1
        if i >= 0 and self.knots[i] == p:
            return i
        return None

    def _interpolate(self, x: Fraction) -> Fraction:
        xs = self.scalar_knots
        if len(xs) == 1:
            return self.values[0]
        i = bisect_right(xs, x) - 1
        i = min(max(i, 0), len(xs) - 2)
        slope = (self.values[i + 1] - self.values[i]) / (xs[i + 1] - xs[i])
        return self.values[i] + slope * (x - xs[i])

    def slopes(self) -> tuple[Fraction, ...]:
        """Segment slopes of a one-dimensional utility."""
        if self.dim != 1:
            return ()
        xs = self.scalar_knots
        return tuple(
            (self.values[i + 1] - self.values[i]) / (xs[i + 1] - xs[i])
            for i in range(len(xs) - 1)
        )

    @property
    def is_nondecreasing(self) -> bool:
        """Exact monotonicity: slopes (d=1) or componentwise order on the table."""
        if self.dim == 1:
            return all(s >= 0 for s in self.slopes())
        return all(
            self.values[i] >= self.values[j]
            for i, p in enumerate(self.knots)
            for j, q in enumerate(self.knots)
            if i != j and _dominates(p, q)
        )

    @property
    def is_concave(self) -> bool:
        """Exact concavity (nonincreasing slopes); tables with d > 1 are never certified."""
        if self.dim != 1:
            return False
        s = self.slopes()
        return all(s[i + 1] <= s[i] for i in range(len(s) - 1))

    def as_piecewise_linear(self) -> "UtilityFunction":
        """Linear interpolation of a one-dimensional table."""
        if self.kind is UtilityKind.PWL:
            return self
        if self.dim != 1:
            raise EvaluationDomainError("only one-dimensional tables interpolate")
        return UtilityFunction(UtilityKind.PWL, self.knots, self.values)

    def affine(self, a: Number, b: Number = 0) -> "UtilityFunction":
        """Order-preserving transform a*u + b, a > 0."""
        scale = to_exact(a, "a")
        shift = to_exact(b, "b")
        if scale <= 0:
            raise InputValidationError("affine transform needs a > 0")
        return UtilityFunction(self.kind, self.knots, tuple(scale * v + shift for v in self.values))
