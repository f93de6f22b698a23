"""
Step quantile functions on (0, 1].
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from riskpref.core.exceptions import InputValidationError
from riskpref.core.numeric import Number, to_exact, to_exact_tuple


@dataclass(frozen=True, slots=True)
class StepQuantile:
    """
    Nondecreasing left-continuous step function on (0, 1].

    `levels` are p1 < ... < pn = 1 (the leading 0 is implicit) and the
    function equals values[i] on (p_{i-1}, p_i]. Canonical form has no two
    consecutive equal values; `create` merges such segments.
    """

    levels: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def create(cls, levels: Iterable[Number], values: Iterable[Number]) -> "StepQuantile":
        """
        Validate and canonicalize a level/value table.

        Raises:
            InputValidationError: Naming the first violating index
        """
        lv = to_exact_tuple(levels, "levels")
        vv = to_exact_tuple(values, "values")
        if not lv:
            raise InputValidationError("quantile needs at least one segment")
        if len(lv) != len(vv):
            raise InputValidationError(
                f"levels has {len(lv)} entries but values has {len(vv)}"
            )
        if lv[0] <= 0:
            raise InputValidationError("levels[0]: first level must exceed 0", {"index": 0})
        for i in range(1, len(lv)):
            if lv[i] <= lv[i - 1]:
                raise InputValidationError(
                    f"levels[{i}]: levels must be strictly increasing", {"index": i}
                )
        if lv[-1] != 1:
            raise InputValidationError(
                f"levels[{len(lv) - 1}]: last level must equal 1", {"index": len(lv) - 1}
            )
        for i in range(1, len(vv)):
            if vv[i] < vv[i - 1]:
                raise InputValidationError(
                    f"values[{i}]: quantile values must be nondecreasing", {"index": i}
                )
        return cls.canonical(lv, vv)

    @classmethod
    def canonical(
        cls, levels: Iterable[Fraction], values: Iterable[Fraction]
    ) -> "StepQuantile":
        # a segment is absorbed into its right neighbour when their values agree
        out_levels: list[Fraction] = []
        out_values: list[Fraction] = []
        for p, z in zip(levels, values):
            if out_values and out_values[-1] == z:
                out_levels[-1] = p
            else:
                out_levels.append(p)
                out_values.append(z)
        return cls(tuple(out_levels), tuple(out_values))

    @classmethod
    def constant(cls, c: Number) -> "StepQuantile":
        """The constant quantile function c on (0, 1]."""
        return cls((Fraction(1),), (to_exact(c, "c"),))

    def segments(self) -> Iterable[tuple[Fraction, Fraction, Fraction]]:
        """Yield (left level, right level, value) for every segment."""
        left = Fraction(0)
        for p, z in zip(self.levels, self.values):
            yield left, p, z
            left = p

    def is_constant(self) -> bool:
        return len(self.values) == 1
