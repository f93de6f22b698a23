"""
Distortion (rank-dependent utility) functions on [0, 1].
"""

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from riskpref.core.exceptions import InputValidationError
from riskpref.core.numeric import Number, to_exact, to_exact_tuple


@dataclass(frozen=True, slots=True)
class DistortionFunction:
    """
    Continuous piecewise-linear nondecreasing w on [0, 1] with w(0) = 0.

    knots are 0 = q0 < q1 < ... < qm = 1 and values w(q0) = 0 <= w(q1) <= ...
    """

    knots: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def create(cls, knots: Iterable[Number], values: Iterable[Number]) -> "DistortionFunction":
        """
        Validate a knot/value table.

        Raises:
            InputValidationError: Naming the first violating index
        """
        k = to_exact_tuple(knots, "knots")
        v = to_exact_tuple(values, "values")
        if len(k) < 2:
            raise InputValidationError("distortion needs knots at 0 and 1")
        if len(k) != len(v):
            raise InputValidationError(f"knots has {len(k)} entries but values has {len(v)}")
        if k[0] != 0:
            raise InputValidationError("knots[0]: first knot must be 0", {"index": 0})
        if k[-1] != 1:
            raise InputValidationError(
                f"knots[{len(k) - 1}]: last knot must be 1", {"index": len(k) - 1}
            )
        for i in range(1, len(k)):
            if k[i] <= k[i - 1]:
                raise InputValidationError(
                    f"knots[{i}]: knots must be strictly increasing", {"index": i}
                )
        if v[0] != 0:
            raise InputValidationError("values[0]: w(0) must be 0", {"index": 0})
        for i in range(1, len(v)):
            if v[i] < v[i - 1]:
                raise InputValidationError(
                    f"values[{i}]: distortion values must be nondecreasing", {"index": i}
                )
        return cls(k, v)

    @classmethod
    def identity(cls) -> "DistortionFunction":
        return cls((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))

    @classmethod
    def tabulate(
        cls, f: Callable[[Fraction], Number], knots: Iterable[Number]
    ) -> "DistortionFunction":
        """Interpolate a function through the given knots, e.g. w(p) = p**2."""
        k = to_exact_tuple(knots, "knots")
        return cls.create(k, [to_exact(f(q), "f(q)") for q in k])

    @classmethod
    def lower_tail(cls, alpha: Number) -> "DistortionFunction":
        """
        w(p) = min(p / alpha, 1).

        Its dual utility is the average of the lowest alpha-fraction of
        outcomes (a lower-tail conditional expectation).
        """
        a = to_exact(alpha, "alpha")
        if not 0 < a <= 1:
            raise InputValidationError("alpha must lie in (0, 1]")
        if a == 1:
            return cls.identity()
        return cls((Fraction(0), a, Fraction(1)), (Fraction(0), Fraction(1), Fraction(1)))

    @classmethod
    def from_increments(
        cls, levels: Iterable[Fraction], increments: Iterable[Number]
    ) -> "DistortionFunction":
        """Accumulate nonnegative increments on the cells (p_{j-1}, p_j] into w."""
        lv = tuple(levels)
        inc = to_exact_tuple(increments, "increments")
        values = [Fraction(0)]
        for d in inc:
            values.append(values[-1] + d)
        return cls.create((Fraction(0),) + lv, values)

    def __call__(self, p: Number) -> Fraction:
        q = to_exact(p, "p")
        if not 0 <= q <= 1:
            raise InputValidationError(f"distortion argument {float(q)} outside [0, 1]")
        i = bisect_right(self.knots, q) - 1
        if i >= len(self.knots) - 1:
            return self.values[-1]
        slope = (self.values[i + 1] - self.values[i]) / (self.knots[i + 1] - self.knots[i])
        return self.values[i] + slope * (q - self.knots[i])

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (self.values[i + 1] - self.values[i]) / (self.knots[i + 1] - self.knots[i])
            for i in range(len(self.knots) - 1)
        )

    @property
    def total(self) -> Fraction:
        """w(1)."""
        return self.values[-1]

    @property
    def is_normalized(self) -> bool:
        return self.values[-1] == 1

    @property
    def is_concave(self) -> bool:
        s = self.slopes()
        return all(s[i + 1] <= s[i] for i in range(len(s) - 1))

    @property
    def dominates_identity(self) -> bool:
        """w(q) >= q at every knot, which suffices for piecewise-linear w."""
        return all(v >= q for q, v in zip(self.knots, self.values))

    def scale(self, a: Number) -> "DistortionFunction":
        """Order-preserving rescaling a*w, a > 0."""
        factor = to_exact(a, "a")
        if factor <= 0:
            raise InputValidationError("scale factor must be positive")
        return DistortionFunction(self.knots, tuple(factor * v for v in self.values))

    def normalized(self) -> "DistortionFunction":
        """w / w(1)."""
        if self.total == 0:
            raise InputValidationError("cannot normalize a distortion with w(1) = 0")
        return self.scale(1 / self.total)

    @staticmethod
    def blend(
        lam: Number, first: "DistortionFunction", second: "DistortionFunction"
    ) -> "DistortionFunction":
        """Convex combination lam*w1 + (1 - lam)*w2 on the merged knot grid."""
        weight = to_exact(lam, "lam")
        if not 0 <= weight <= 1:
            raise InputValidationError("blend weight must lie in [0, 1]")
        grid = sorted(set(first.knots) | set(second.knots))
        return DistortionFunction(
            tuple(grid),
            tuple(weight * first(q) + (1 - weight) * second(q) for q in grid),
        )
