"""
Exact number handling.

Every finite float is a dyadic rational, so inputs are converted to
fractions.Fraction without loss and all kernel arithmetic is exact.
"""

import math
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, TypeAlias

from riskpref.core.exceptions import InputValidationError

Number: TypeAlias = int | float | str | Decimal | Fraction

MAX_SIGNIFICANT_DIGITS = 17


def to_exact(value: Number, field: str = "value") -> Fraction:
    """
    Convert a number or numeric string to an exact Fraction.

    Raises:
        InputValidationError: For booleans, non-numeric strings, NaN or infinity
    """
    if isinstance(value, bool):
        raise InputValidationError(f"{field}: boolean is not a number", {"field": field})
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputValidationError(f"{field}: non-finite number {value}", {"field": field})
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise InputValidationError(f"{field}: non-finite number {value}", {"field": field})
        return Fraction(value)
    if isinstance(value, str):
        try:
            return to_exact(Decimal(value.strip()), field)
        except ArithmeticError:
            pass
        try:
            return Fraction(value.strip())
        except ValueError:
            raise InputValidationError(
                f"{field}: not a number: {value!r}", {"field": field}
            ) from None
    raise InputValidationError(
        f"{field}: unsupported number type {type(value).__name__}", {"field": field}
    )


def to_exact_tuple(values: Iterable[Number], field: str) -> tuple[Fraction, ...]:
    """Convert a sequence of numbers, naming the offending index on failure."""
    return tuple(to_exact(v, f"{field}[{i}]") for i, v in enumerate(values))


def format_number(x: Fraction | float | int) -> str:
    """
    Canonical textual form of a number.

    The exact value is rounded half-even to 17 significant digits and
    trailing zeros are dropped. Plain notation is used for decimal
    exponents in [-7, 21), scientific notation otherwise.

    Raises:
        InputValidationError: For NaN or infinity
    """
    if isinstance(x, float) and not math.isfinite(x):
        raise InputValidationError(f"cannot format non-finite number {x}")
    exact = Fraction(x)
    if exact == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = MAX_SIGNIFICANT_DIGITS
        ctx.rounding = ROUND_HALF_EVEN
        d = (Decimal(exact.numerator) / Decimal(exact.denominator)).normalize()
    if -7 <= d.adjusted() < 21:
        return format(d, "f")
    return format(d, "e")
