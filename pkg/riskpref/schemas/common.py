"""
Common/shared Pydantic schemas.
"""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, PlainValidator

from riskpref.core.exceptions import InputValidationError
from riskpref.core.numeric import to_exact


def _exact(value: Any) -> Fraction:
    if isinstance(value, (list, dict)) or value is None:
        raise ValueError("expected a number")
    try:
        return to_exact(value)
    except InputValidationError as exc:
        raise ValueError(exc.message) from None


# JSON numbers arrive as Decimal (parse_float=Decimal) and stay exact
ExactNumber = Annotated[Fraction, PlainValidator(_exact)]


class BaseSchema(BaseModel):
    """
    Base schema with common configuration.

    All wire schemas inherit from this. Unknown keys are rejected so that a
    misspelled field is reported instead of silently ignored.
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        arbitrary_types_allowed=True,
        populate_by_name=True,
    )


class ErrorDetail(BaseModel):
    """Error detail structure."""

    field: str | None = None
    message: str
    type: str | None = None


class ErrorResponse(BaseModel):
    """Diagnostic written to standard error on a failed run."""

    error: str
    source: str | None = None
    details: list[ErrorDetail] = []
