"""
Input loading: JSON files (or standard input for "-") through wire schemas.
"""

import json
import sys
from decimal import Decimal
from pathlib import Path
from typing import Any, TypeVar

from pydantic import ValidationError

from riskpref.core.exceptions import InputValidationError, RiskPrefException
from riskpref.core.logging_config import get_logger
from riskpref.schemas.common import BaseSchema

logger = get_logger(__name__)

SchemaT = TypeVar("SchemaT", bound=BaseSchema)


def _reject_constant(name: str) -> Any:
    raise ValueError(f"non-finite number {name}")


def read_json(path: str) -> Any:
    """
    Parse a JSON document with exact decimals.

    Raises:
        InputValidationError: Unreadable file or invalid JSON
    """
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputValidationError(
            f"{path}: cannot read file: {exc.strerror or exc}", {"file": path}
        ) from None
    try:
        return json.loads(text, parse_float=Decimal, parse_constant=_reject_constant)
    except ValueError as exc:
        raise InputValidationError(f"{path}: invalid JSON: {exc}", {"file": path}) from None


def _location(loc: tuple[Any, ...]) -> str:
    text = ""
    for part in loc:
        if isinstance(part, int):
            text += f"[{part}]"
        else:
            text += f".{part}" if text else str(part)
    return text or "<root>"


def load(path: str, schema: type[SchemaT]) -> Any:
    """
    Read, validate and convert one input file to its domain model.

    Diagnostics name the file and the offending field.

    Raises:
        InputValidationError: Any read, schema or domain validation failure
    """
    data = read_json(path)
    try:
        parsed = schema.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = _location(first["loc"])
        raise InputValidationError(
            f"{path}: {field}: {first['msg']}",
            {"file": path, "field": field, "errors": exc.error_count()},
        ) from None
    try:
        return parsed.to_model()
    except RiskPrefException as exc:
        raise type(exc)(f"{path}: {exc.message}", {"file": path, **exc.details}) from None
