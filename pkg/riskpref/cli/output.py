"""
Canonical report rendering.

JSON has sorted keys and numbers in canonical form (see
`riskpref.core.numeric.format_number`), so identical runs give
byte-identical output. CSV flattens the report into one header row and
one value row with dotted keys.
"""

import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from riskpref.core.numeric import format_number


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return _plain(value.model_dump(mode="python"))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float, Fraction)):
        return format_number(value if not isinstance(value, int) else Fraction(value))
    return json.dumps(str(value), ensure_ascii=False)


def _render(value: Any) -> str:
    if isinstance(value, dict):
        items = (f"{json.dumps(k)}:{_render(value[k])}" for k in sorted(value))
        return "{" + ",".join(items) + "}"
    if isinstance(value, list):
        return "[" + ",".join(_render(v) for v in value) + "]"
    return _scalar(value)


def to_json(report: Any) -> str:
    """Canonical JSON text of a report, newline-terminated."""
    return _render(_plain(report)) + "\n"


def _flatten(value: Any, prefix: str, out: dict[str, str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(value[key], f"{prefix}.{key}" if prefix else key, out)
    elif isinstance(value, list):
        if not value:
            out[prefix] = ""
        for i, item in enumerate(value):
            _flatten(item, f"{prefix}.{i}", out)
    elif value is None:
        out[prefix] = ""
    elif isinstance(value, str):
        out[prefix] = value
    else:
        out[prefix] = _scalar(value)


def to_csv(report: Any) -> str:
    """Single-record CSV with dotted column names."""
    flat: dict[str, str] = {}
    _flatten(_plain(report), "", flat)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(flat.keys())
    writer.writerow(flat.values())
    return buffer.getvalue()


def render(report: Any, fmt: str) -> str:
    return to_csv(report) if fmt == "csv" else to_json(report)
