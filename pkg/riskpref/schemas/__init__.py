"""
Pydantic wire schemas (JSON in/out) for the kernel's domain types.
"""

from riskpref.schemas.common import BaseSchema, ErrorDetail, ErrorResponse, ExactNumber
from riskpref.schemas.measure import (
    AtomSchema,
    MeasureSchema,
    PartitionSchema,
    RandomVariableSchema,
    RandomVariableSetSchema,
)
from riskpref.schemas.preference import PreferenceDatasetSchema
from riskpref.schemas.quantile import QuantileSchema
from riskpref.schemas.report import (
    AuditReport,
    CheckReport,
    CounterexampleReport,
    ElicitationReport,
    ValueReport,
)
from riskpref.schemas.utility import DistortionSchema, UtilitySchema

__all__ = [
    "AtomSchema",
    "AuditReport",
    "BaseSchema",
    "CheckReport",
    "CounterexampleReport",
    "DistortionSchema",
    "ElicitationReport",
    "ErrorDetail",
    "ErrorResponse",
    "ExactNumber",
    "MeasureSchema",
    "PartitionSchema",
    "PreferenceDatasetSchema",
    "QuantileSchema",
    "RandomVariableSchema",
    "RandomVariableSetSchema",
    "UtilitySchema",
    "ValueReport",
]
