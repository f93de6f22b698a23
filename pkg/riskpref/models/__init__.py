"""
Immutable domain types.
"""

from riskpref.models.distortion import DistortionFunction
from riskpref.models.measure import (
    Atom,
    DiscreteMeasure,
    FiniteRandomVariable,
    IntervalPartition,
    MeasureKind,
    OutcomePoint,
)
from riskpref.models.preference import (
    Comparison,
    ElicitationMode,
    PreferenceDataset,
    Relation,
)
from riskpref.models.quantile import StepQuantile
from riskpref.models.utility import UtilityFunction, UtilityKind

__all__ = [
    "Atom",
    "Comparison",
    "DiscreteMeasure",
    "DistortionFunction",
    "ElicitationMode",
    "FiniteRandomVariable",
    "IntervalPartition",
    "MeasureKind",
    "OutcomePoint",
    "PreferenceDataset",
    "Relation",
    "StepQuantile",
    "UtilityFunction",
    "UtilityKind",
]
