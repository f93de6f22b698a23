"""
Wire schema for preference datasets.
"""

from pydantic import Field

from riskpref.models.preference import (
    Comparison,
    ElicitationMode,
    PreferenceDataset,
    Relation,
)
from riskpref.schemas.common import BaseSchema
from riskpref.schemas.measure import MeasureSchema
from riskpref.schemas.quantile import QuantileSchema


class PreferenceDatasetSchema(BaseSchema):
    """
    Prospects plus comparisons [i, "succ" | "sim", j].

    Mode eu expects measure prospects, mode dual quantile prospects.

    Example:
        {"mode": "eu",
         "prospects": [{"atoms": [{"point": 1, "mass": 1}]},
                       {"atoms": [{"point": 0, "mass": 1}]}],
         "comparisons": [[0, "succ", 1]]}
    """

    mode: ElicitationMode
    prospects: list[MeasureSchema | QuantileSchema] = Field(..., min_length=1)
    comparisons: list[tuple[int, Relation, int]] = []

    def to_model(self) -> PreferenceDataset:
        return PreferenceDataset.create(
            self.mode,
            [p.to_model() for p in self.prospects],
            [Comparison(i, rel, j) for i, rel, j in self.comparisons],
        )
