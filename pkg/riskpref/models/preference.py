"""
Preference datasets: observed comparisons between prospects.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from riskpref.core.exceptions import MalformedDatasetError
from riskpref.models.measure import DiscreteMeasure
from riskpref.models.quantile import StepQuantile


class ElicitationMode(str, Enum):
    EU = "eu"
    DUAL = "dual"


class Relation(str, Enum):
    """Strict preference or indifference."""

    SUCC = "succ"
    SIM = "sim"


@dataclass(frozen=True, slots=True)
class Comparison:
    """Prospect `left` relates to prospect `right` by `relation`."""

    left: int
    relation: Relation
    right: int


@dataclass(frozen=True, slots=True)
class PreferenceDataset:
    """
    Finite list of comparisons between prospects.

    Mode eu holds probability measures of a common dimension; mode dual
    holds step quantile functions.
    """

    mode: ElicitationMode
    prospects: tuple[DiscreteMeasure, ...] | tuple[StepQuantile, ...]
    comparisons: tuple[Comparison, ...]

    @classmethod
    def create(
        cls,
        mode: ElicitationMode | str,
        prospects: Iterable[DiscreteMeasure | StepQuantile],
        comparisons: Iterable[Comparison | tuple[int, str, int]],
    ) -> "PreferenceDataset":
        """
        Validate prospects and comparisons against the mode.

        Raises:
            MalformedDatasetError: Wrong prospect type, mixed dimensions,
                signed measures or out-of-range indices
        """
        mode = ElicitationMode(mode)
        items = tuple(prospects)
        if not items:
            raise MalformedDatasetError("dataset has no prospects")

        expected = DiscreteMeasure if mode is ElicitationMode.EU else StepQuantile
        for i, item in enumerate(items):
            if not isinstance(item, expected):
                raise MalformedDatasetError(
                    f"prospects[{i}]: mode {mode.value} expects {expected.__name__}",
                    {"index": i},
                )
        if mode is ElicitationMode.EU:
            dim = items[0].dim
            for i, item in enumerate(items):
                if not item.is_probability:
                    raise MalformedDatasetError(
                        f"prospects[{i}]: prospects must be probability measures",
                        {"index": i},
                    )
                if item.dim != dim:
                    raise MalformedDatasetError(
                        f"prospects[{i}]: dimension {item.dim} differs from {dim}",
                        {"index": i},
                    )

        checked: list[Comparison] = []
        for k, raw in enumerate(comparisons):
            comp = raw if isinstance(raw, Comparison) else _comparison_from_tuple(raw, k)
            for index in (comp.left, comp.right):
                if not 0 <= index < len(items):
                    raise MalformedDatasetError(
                        f"comparisons[{k}]: prospect index {index} out of range",
                        {"index": k},
                    )
            checked.append(comp)
        return cls(mode, items, tuple(checked))


def _comparison_from_tuple(raw: tuple[int, str, int], k: int) -> Comparison:
    try:
        left, relation, right = raw
        return Comparison(int(left), Relation(relation), int(right))
    except (TypeError, ValueError):
        raise MalformedDatasetError(
            f"comparisons[{k}]: expected [i, 'succ'|'sim', j]", {"index": k}
        ) from None
