from riskpref.features.measure.service import (
    MeasureService,
    are_comonotonic,
    cdf,
    coarsen,
    compound_lottery,
    expectation,
    first_order_dominates,
    from_quantile,
    law,
    mean,
    measure_service,
    mix,
    quantile_of,
    quantile_of_variable,
    signed_difference,
    variable_sum,
)

__all__ = [
    "MeasureService",
    "are_comonotonic",
    "cdf",
    "coarsen",
    "compound_lottery",
    "expectation",
    "first_order_dominates",
    "from_quantile",
    "law",
    "mean",
    "measure_service",
    "mix",
    "quantile_of",
    "quantile_of_variable",
    "signed_difference",
    "variable_sum",
]
