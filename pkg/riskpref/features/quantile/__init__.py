from riskpref.features.quantile.service import (
    QuantileService,
    coarsen_quantile,
    comonotonic_combine,
    evaluate,
    integral,
    inverse,
    inverse_at,
    l1_distance,
    mean_quantile,
    merged_grid,
    quantile_service,
    sup_distance,
)

__all__ = [
    "QuantileService",
    "coarsen_quantile",
    "comonotonic_combine",
    "evaluate",
    "integral",
    "inverse",
    "inverse_at",
    "l1_distance",
    "mean_quantile",
    "merged_grid",
    "quantile_service",
    "sup_distance",
]
