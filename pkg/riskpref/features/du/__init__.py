from riskpref.features.du.service import (
    ConcavityCounterexample,
    DualRiskAversionResult,
    DualService,
    anticipated_utility,
    choquet_evaluate,
    comonotonic_additivity_residual,
    concavity_counterexample,
    dual_risk_aversion_check,
    dual_service,
    four_point_prospect,
    mean_preference_check,
    prefers_mean,
    rdu_evaluate,
    rdu_of_variable,
    two_point_prospect,
)

__all__ = [
    "ConcavityCounterexample",
    "DualRiskAversionResult",
    "DualService",
    "anticipated_utility",
    "choquet_evaluate",
    "comonotonic_additivity_residual",
    "concavity_counterexample",
    "dual_risk_aversion_check",
    "dual_service",
    "four_point_prospect",
    "mean_preference_check",
    "prefers_mean",
    "rdu_evaluate",
    "rdu_of_variable",
    "two_point_prospect",
]
