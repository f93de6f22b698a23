from riskpref.features.elicit.lp import LPOutcome, LPProblem, LPStatus, lp_solve
from riskpref.features.elicit.service import (
    ElicitationResult,
    ElicitationService,
    elicit_dual,
    elicit_eu,
    elicitation_service,
)

__all__ = [
    "ElicitationResult",
    "ElicitationService",
    "LPOutcome",
    "LPProblem",
    "LPStatus",
    "elicit_dual",
    "elicit_eu",
    "elicitation_service",
    "lp_solve",
]
