from riskpref.features.eu.service import (
    CoarseningCheck,
    EUService,
    RiskAversionReport,
    eu_evaluate,
    eu_of_variable,
    eu_service,
    jensen_gap,
    mixture_affinity_check,
    monotonicity_check_eu,
    risk_aversion_audit_eu,
)

__all__ = [
    "CoarseningCheck",
    "EUService",
    "RiskAversionReport",
    "eu_evaluate",
    "eu_of_variable",
    "eu_service",
    "jensen_gap",
    "mixture_affinity_check",
    "monotonicity_check_eu",
    "risk_aversion_audit_eu",
]
