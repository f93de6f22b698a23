from riskpref.features.audit.suites import (
    AuditService,
    Suite,
    SuiteReport,
    TrialOutcome,
    audit_service,
)

__all__ = ["AuditService", "Suite", "SuiteReport", "TrialOutcome", "audit_service"]
