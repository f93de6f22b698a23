"""
Prometheus metrics for batch runs.

Metrics collected:
- LP solves by outcome (counter)
- Simplex pivots by phase (counter)
- Elicitations by mode and outcome (counter)
- Audit trials by suite and outcome (counter)
- Operation duration (histogram)

Collectors live on a dedicated registry so that a CLI run can dump them to
a textfile-collector file without touching the process-global registry.
"""

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

from riskpref.config import settings

registry = CollectorRegistry()

lp_solves_total = Counter(
    "riskpref_lp_solves_total",
    "Total LP solves",
    ["outcome"],
    registry=registry,
)

lp_pivots_total = Counter(
    "riskpref_lp_pivots_total",
    "Total simplex pivots",
    ["phase"],
    registry=registry,
)

elicitations_total = Counter(
    "riskpref_elicitations_total",
    "Total elicitation runs",
    ["mode", "outcome"],
    registry=registry,
)

audit_trials_total = Counter(
    "riskpref_audit_trials_total",
    "Total audit trials",
    ["suite", "outcome"],
    registry=registry,
)

operation_duration_seconds = Histogram(
    "riskpref_operation_duration_seconds",
    "Operation duration in seconds",
    ["operation"],
    buckets=(0.001, 0.01, 0.1, 0.5, 1.0, 5.0, 30.0),
    registry=registry,
)


def write_metrics(path: str) -> None:
    """Write the registry in Prometheus text format, if metrics are enabled."""
    if settings.metrics_enabled:
        write_to_textfile(path, registry)
