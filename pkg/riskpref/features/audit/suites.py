"""
Seeded property suites.

Each trial draws its own generator from SeedSequence(seed).spawn(trials)
and receives its index, so trial i sees the same instance whatever the
trial count. A trial returns a residual (how far an identity or inequality
is from holding), a pass flag, the serialized instance for the report and
optionally the case it exercised.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from riskpref.config import settings
from riskpref.core.context import set_run_context
from riskpref.core.logging_config import get_logger
from riskpref.core.metrics import audit_trials_total
from riskpref.core.numeric import to_exact
from riskpref.core.performance import PerformanceMonitor
from riskpref.features.audit import generators as gen
from riskpref.features.du.service import (
    choquet_evaluate,
    comonotonic_additivity_residual,
    concavity_counterexample,
    dual_risk_aversion_check,
    mean_preference_check,
    prefers_mean,
    rdu_evaluate,
    two_point_prospect,
)
from riskpref.features.eu.service import (
    jensen_gap,
    mixture_affinity_check,
    risk_aversion_audit_eu,
)
from riskpref.features.measure.service import quantile_of
from riskpref.features.quantile.service import coarsen_quantile, mean_quantile
from riskpref.models.measure import DiscreteMeasure
from riskpref.models.quantile import StepQuantile
from riskpref.schemas.measure import MeasureSchema, PartitionSchema
from riskpref.schemas.quantile import QuantileSchema
from riskpref.schemas.utility import DistortionSchema, UtilitySchema

logger = get_logger(__name__)

EMPIRICAL_PROSPECTS = 100


class Suite(str, Enum):
    EU_AFFINITY = "eu-affinity"
    COMONO_ADD = "comono-add"
    RDU_CHOQUET = "rdu-choquet"
    RISK_AVERSION = "risk-aversion"
    MEAN_PREF = "mean-pref"


@dataclass(frozen=True, slots=True)
class TrialOutcome:
    residual: Fraction
    ok: bool
    instance: dict[str, Any]
    case: str | None = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    tolerance: float
    max_residual: Fraction = Fraction(0)
    failures: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    cases: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _dump(schema) -> dict[str, Any]:
    return schema.model_dump(mode="python")


def _eu_affinity(rng: np.random.Generator, tol: Fraction, trial: int) -> TrialOutcome:
    u = gen.random_pwl_utility(rng)
    mu = gen.random_measure(rng)
    nu = gen.random_measure(rng)
    alpha = gen.rational(rng, 0, 16, 16)
    residual = mixture_affinity_check(u, mu, nu, alpha)

    concave = gen.concave_utility(rng)
    jensen_shortfall = max(Fraction(0), -jensen_gap(concave, mu))
    residual = max(residual, jensen_shortfall)
    return TrialOutcome(
        residual,
        residual <= tol,
        {
            "u": _dump(UtilitySchema.from_model(u)),
            "concave_u": _dump(UtilitySchema.from_model(concave)),
            "mu": _dump(MeasureSchema.from_model(mu)),
            "nu": _dump(MeasureSchema.from_model(nu)),
            "alpha": alpha,
        },
    )


def _comono_add(rng: np.random.Generator, tol: Fraction, trial: int) -> TrialOutcome:
    w = gen.random_distortion(rng).scale(gen.rational(rng, 1, 8, 4))
    phi = gen.random_quantile(rng)
    psi = gen.random_quantile(rng)
    alpha = gen.rational(rng, 0, 16, 4)
    beta = gen.rational(rng, 0, 16, 4)
    c = gen.rational(rng, -40, 40, 4)
    residual = max(
        comonotonic_additivity_residual(w, phi, psi, alpha, beta),
        abs(rdu_evaluate(w, StepQuantile.constant(c)) - c * w.total),
    )
    return TrialOutcome(
        residual,
        residual <= tol,
        {
            "w": _dump(DistortionSchema.from_model(w)),
            "phi": _dump(QuantileSchema.from_model(phi)),
            "psi": _dump(QuantileSchema.from_model(psi)),
            "alpha": alpha,
            "beta": beta,
            "c": c,
        },
    )


def _rdu_choquet(rng: np.random.Generator, tol: Fraction, trial: int) -> TrialOutcome:
    w = gen.random_distortion(rng)
    mu = gen.random_measure(rng)
    p = gen.rational(rng, 1, gen.LEVEL_DENOMINATOR - 1, gen.LEVEL_DENOMINATOR)
    two_point = two_point_prospect(p)
    expected = 1 - w(p)
    residual = max(
        abs(rdu_evaluate(w, quantile_of(mu)) - choquet_evaluate(w, mu)),
        abs(rdu_evaluate(w, two_point) - expected),
        abs(choquet_evaluate(w, DiscreteMeasure.from_atoms([((0,), p), ((1,), 1 - p)])) - expected),
    )
    return TrialOutcome(
        residual,
        residual <= tol,
        {
            "w": _dump(DistortionSchema.from_model(w)),
            "mu": _dump(MeasureSchema.from_model(mu)),
            "p": p,
        },
    )


def _risk_aversion(rng: np.random.Generator, tol: Fraction, trial: int) -> TrialOutcome:
    w = gen.concave_distortion(rng)
    phi = gen.random_quantile(rng)
    betas = gen.random_betas(rng, phi)
    dual = dual_risk_aversion_check(w, phi, betas, float(tol))
    shortfall = max(Fraction(0), dual.u_fine - dual.u_coarse)

    u = gen.concave_utility(rng)
    mu = gen.random_measure(rng)
    part = gen.random_partition(rng)
    eu_report = risk_aversion_audit_eu(u, mu, [part], float(tol))
    for check in eu_report.checks:
        shortfall = max(shortfall, check.fine - check.coarse)

    v = gen.non_concave_distortion(rng)
    witness = concavity_counterexample(v)
    witness_ok = False
    if witness is not None:
        # re-evaluated from scratch rather than trusting the reported violation
        violation = rdu_evaluate(v, witness.phi) - rdu_evaluate(
            v, coarsen_quantile(witness.phi, witness.betas)
        )
        witness_ok = violation > to_exact(settings.grid_tolerance)

    kink_u, kink_mu = gen.convex_kink_utility(rng)
    kink_violated = not risk_aversion_audit_eu(kink_u, kink_mu, [], float(tol)).passed

    return TrialOutcome(
        shortfall,
        shortfall <= tol and witness_ok and kink_violated,
        {
            "w": _dump(DistortionSchema.from_model(w)),
            "phi": _dump(QuantileSchema.from_model(phi)),
            "betas": list(betas),
            "u": _dump(UtilitySchema.from_model(u)),
            "mu": _dump(MeasureSchema.from_model(mu)),
            "partition": _dump(PartitionSchema(cuts=list(part.cuts))),
            "non_concave_w": _dump(DistortionSchema.from_model(v)),
            "counterexample_found": witness_ok,
            "convex_kink_violated": kink_violated,
        },
    )


def _mean_pref(rng: np.random.Generator, tol: Fraction, trial: int) -> TrialOutcome:
    # even trials draw a distortion above the identity, odd ones one that crosses it
    dominating = trial % 2 == 0
    w = gen.dominating_distortion(rng) if dominating else gen.violating_distortion(rng)
    prospects = [gen.random_quantile(rng) for _ in range(EMPIRICAL_PROSPECTS)]
    prospects += [two_point_prospect(q) for q in w.knots[1:-1]]

    theory = mean_preference_check(w)
    empirical = all(prefers_mean(w, phi, float(tol)) for phi in prospects)
    shortfall = Fraction(0)
    if theory:
        shortfall = max(
            max(Fraction(0), rdu_evaluate(w, phi) - rdu_evaluate(w, mean_quantile(phi)))
            for phi in prospects
        )
    return TrialOutcome(
        shortfall,
        theory == empirical == dominating,
        {
            "w": _dump(DistortionSchema.from_model(w)),
            "dominates_identity": theory,
            "mean_preferred_empirically": empirical,
        },
        "dominating" if dominating else "violating",
    )


TrialFn = Callable[[np.random.Generator, Fraction, int], TrialOutcome]

SUITES: dict[Suite, tuple[TrialFn, str]] = {
    Suite.EU_AFFINITY: (_eu_affinity, "structural_tolerance"),
    Suite.COMONO_ADD: (_comono_add, "evaluator_tolerance"),
    Suite.RDU_CHOQUET: (_rdu_choquet, "evaluator_tolerance"),
    Suite.RISK_AVERSION: (_risk_aversion, "evaluator_tolerance"),
    Suite.MEAN_PREF: (_mean_pref, "evaluator_tolerance"),
}


class AuditService:
    """Runs a property suite over seeded random instances."""

    @staticmethod
    def default_tolerance(suite: Suite | str) -> float:
        _, setting = SUITES[Suite(suite)]
        return getattr(settings, setting)

    @staticmethod
    def run(
        suite: Suite | str,
        seed: int | None = None,
        trials: int | None = None,
        tolerance: float | None = None,
    ) -> SuiteReport:
        """
        Run `trials` independent trials of a suite.

        Args:
            suite: Suite name
            seed: Root seed (settings.default_seed when omitted)
            trials: Trial count (settings.default_trials when omitted)
            tolerance: Residual threshold (the suite default when omitted)

        Returns:
            SuiteReport with the first failing instances in trial order
        """
        suite = Suite(suite)
        seed = settings.default_seed if seed is None else seed
        trials = settings.default_trials if trials is None else trials
        tol = AuditService.default_tolerance(suite) if tolerance is None else tolerance
        trial_fn, _ = SUITES[suite]
        exact_tol = to_exact(tol, "tolerance")

        set_run_context(suite=suite.value, seed=seed)
        report = SuiteReport(suite.value, seed, trials, tol)
        with PerformanceMonitor("audit", suite=suite.value, trials=trials):
            for index, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
                outcome = trial_fn(np.random.default_rng(child), exact_tol, index)
                if outcome.case is not None:
                    report.cases[outcome.case] = report.cases.get(outcome.case, 0) + 1
                report.max_residual = max(report.max_residual, outcome.residual)
                audit_trials_total.labels(
                    suite=suite.value, outcome="passed" if outcome.ok else "failed"
                ).inc()
                if outcome.ok:
                    continue
                report.failures += 1
                logger.warning(
                    "audit_trial_failed",
                    trial=index,
                    residual=float(outcome.residual),
                )
                if len(report.violations) < settings.max_reported_violations:
                    report.violations.append(
                        {"trial": index, "residual": outcome.residual, **outcome.instance}
                    )
        logger.info(
            "audit_completed",
            failures=report.failures,
            max_residual=float(report.max_residual),
        )
        return report


# Singleton instance
audit_service = AuditService()
