"""
Expected utility evaluation and the risk-attitude property battery.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from riskpref.config import settings
from riskpref.core.exceptions import InputValidationError
from riskpref.core.logging_config import get_logger
from riskpref.core.numeric import Number, to_exact
from riskpref.features.measure.service import coarsen, expectation, law, mix
from riskpref.models.measure import (
    DiscreteMeasure,
    FiniteRandomVariable,
    IntervalPartition,
    as_point,
)
from riskpref.models.utility import UtilityFunction, UtilityKind

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class CoarseningCheck:
    """Utility of a coarsened prospect against the original."""

    cuts: tuple[Fraction, ...]
    coarse: Fraction
    fine: Fraction
    ok: bool


@dataclass(frozen=True, slots=True)
class RiskAversionReport:
    checks: tuple[CoarseningCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


class EUService:
    """Expected-utility evaluation and structural checks."""

    @staticmethod
    def eu_evaluate(u: UtilityFunction, mu: DiscreteMeasure) -> Fraction:
        """
        U(mu) = sum of u(z_i) * m_i.

        Raises:
            UnsupportedKindError: Signed measure
            EvaluationDomainError: Atom outside a tabulated utility
        """
        mu.require_probability()
        return sum((u(atom.point) * atom.mass for atom in mu.atoms), Fraction(0))

    @staticmethod
    def eu_of_variable(u: UtilityFunction, z: FiniteRandomVariable) -> Fraction:
        """Expected utility of a random variable through its law."""
        return EUService.eu_evaluate(u, law(z))

    @staticmethod
    def mixture_affinity_check(
        u: UtilityFunction, mu: DiscreteMeasure, nu: DiscreteMeasure, alpha: Number
    ) -> Fraction:
        """|U(alpha mu + (1-alpha) nu) - alpha U(mu) - (1-alpha) U(nu)|."""
        a = to_exact(alpha, "alpha")
        mixed = EUService.eu_evaluate(u, mix(a, mu, nu))
        expected = a * EUService.eu_evaluate(u, mu) + (1 - a) * EUService.eu_evaluate(u, nu)
        return abs(mixed - expected)

    @staticmethod
    def jensen_gap(u: UtilityFunction, mu: DiscreteMeasure) -> Fraction:
        """u(E mu) - U(mu); nonnegative for concave u."""
        return u(expectation(mu)) - EUService.eu_evaluate(u, mu)

    @staticmethod
    def risk_aversion_audit_eu(
        u: UtilityFunction,
        mu: DiscreteMeasure,
        partitions: Iterable[IntervalPartition],
        tolerance: float | None = None,
    ) -> RiskAversionReport:
        """
        Compare U(coarsen(mu, G)) with U(mu) for every partition G.

        The trivial partition (the point mass at the mean) is always checked
        first.
        """
        tol = to_exact(tolerance if tolerance is not None else settings.structural_tolerance)
        fine = EUService.eu_evaluate(u, mu)
        checks = []
        for part in [IntervalPartition(), *partitions]:
            coarse = EUService.eu_evaluate(u, coarsen(mu, part))
            checks.append(CoarseningCheck(part.cuts, coarse, fine, coarse >= fine - tol))
        report = RiskAversionReport(tuple(checks))
        if not report.passed:
            logger.info(
                "risk_aversion_violated",
                failing=sum(not c.ok for c in checks),
                partitions=len(checks),
            )
        return report

    @staticmethod
    def monotonicity_check_eu(
        u: UtilityFunction,
        pairs: Iterable[tuple[Number | Sequence[Number], Number | Sequence[Number]]],
    ) -> bool:
        """
        True iff u(z) >= u(v) for every supplied pair with z >= v.

        For a piecewise-linear utility the exact slope criterion is also
        required, so an empty pair list reduces to it.

        Raises:
            InputValidationError: A pair with z not >= v componentwise
        """
        ok = True
        for i, (raw_z, raw_v) in enumerate(pairs):
            z = as_point(raw_z, f"pairs[{i}].z")
            v = as_point(raw_v, f"pairs[{i}].v")
            if len(z) != len(v) or not all(a >= b for a, b in zip(z, v)):
                raise InputValidationError(
                    f"pairs[{i}]: first outcome does not dominate the second", {"index": i}
                )
            if u(z) < u(v):
                ok = False
        if u.kind is UtilityKind.PWL:
            ok = ok and u.is_nondecreasing
        return ok


# Singleton instance
eu_service = EUService()

eu_evaluate = eu_service.eu_evaluate
eu_of_variable = eu_service.eu_of_variable
mixture_affinity_check = eu_service.mixture_affinity_check
jensen_gap = eu_service.jensen_gap
risk_aversion_audit_eu = eu_service.risk_aversion_audit_eu
monotonicity_check_eu = eu_service.monotonicity_check_eu
