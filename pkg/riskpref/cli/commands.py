"""
Command handlers.

Each handler loads and validates all of its inputs first, then computes,
and returns the report together with the process exit code.
"""

import argparse
from dataclasses import dataclass
from typing import Any, Callable

from riskpref.cli.loader import load
from riskpref.core.numeric import to_exact
from riskpref.features.audit.suites import audit_service
from riskpref.features.du.service import (
    anticipated_utility,
    choquet_evaluate,
    concavity_counterexample,
    rdu_evaluate,
)
from riskpref.features.elicit.service import ElicitationResult, elicitation_service
from riskpref.features.eu.service import eu_evaluate
from riskpref.features.measure.service import (
    are_comonotonic,
    coarsen,
    from_quantile,
    mix,
    quantile_of,
)
from riskpref.models.measure import IntervalPartition
from riskpref.models.utility import UtilityFunction
from riskpref.schemas.measure import MeasureSchema, RandomVariableSetSchema
from riskpref.schemas.preference import PreferenceDatasetSchema
from riskpref.schemas.quantile import QuantileSchema
from riskpref.schemas.report import (
    AuditReport,
    CheckReport,
    CounterexampleReport,
    ElicitationReport,
    ValueReport,
)
from riskpref.schemas.utility import DistortionSchema, UtilitySchema

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_AUDIT_FAILED = 2
EXIT_INFEASIBLE = 3


@dataclass(frozen=True, slots=True)
class CommandResult:
    report: Any
    exit_code: int = EXIT_OK


def parse_cuts(text: str) -> IntervalPartition:
    """Parse "c1,c2,..." (empty for the trivial partition)."""
    pieces = [p for p in text.split(",") if p.strip()]
    return IntervalPartition.from_cuts(to_exact(p, f"cuts[{i}]") for i, p in enumerate(pieces))


def eval_eu(args: argparse.Namespace) -> CommandResult:
    u = load(args.u, UtilitySchema)
    mu = load(args.measure, MeasureSchema)
    return CommandResult(ValueReport(command=args.command, value=eu_evaluate(u, mu)))


def eval_rdu(args: argparse.Namespace) -> CommandResult:
    w = load(args.w, DistortionSchema)
    phi = load(args.quantile, QuantileSchema)
    return CommandResult(ValueReport(command=args.command, value=rdu_evaluate(w, phi)))


def eval_choquet(args: argparse.Namespace) -> CommandResult:
    w = load(args.w, DistortionSchema)
    mu = load(args.measure, MeasureSchema)
    return CommandResult(ValueReport(command=args.command, value=choquet_evaluate(w, mu)))


def eval_au(args: argparse.Namespace) -> CommandResult:
    u = load(args.u, UtilitySchema)
    w = load(args.w, DistortionSchema)
    phi = load(args.quantile, QuantileSchema)
    return CommandResult(ValueReport(command=args.command, value=anticipated_utility(u, w, phi)))


def quantile(args: argparse.Namespace) -> CommandResult:
    mu = load(args.measure, MeasureSchema)
    return CommandResult(QuantileSchema.from_model(quantile_of(mu)))


def invert(args: argparse.Namespace) -> CommandResult:
    phi = load(args.quantile, QuantileSchema)
    return CommandResult(MeasureSchema.from_model(from_quantile(phi)))


def mix_command(args: argparse.Namespace) -> CommandResult:
    mu = load(args.measure, MeasureSchema)
    nu = load(args.other, MeasureSchema)
    return CommandResult(MeasureSchema.from_model(mix(to_exact(args.alpha, "alpha"), mu, nu)))


def coarsen_command(args: argparse.Namespace) -> CommandResult:
    mu = load(args.measure, MeasureSchema)
    part = parse_cuts(args.cuts)
    return CommandResult(MeasureSchema.from_model(coarsen(mu, part)))


def comono_check(args: argparse.Namespace) -> CommandResult:
    variables = load(args.variables, RandomVariableSetSchema)
    return CommandResult(CheckReport(command=args.command, result=are_comonotonic(variables)))


def audit(args: argparse.Namespace) -> CommandResult:
    report = audit_service.run(args.suite, args.seed, args.trials, args.tolerance)
    payload = AuditReport(
        suite=report.suite,
        seed=report.seed,
        trials=report.trials,
        tolerance=report.tolerance,
        max_residual=report.max_residual,
        failures=report.failures,
        violations=report.violations,
        cases=report.cases,
        passed=report.passed,
    )
    return CommandResult(payload, EXIT_OK if report.passed else EXIT_AUDIT_FAILED)


def _elicitation_report(
    data, result: ElicitationResult, tolerance: float | None
) -> CommandResult:
    witness = None
    reproduces = None
    if result.witness is not None:
        reproduces = elicitation_service.reproduces(data, result.witness, tolerance=tolerance)
        witness = (
            UtilitySchema.from_model(result.witness)
            if isinstance(result.witness, UtilityFunction)
            else DistortionSchema.from_model(result.witness)
        )
    payload = ElicitationReport(
        mode=result.mode.value,
        feasible=result.feasible,
        phase_one_value=result.phase_one_value,
        grid_size=result.grid_size,
        witness=witness,
        signed_feasible=result.signed_feasible,
        reproduces=reproduces,
    )
    return CommandResult(payload, EXIT_OK if result.feasible else EXIT_INFEASIBLE)


def elicit_eu(args: argparse.Namespace) -> CommandResult:
    data = load(args.data, PreferenceDatasetSchema)
    result = elicitation_service.run_eu_elicitation(data)
    return _elicitation_report(data, result, args.tolerance)


def elicit_dual(args: argparse.Namespace) -> CommandResult:
    data = load(args.data, PreferenceDatasetSchema)
    result = elicitation_service.run_dual_elicitation(data)
    return _elicitation_report(data, result, args.tolerance)


def counterexample(args: argparse.Namespace) -> CommandResult:
    w = load(args.w, DistortionSchema)
    found = concavity_counterexample(w, args.tolerance)
    if found is None:
        return CommandResult(CounterexampleReport(found=False))
    return CommandResult(
        CounterexampleReport(
            found=True,
            p1=found.p1,
            p2=found.p2,
            p3=found.p3,
            quantile=QuantileSchema.from_model(found.phi),
            betas=list(found.betas),
            violation=found.violation,
        )
    )


HANDLERS: dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "eval-eu": eval_eu,
    "eval-rdu": eval_rdu,
    "eval-choquet": eval_choquet,
    "eval-au": eval_au,
    "quantile": quantile,
    "invert": invert,
    "mix": mix_command,
    "coarsen": coarsen_command,
    "comono-check": comono_check,
    "audit": audit,
    "elicit-eu": elicit_eu,
    "elicit-dual": elicit_dual,
    "counterexample": counterexample,
}
