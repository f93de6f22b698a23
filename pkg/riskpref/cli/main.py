"""
Command-line entry point.

Exit codes: 0 success, 1 invalid input or usage, 2 audit failure,
3 elicitation infeasible.
"""

import argparse
import sys
from typing import Sequence

from pydantic import ValidationError

from riskpref.cli.commands import EXIT_INVALID, HANDLERS
from riskpref.cli.output import render
from riskpref.config import settings
from riskpref.core.context import clear_run_context, set_run_context
from riskpref.core.exceptions import InputValidationError, RiskPrefException
from riskpref.core.logging_config import get_logger, setup_logging
from riskpref.core.metrics import write_metrics
from riskpref.features.audit.suites import Suite
from riskpref.schemas.common import ErrorDetail, ErrorResponse

logger = get_logger(__name__)

NUMBER_FORMAT_HELP = (
    "Numbers in reports are exact values rounded half-even to 17 significant "
    "digits with trailing zeros dropped, in plain notation for decimal exponents "
    "from -7 to 20 and scientific notation otherwise."
)


class _ArgumentParser(argparse.ArgumentParser):
    """Parser that reports usage errors as validation errors instead of exiting."""

    def error(self, message: str):
        raise InputValidationError(f"usage: {message}", {"prog": self.prog})


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Overrides RISKPREF_LOG_LEVEL",
    )
    common.add_argument("--log-format", choices=["json", "console"], default=None)
    common.add_argument("--metrics-file", default=None, help="Write Prometheus metrics here")
    common.add_argument(
        "--seed", type=_nonnegative_int, default=None, help="Root seed of randomized commands"
    )
    common.add_argument("--trials", type=_nonnegative_int, default=None, help="Audit trial count")
    common.add_argument(
        "--tolerance", type=_positive_float, default=None, help="Overrides the default tolerance"
    )

    parser = _ArgumentParser(
        prog="riskpref",
        description="Expected, dual and Choquet utility evaluation, audits and elicitation",
        epilog=NUMBER_FORMAT_HELP,
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text, epilog=NUMBER_FORMAT_HELP)

    p = command("eval-eu", "Expected utility of a measure")
    p.add_argument("--u", required=True)
    p.add_argument("--measure", required=True)

    p = command("eval-rdu", "Dual utility of a quantile function")
    p.add_argument("--w", required=True)
    p.add_argument("--quantile", required=True)

    p = command("eval-choquet", "Choquet integral of a measure")
    p.add_argument("--w", required=True)
    p.add_argument("--measure", required=True)

    p = command("eval-au", "Anticipated utility of a quantile function")
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--quantile", required=True)

    p = command("quantile", "Quantile function of a measure")
    p.add_argument("--measure", required=True)

    p = command("invert", "Measure of a quantile function")
    p.add_argument("--quantile", required=True)

    p = command("mix", "Lottery alpha*measure + (1-alpha)*other")
    p.add_argument("--alpha", required=True)
    p.add_argument("--measure", required=True)
    p.add_argument("--other", required=True)

    p = command("coarsen", "Conditional expectation on an interval partition")
    p.add_argument("--measure", required=True)
    p.add_argument("--cuts", default="", help="Comma-separated cut points")

    p = command("comono-check", "Pairwise comonotonicity of random variables")
    p.add_argument("--variables", required=True)

    p = command("audit", "Run a seeded property suite")
    p.add_argument("suite", choices=[s.value for s in Suite])

    p = command("elicit-eu", "Elicit an expected-utility representation")
    p.add_argument("--data", required=True)

    p = command("elicit-dual", "Elicit a dual-utility representation")
    p.add_argument("--data", required=True)

    p = command("counterexample", "Four-point prospect refuting risk aversion of w")
    p.add_argument("--w", required=True)

    return parser


def _report_error(exc: Exception) -> None:
    if isinstance(exc, RiskPrefException):
        details = [ErrorDetail(field=exc.details.get("field"), message=exc.message, type=type(exc).__name__)]
        error = ErrorResponse(error=exc.message, source=exc.details.get("file"), details=details)
    else:
        details = [
            ErrorDetail(field=".".join(str(p) for p in e["loc"]), message=e["msg"], type=e["type"])
            for e in exc.errors()
        ]
        error = ErrorResponse(error=str(exc).splitlines()[0], details=details)
    sys.stderr.write(error.model_dump_json(exclude_none=True) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, run one command and write its report to standard output.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    except InputValidationError as exc:
        _report_error(exc)
        return EXIT_INVALID

    setup_logging(args.log_level, args.log_format)

    set_run_context(command=args.command)
    try:
        result = HANDLERS[args.command](args)
        sys.stdout.write(render(result.report, args.format))
        logger.info("command_completed", exit_code=result.exit_code)
        return result.exit_code
    except (RiskPrefException, ValidationError) as exc:
        logger.warning("command_rejected", error=str(exc))
        _report_error(exc)
        return EXIT_INVALID
    finally:
        if args.metrics_file:
            write_metrics(args.metrics_file)
        clear_run_context()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
