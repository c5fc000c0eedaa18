import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

import sentry_sdk

from commands import check, corpus, evaluate, iso, oracle, products, schema, validate
from functions.config.calculus_config import ConfigurationManager
from functions.core.errors import CalculusError
from functions.infrastructure.documents import Report

COMMANDS = [validate, products, evaluate, check, iso, corpus, oracle, schema]


def init_sentry() -> None:
    dsn = os.getenv("SENTRY_DSN")
    if not dsn:
        return
    sentry_sdk.init(
        dsn=dsn,
        send_default_pii=False,
        traces_sample_rate=0.0,
    )


def global_flags() -> argparse.ArgumentParser:
    """Flags accepted before or after the subcommand"""
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--max-arity", type=int, default=argparse.SUPPRESS, help="truncation N (default 4)")
    flags.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable reports")
    flags.add_argument("--profile", choices=["quick", "standard", "exhaustive"], default=argparse.SUPPRESS,
                       help="law-instance budget")
    flags.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="log at INFO")
    return flags


def build_parser() -> argparse.ArgumentParser:
    parents = [global_flags()]
    parser = argparse.ArgumentParser(prog="vectoid", parents=parents,
                                     description="Finite computations in the three classifying calculi")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def configure_logging(verbose: bool) -> None:
    level = "INFO" if verbose else os.getenv("VECTOID_LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)


def render(report: Report) -> str:
    lines = [f"{report.command}: {'ok' if report.ok else 'FAILED'}" + (f"  {report.subject}" if report.subject else "")]
    if report.error:
        lines.append(f"  {report.error}: {report.summary.get('message', '')}")
        lines.extend(f"  {key}: {value}" for key, value in sorted(report.details.items()))
        return "\n".join(lines)
    for key, value in report.summary.items():
        lines.append(f"  {key}: {value}")
    for law, counts in report.laws.items():
        mark = "ok" if not counts["failures"] else f"{counts['failures']} failures"
        lines.append(f"  {law:<28} {counts['instances']:>8} instances  {mark}")
    for violation in report.violations:
        lines.append(f"  ! {violation.law}: {violation.message}  witness={violation.witness}")
    lines.extend(f"  note: {notice}" for notice in report.notices)
    return "\n".join(lines)


def emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(render(report))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    configure_logging(getattr(args, "verbose", False))
    init_sentry()
    command = " ".join(part for part in (args.command, getattr(args, "corpus_action", None),
                                        getattr(args, "oracle_action", None), getattr(args, "kind", None)) if part)
    try:
        config = ConfigurationManager.from_environment(check_profile=getattr(args, "profile", None))
        max_arity = getattr(args, "max_arity", None)
        if max_arity is not None:
            config = ConfigurationManager.with_max_arity(max_arity, config)
        ConfigurationManager.activate(config)
        report = args.handler(args)
    except CalculusError as e:
        logger.warning(f"{command} refused: {e.kind}: {e.message}")
        report = Report.from_error(command, e)
    except Exception as e:
        event_id = sentry_sdk.capture_exception(e)
        logger.exception(f"Unhandled exception in {command}: {e}")
        report = Report(command=command, ok=False, exit_code=2, error="internal-error",
                        summary={"message": str(e)}, details={"sentry_event_id": str(event_id)} if event_id else {})
    if report is None:
        return 0
    emit(report, as_json)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
