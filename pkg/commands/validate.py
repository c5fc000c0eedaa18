"""
validate FILE

Loads a document (or corpus entry) and runs the carrier-level validator: the
S_n-action laws for symmetric sequences, identity and composition for
functors and presheaves, the monoid laws for commutative monoids. The
document is decoded without the load-time validation so that a broken
carrier comes back as a report with exit code 1 instead of a refusal.
"""

import logging

from functions.infrastructure.documents import Report, carrier_report

from .common import describe, load

logger = logging.getLogger(__name__)


def run(args) -> Report:
    structure = load(args.source, validate=False)
    report = carrier_report(structure)
    logger.info(f"Validated {args.source}: {'ok' if report.passed else 'failed'}")
    return Report.from_law_report("validate", report, describe(structure))


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("validate", parents=parents, help="check a document's carriers")
    parser.add_argument("source", help="document path or corpus:<id>")
    parser.set_defaults(handler=run)
