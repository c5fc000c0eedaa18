"""
check {operad|algebra|monad|module|comm-algebra|algebrad} FILE

Runs the monoid-law checker for the named kind of structure. Exit 0 when
every law holds, 1 with witnesses when one does not.
"""

import logging
from typing import Any

from functions.core.algebrads import QaAlgebrad, algebrad_check
from functions.core.algtheory import AlgebraicMonad, SigmaModule, module_check, monad_check
from functions.core.errors import DomainError
from functions.core.operads import Operad, OperadAlgebra, algebra_check, operad_monoid_check
from functions.core.presheaves import CommAlgObject, comm_alg_check
from functions.core.reports import LawReport
from functions.infrastructure.documents import Report

from .common import describe, kind_of, load

logger = logging.getLogger(__name__)

CHECKERS = {
    "operad": (Operad, operad_monoid_check),
    "algebra": (OperadAlgebra, algebra_check),
    "monad": (AlgebraicMonad, monad_check),
    "module": (SigmaModule, module_check),
    "comm-algebra": (CommAlgObject, comm_alg_check),
    "algebrad": (QaAlgebrad, algebrad_check),
}


def check_structure(kind: str, structure: Any) -> LawReport:
    cls, checker = CHECKERS[kind]
    if kind == "comm-algebra" and isinstance(structure, QaAlgebrad):
        structure = structure.algebra
    if not isinstance(structure, cls):
        raise DomainError(f"check {kind} needs a {kind}, got a {kind_of(structure)}",
                          details={"expected": kind, "got": kind_of(structure)})
    return checker(structure)


def run(args) -> Report:
    structure = load(args.source, validate=False)
    report = check_structure(args.kind, structure)
    logger.info(f"Checked {args.kind} {args.source}: failing {sorted(report.failed_laws)}")
    return Report.from_law_report(f"check {args.kind}", report, describe(structure))


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("check", parents=parents, help="check the laws of a structure")
    parser.add_argument("kind", choices=sorted(CHECKERS))
    parser.add_argument("source", help="document path or corpus:<id>")
    parser.set_defaults(handler=run)
