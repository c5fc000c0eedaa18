"""
eval FILE --set K

Evaluates a q_o or q_c structure at a K-element set. A q_a structure is
evaluated at a commutative monoid instead (--monoid), and K is ignored.
"""

import logging
from typing import Any, Dict, Optional

from functions.core.algebrads import CommMonoid, eval_qa
from functions.core.algtheory import evaluate_qc
from functions.core.errors import DomainError, PreconditionError
from functions.core.symseq import evaluate
from functions.infrastructure.documents import Report, jsonable

from .common import calculus_of, carrier_of, kind_of, load

logger = logging.getLogger(__name__)

# representatives listed in a report
SHOWN = 20


def evaluate_structure(structure: Any, points: Optional[int], monoid: Optional[CommMonoid] = None) -> Dict[str, Any]:
    calculus = calculus_of(structure)
    if calculus == "qa":
        if monoid is None:
            raise PreconditionError("evaluating a q_a structure needs --monoid", details={"kind": kind_of(structure)})
        quotient = eval_qa(carrier_of(structure), monoid)
        elements = quotient.representative_labels()
        return {"calculus": calculus, "monoid": monoid.name, "size": quotient.size,
                "elements": jsonable(elements[:SHOWN])}
    if points is None:
        raise PreconditionError(f"evaluating a {kind_of(structure)} needs --set", details={"kind": kind_of(structure)})
    if calculus == "qo":
        quotient = evaluate(carrier_of(structure), points)
        return {"calculus": calculus, "set": points, "size": quotient.size,
                "elements": jsonable(quotient.representative_labels()[:SHOWN])}
    result = evaluate_qc(carrier_of(structure), points)
    return {"calculus": calculus, "set": points, "size": result.size, "elements": jsonable(result.elements[:SHOWN])}


def run(args) -> Report:
    structure = load(args.source)
    monoid = None
    if args.monoid is not None:
        monoid = load(args.monoid)
        if not isinstance(monoid, CommMonoid):
            raise DomainError(f"--monoid must name a monoid, got a {kind_of(monoid)}", details={"kind": kind_of(monoid)})
    summary = evaluate_structure(structure, args.set, monoid)
    logger.info(f"Evaluated {args.source}: {summary['size']} elements")
    return Report(command="eval", ok=True, exit_code=0, subject=getattr(structure, "name", args.source), summary=summary)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("eval", parents=parents, help="evaluate at a finite set or monoid")
    parser.add_argument("source", help="document path or corpus:<id>")
    parser.add_argument("--set", type=int, help="size of the set to evaluate at")
    parser.add_argument("--monoid", help="commutative monoid for q_a evaluation (document or corpus:<id>)")
    parser.set_defaults(handler=run)
