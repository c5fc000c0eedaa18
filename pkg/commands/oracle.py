"""
oracle eval-qc FILE --set K --cutoff C
oracle laws FILE [--law NAME]
oracle bijection A B --arity N

Brute-force cross-checks. They share no code with the fast paths they are
meant to confirm, so they are slow and only good at desk scale.
"""

import logging

from functions.core.algtheory import evaluate_qc
from functions.core.errors import DomainError
from functions.core.oracle import bijection_search, exhaustive_law_check, naive_eval_qc
from functions.core.symseq import SymSeq
from functions.infrastructure.documents import Report, ViolationModel, jsonable

from .common import calculus_of, carrier_of, kind_of, load

logger = logging.getLogger(__name__)


def run_eval_qc(args) -> Report:
    structure = load(args.source)
    if calculus_of(structure) != "qc":
        raise DomainError(f"oracle eval-qc needs a functor, got a {kind_of(structure)}", details={"kind": kind_of(structure)})
    functor = carrier_of(structure)
    cutoff = functor.max_arity if args.cutoff is None else args.cutoff
    naive = naive_eval_qc(functor, args.set, cutoff)
    summary = {"set": args.set, "cutoff": cutoff, "size": naive.size, "stabilized": naive.stabilized}
    ok = naive.stabilized
    if args.set <= functor.max_arity:
        fast = evaluate_qc(functor, args.set).size
        summary["fast_size"] = fast
        ok = ok and fast == naive.size
    logger.info(f"oracle eval-qc {args.source}: {summary}")
    return Report(command="oracle eval-qc", ok=ok, exit_code=0 if ok else 1, subject=functor.name, summary=summary)


def run_laws(args) -> Report:
    structure = load(args.source, validate=False)
    verdict = exhaustive_law_check(structure, args.law)
    laws = {law: {"instances": count, "failures": 1 if law in verdict.failing else 0}
            for law, count in sorted(verdict.instances.items())}
    violations = [ViolationModel(law=law, witness=jsonable(witness), message=f"{law} fails")
                  for law, witness in sorted(verdict.failing.items())]
    return Report(command="oracle laws", ok=verdict.passed, exit_code=0 if verdict.passed else 1,
                  subject=verdict.subject, laws=laws, violations=violations)


def run_bijection(args) -> Report:
    left, right = carrier_of(load(args.left)), carrier_of(load(args.right))
    if not isinstance(left, SymSeq) or not isinstance(right, SymSeq):
        raise DomainError(f"bijection search compares symmetric sequences, got {kind_of(left)} and {kind_of(right)}",
                          details={"left": kind_of(left), "right": kind_of(right)})
    n = args.arity
    if n > min(left.max_arity, right.max_arity):
        raise DomainError(f"arity {n} is past one of the truncations", details={"arity": n})
    found = bijection_search(left.carriers[n], right.carriers[n])
    summary = {"arity": n, "bijection": [x + 1 for x in found] if found is not None else None}
    return Report(command="oracle bijection", ok=found is not None, exit_code=0 if found is not None else 1,
                  subject=f"{left.name} ≅ {right.name}", summary=summary)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("oracle", parents=parents, help="brute-force cross-checks")
    actions = parser.add_subparsers(dest="oracle_action", required=True)

    eval_qc = actions.add_parser("eval-qc", parents=parents, help="naive coequalizer evaluation of a functor")
    eval_qc.add_argument("source")
    eval_qc.add_argument("--set", type=int, required=True)
    eval_qc.add_argument("--cutoff", type=int, help="defaults to the functor's max arity")
    eval_qc.set_defaults(handler=run_eval_qc)

    laws = actions.add_parser("laws", parents=parents, help="every law instance, full group enumeration")
    laws.add_argument("source")
    laws.add_argument("--law", help="report only this law")
    laws.set_defaults(handler=run_laws)

    bijection = actions.add_parser("bijection", parents=parents, help="explicit equivariant bijection search")
    bijection.add_argument("left")
    bijection.add_argument("right")
    bijection.add_argument("--arity", type=int, required=True)
    bijection.set_defaults(handler=run_bijection)
