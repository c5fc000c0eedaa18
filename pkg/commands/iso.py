"""
iso A B

Decides, arity by arity, whether two symmetric sequences are equivariantly
isomorphic. Exit 0 when every arity matches, 1 otherwise.
"""

import logging

from functions.core.errors import DomainError
from functions.core.gsets import gset_iso
from functions.core.symseq import SymSeq
from functions.infrastructure.documents import Report

from .common import carrier_of, kind_of, load

logger = logging.getLogger(__name__)


def run(args) -> Report:
    left, right = carrier_of(load(args.left)), carrier_of(load(args.right))
    if not isinstance(left, SymSeq) or not isinstance(right, SymSeq):
        raise DomainError(f"iso compares symmetric sequences, got {kind_of(left)} and {kind_of(right)}",
                          details={"left": kind_of(left), "right": kind_of(right)})
    if left.max_arity != right.max_arity:
        raise DomainError(f"sequences truncated at {left.max_arity} and {right.max_arity} cannot be compared",
                          details={"left": left.max_arity, "right": right.max_arity})
    arities = {str(n): gset_iso(left.carriers[n], right.carriers[n]) for n in range(left.max_arity + 1)}
    ok = all(arities.values())
    logger.info(f"iso {args.left} {args.right}: {arities}")
    return Report(command="iso", ok=ok, exit_code=0 if ok else 1, subject=f"{left.name} ≅ {right.name}",
                  summary={"arities": arities, "left_sizes": left.sizes(), "right_sizes": right.sizes()})


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("iso", parents=parents, help="equivariant isomorphism test per arity")
    parser.add_argument("left", help="document path or corpus:<id>")
    parser.add_argument("right", help="document path or corpus:<id>")
    parser.set_defaults(handler=run)
