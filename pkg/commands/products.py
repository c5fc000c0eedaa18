"""
tensor A B and compose A B.

Both dispatch on the calculus of their inputs: induction tensor and
composition product for symmetric sequences, pointwise product and
composition for functors, Day tensor and substitution for presheaves. A q_a
composition needs its right-hand side to be a commutative algebra (an
algebrad's underlying algebra will do).
"""

import logging
from typing import Any

from functions.core import algtheory, symseq
from functions.core.algebrads import QaAlgebrad
from functions.core.errors import DomainError
from functions.core.presheaves import CommAlgObject, compose_qa, day_tensor
from functions.infrastructure.documents import Report

from .common import carrier_of, emit_structure, kind_of, load, same_calculus

logger = logging.getLogger(__name__)


def tensor_structures(left: Any, right: Any) -> Any:
    calculus = same_calculus("tensor", left, right)
    a, b = carrier_of(left), carrier_of(right)
    if calculus == "qo":
        return symseq.tensor(a, b)
    if calculus == "qc":
        return algtheory.product(a, b)
    return day_tensor(a, b)


def compose_structures(outer: Any, inner: Any) -> Any:
    calculus = same_calculus("compose", outer, inner)
    if calculus == "qo":
        return symseq.compose(carrier_of(outer), carrier_of(inner))
    if calculus == "qc":
        return algtheory.compose(carrier_of(outer), carrier_of(inner))
    if isinstance(inner, QaAlgebrad):
        inner = inner.algebra
    if not isinstance(inner, CommAlgObject):
        raise DomainError(f"q_a composition substitutes into a commutative algebra, got a {kind_of(inner)}",
                          details={"inner": kind_of(inner)})
    return compose_qa(carrier_of(outer), inner)


def run_tensor(args) -> Report:
    result = tensor_structures(load(args.left), load(args.right))
    logger.info(f"Tensor of {args.left} and {args.right}: sizes {result.sizes()}")
    return emit_structure("tensor", result, args.output)


def run_compose(args) -> Report:
    result = compose_structures(load(args.left), load(args.right))
    logger.info(f"Composite of {args.left} and {args.right}: sizes {result.sizes()}")
    return emit_structure("compose", result, args.output)


def register(subparsers, parents) -> None:
    for name, handler, help_text in (
        ("tensor", run_tensor, "tensor product of two structures of the same calculus"),
        ("compose", run_compose, "composition product A∘B"),
    ):
        parser = subparsers.add_parser(name, parents=parents, help=help_text)
        parser.add_argument("left", help="document path or corpus:<id>")
        parser.add_argument("right", help="document path or corpus:<id>")
        parser.add_argument("-o", "--output", help="write the result here instead of stdout")
        parser.set_defaults(handler=handler)
