"""
Plumbing shared by the subcommands: loading inputs, telling structures apart,
and writing results either to a file or to stdout.
"""

import logging
from typing import Any, Dict, List, Optional

from functions.core.algebrads import CommMonoid, QaAlgebrad
from functions.core.algtheory import AlgebraicMonad, FinFunctor, SigmaModule
from functions.core.errors import DomainError
from functions.core.operads import Operad, OperadAlgebra
from functions.core.presheaves import CommAlgObject, FinPresheaf
from functions.core.symseq import SymSeq
from functions.infrastructure.documents import Report, dumps, encode, load_structure, write_document

logger = logging.getLogger(__name__)

KINDS = [
    (SymSeq, "symseq", "qo"),
    (Operad, "operad", "qo"),
    (OperadAlgebra, "algebra", "qo"),
    (AlgebraicMonad, "monad", "qc"),
    (SigmaModule, "module", "qc"),
    (FinFunctor, "functor", "qc"),
    (QaAlgebrad, "algebrad", "qa"),
    (CommAlgObject, "comm-algebra", "qa"),
    (FinPresheaf, "presheaf", "qa"),
    (CommMonoid, "monoid", "qa"),
]


def load(source: str, validate: bool = True) -> Any:
    structure = load_structure(source, validate=validate)
    logger.info(f"Loaded {kind_of(structure)} {getattr(structure, 'name', '')!r} from {source}")
    return structure


def kind_of(structure: Any) -> str:
    for cls, kind, _ in KINDS:
        if isinstance(structure, cls):
            return kind
    return type(structure).__name__


def calculus_of(structure: Any) -> Optional[str]:
    for cls, _, calculus in KINDS:
        if isinstance(structure, cls):
            return calculus
    return None


def carrier_of(structure: Any) -> Any:
    """The symmetric sequence, functor or presheaf underneath a structure"""
    if isinstance(structure, Operad):
        return structure.carrier
    if isinstance(structure, AlgebraicMonad):
        return structure.functor
    if isinstance(structure, (CommAlgObject, QaAlgebrad)):
        return structure.presheaf
    if isinstance(structure, (SymSeq, FinFunctor, FinPresheaf)):
        return structure
    raise DomainError(f"a {kind_of(structure)} has no carrier sequence", details={"kind": kind_of(structure)})


def sizes_of(structure: Any) -> List[int]:
    if isinstance(structure, (OperadAlgebra, SigmaModule, CommMonoid)):
        return [structure.size]
    return carrier_of(structure).sizes()


def describe(structure: Any) -> Dict[str, Any]:
    return {"kind": kind_of(structure), "calculus": calculus_of(structure),
            "name": getattr(structure, "name", ""), "sizes": sizes_of(structure)}


def emit_structure(command: str, structure: Any, output: Optional[str]) -> Optional[Report]:
    """Write to `output`, or print the document itself when there is none"""
    doc = encode(structure)
    if output is None:
        print(dumps(doc), end="")
        return None
    write_document(doc, output)
    return Report(command=command, ok=True, exit_code=0, subject=doc.name,
                  summary={**describe(structure), "output": output})


def same_calculus(command: str, left: Any, right: Any) -> str:
    calculus = calculus_of(left)
    if calculus is None or calculus != calculus_of(right):
        raise DomainError(f"{command} needs two inputs from the same calculus, got {kind_of(left)} and {kind_of(right)}",
                          details={"left": kind_of(left), "right": kind_of(right)})
    return calculus
