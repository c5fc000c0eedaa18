"""
Interchange documents.

Every structure the engine builds can be written out as one JSON document and
read back. Indices in a document are 1-based (element i of a carrier is
written i + 1); in memory everything is 0-based. Carriers of q_c and q_a
structures are written as label lists, the symmetric-group actions of q_o
carriers as full action tables over S_n in lexicographic order, and maps as
their image lists.

Structures that live over another one (an algebra over an operad, a module
over a monad, an algebrad over its commutative algebra) embed the underlying
structure as `base` and leave their own carrier sections empty.

Canonical form is `json.dumps(sort_keys=True, indent=2, ensure_ascii=False)`
plus a trailing newline. Loading then dumping a canonical document gives the
same bytes back.

Documents are range-checked when they are decoded, then their carriers go
through the carrier validators (S_n-action axioms, functoriality, the monoid
table) and the first violation is raised as a DocumentError. The monoid laws
of operads, monads and algebrads are left to the check command. validate and
check decode with validate=False so a broken carrier can still be reported on.
"""

import dataclasses
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..config.calculus_config import HARD_ARITY_CAP
from ..core.algebrads import CommMonoid, QaAlgebrad, algebrad_parts, monoid_check
from ..core.algtheory import AlgebraicMonad, FinFunctor, SigmaModule, validate_functor
from ..core.errors import CalculusError, CapacityError, DocumentError
from ..core.finset import FinMap, all_maps
from ..core.groups import symmetric_group
from ..core.gsets import GSet
from ..core.operads import Operad, OperadAlgebra, operad_parts
from ..core.presheaves import CommAlgObject, FinPresheaf, validate_presheaf
from ..core.reports import LawReport
from ..core.symseq import SymSeq, validate_symseq

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
CORPUS_SCHEME = "corpus:"

# most table rows a single export may write
EXPORT_LIMIT = 200_000

KIND_CALCULUS = {
    "symseq": "qo",
    "operad": "qo",
    "algebra": "qo",
    "functor": "qc",
    "monad": "qc",
    "module": "qc",
    "presheaf": "qa",
    "comm-algebra": "qa",
    "algebrad": "qa",
    "monoid": "qa",
}
BASE_KIND = {"algebra": "operad", "module": "monad", "algebrad": "comm-algebra"}

Kind = Literal["symseq", "operad", "algebra", "functor", "monad", "module",
               "presheaf", "comm-algebra", "algebrad", "monoid"]


class TableSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: List[int]
    entries: List[List[int]]


class TransitionSection(BaseModel):
    """F(f) for qc, P(f) for qa, with f: dom → cod given by its images"""
    model_config = ConfigDict(extra="forbid")

    dom: int = Field(ge=0)
    cod: int = Field(ge=0)
    images: List[int]
    table: List[int]

    @model_validator(mode="after")
    def check_map(self):
        if len(self.images) != self.dom:
            raise ValueError(f"map with domain {self.dom} needs {self.dom} images, got {len(self.images)}")
        if any(not 1 <= i <= self.cod for i in self.images):
            raise ValueError(f"map images must lie in 1..{self.cod}")
        return self


class StructureSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    unit: Optional[int] = Field(default=None, ge=1)
    elements: Optional[List[Any]] = None
    action: Optional[List[int]] = None
    actions: Optional[List[TableSection]] = None
    substitution: Optional[List[TableSection]] = None
    multiplication: Optional[List[TableSection]] = None
    table: Optional[List[List[int]]] = None
    partial: Optional[bool] = None


class Document(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format_version: int = FORMAT_VERSION
    calculus: Literal["qo", "qc", "qa"]
    kind: Kind
    name: str = ""
    max_arity: int = Field(default=0, ge=0, le=HARD_ARITY_CAP)
    support_bound: Optional[int] = Field(default=None, ge=0)
    generator_degree: Optional[int] = Field(default=None, ge=0)
    labels: Optional[List[List[Any]]] = None
    actions: Optional[List[List[List[int]]]] = None
    transitions: Optional[List[TransitionSection]] = None
    structure: Optional[StructureSection] = None
    base: Optional["Document"] = None

    @field_validator("format_version")
    @classmethod
    def validate_version(cls, v):
        if v != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {v}, this build reads version {FORMAT_VERSION}")
        return v

    @model_validator(mode="after")
    def validate_sections(self):
        if KIND_CALCULUS[self.kind] != self.calculus:
            raise ValueError(f"kind {self.kind} belongs to calculus {KIND_CALCULUS[self.kind]}, not {self.calculus}")
        if self.kind in BASE_KIND:
            if self.base is None or self.base.kind != BASE_KIND[self.kind]:
                raise ValueError(f"a {self.kind} document needs a {BASE_KIND[self.kind]} as base")
            if self.base.max_arity != self.max_arity:
                raise ValueError("base document must share max_arity")
        elif self.kind in ("symseq", "operad"):
            if self.actions is None or len(self.actions) != self.max_arity + 1:
                raise ValueError(f"a {self.kind} document needs one action table per arity 0..{self.max_arity}")
        elif self.kind != "monoid":
            if self.labels is None or len(self.labels) != self.max_arity + 1:
                raise ValueError(f"a {self.kind} document needs one label list per arity 0..{self.max_arity}")
            if self.transitions is None:
                raise ValueError(f"a {self.kind} document needs its transitions")
        needs_structure = self.kind not in ("symseq", "functor", "presheaf")
        if needs_structure and self.structure is None:
            raise ValueError(f"a {self.kind} document needs a structure section")
        return self


Document.model_rebuild()


class ViolationModel(BaseModel):
    law: str
    witness: Dict[str, Any]
    message: str


class Report(BaseModel):
    """What every CLI command prints"""

    command: str
    ok: bool
    exit_code: int
    subject: Optional[str] = None
    summary: Dict[str, Any] = Field(default_factory=dict)
    laws: Dict[str, Dict[str, int]] = Field(default_factory=dict)
    violations: List[ViolationModel] = Field(default_factory=list)
    notices: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_law_report(cls, command: str, report: LawReport, summary: Optional[Dict[str, Any]] = None) -> "Report":
        return cls(
            command=command,
            ok=report.passed,
            exit_code=0 if report.passed else 1,
            subject=report.subject,
            summary=summary or {},
            laws={name: {"instances": report.instances.get(name, 0), "failures": report.failures.get(name, 0)}
                  for name in report.laws_checked},
            violations=[ViolationModel(law=v.law, witness=jsonable(v.witness), message=v.message)
                        for v in report.violations],
            notices=list(report.notices),
        )

    @classmethod
    def from_error(cls, command: str, error: CalculusError) -> "Report":
        return cls(command=command, ok=False, exit_code=error.exit_code, error=error.kind,
                   summary={"message": error.message}, details=jsonable(error.details))


def jsonable(value: Any) -> Any:
    """Labels and witnesses as plain JSON values"""
    if isinstance(value, FinMap):
        return list(value.images)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    if isinstance(value, dict):
        return {k: _freeze(v) for k, v in value.items()}
    return value


# encoding


def _guard(rows: int, what: str) -> None:
    if rows > EXPORT_LIMIT:
        raise CapacityError(f"exporting {what} would write {rows} rows, more than {EXPORT_LIMIT}",
                            details={"rows": rows, "limit": EXPORT_LIMIT, "section": what})


def _table_section(index: Sequence[int], table: Dict[Tuple[int, ...], int]) -> Optional[TableSection]:
    if not table:
        return None
    entries = [[k + 1 for k in key] + [value + 1] for key, value in sorted(table.items())]
    return TableSection(index=list(index), entries=entries)


def _sections(tables: Sequence[Optional[TableSection]]) -> List[TableSection]:
    return [t for t in tables if t is not None]


def _encode_symseq(seq: SymSeq, kind: str = "symseq", name: Optional[str] = None,
                   structure: Optional[StructureSection] = None) -> Document:
    actions = [[[int(v) + 1 for v in row] for row in gset.table] for gset in seq.carriers]
    labels = None
    if any(gset.labels is not None for gset in seq.carriers):
        labels = [jsonable(gset.labels) if gset.labels is not None else list(range(gset.size))
                  for gset in seq.carriers]
    return Document(calculus="qo", kind=kind, name=name or seq.name, max_arity=seq.max_arity,
                    support_bound=seq.support_bound, labels=labels, actions=actions, structure=structure)


def _encode_operad(operad: Operad) -> Document:
    rows = sum(len(operad.subs.get(parts, {})) for parts in operad_parts(operad.max_arity))
    _guard(rows, f"substitution tables of {operad.name}")
    tables = _sections([_table_section(parts, operad.subs.get(parts, {})) for parts in operad_parts(operad.max_arity)])
    return _encode_symseq(operad.carrier, "operad", operad.name,
                          StructureSection(unit=operad.unit + 1, substitution=tables))


def _encode_algebra(algebra: OperadAlgebra) -> Document:
    base = _encode_operad(algebra.operad)
    labels = algebra.labels if algebra.labels is not None else tuple(range(algebra.size))
    actions = _sections([_table_section([n], algebra.actions[n]) for n in sorted(algebra.actions)])
    return Document(calculus="qo", kind="algebra", name=algebra.name, max_arity=base.max_arity, base=base,
                    structure=StructureSection(elements=jsonable(labels), actions=actions,
                                               partial=True if algebra.partial else None))


def _encode_transitions(max_arity: int, table_of) -> List[TransitionSection]:
    sections = []
    for m in range(max_arity + 1):
        for n in range(max_arity + 1):
            for f in all_maps(m, n):
                table = table_of(f)
                if table is None:
                    continue
                sections.append(TransitionSection(dom=m, cod=n, images=list(f.images),
                                                  table=[int(v) + 1 for v in table]))
    return sections


def _encode_functor(functor: FinFunctor, kind: str = "functor", name: Optional[str] = None,
                    structure: Optional[StructureSection] = None) -> Document:
    return Document(calculus="qc", kind=kind, name=name or functor.name, max_arity=functor.max_arity,
                    labels=[jsonable(c) for c in functor.carriers],
                    transitions=_encode_transitions(functor.max_arity, functor.transition), structure=structure)


def _encode_monad(monad: AlgebraicMonad) -> Document:
    N, size = monad.max_arity, monad.functor.size
    rows = sum(size(p) * size(n) ** p for p in range(N + 1) for n in range(N + 1))
    _guard(rows, f"substitution tables of {monad.name}")
    tables = _sections([_table_section([p, n], monad.table(p, n)) for p in range(N + 1) for n in range(N + 1)])
    return _encode_functor(monad.functor, "monad", monad.name, StructureSection(unit=monad.unit + 1, substitution=tables))


def _encode_module(module: SigmaModule) -> Document:
    if module.size > module.monad.max_arity:
        raise CapacityError(f"module {module.name} has {module.size} elements, past max arity {module.monad.max_arity}",
                            details={"elements": module.size, "max_arity": module.monad.max_arity})
    base = _encode_monad(module.monad)
    return Document(calculus="qc", kind="module", name=module.name, max_arity=base.max_arity, base=base,
                    structure=StructureSection(elements=jsonable(module.labels),
                                               action=[a + 1 for a in module.action]))


def _encode_presheaf(presheaf: FinPresheaf, kind: str = "presheaf", name: Optional[str] = None,
                     structure: Optional[StructureSection] = None) -> Document:
    return Document(calculus="qa", kind=kind, name=name or presheaf.name, max_arity=presheaf.max_arity,
                    support_bound=presheaf.support_bound, generator_degree=presheaf.generator_degree,
                    labels=[jsonable(c) for c in presheaf.carriers],
                    transitions=_encode_transitions(presheaf.max_arity, presheaf.restrictions.get),
                    structure=structure)


def _encode_comm_algebra(algebra: CommAlgObject) -> Document:
    tables = _sections([_table_section(list(key), algebra.mult[key]) for key in sorted(algebra.mult)])
    return _encode_presheaf(algebra.presheaf, "comm-algebra", algebra.name,
                            StructureSection(unit=algebra.unit + 1, multiplication=tables))


def _encode_algebrad(algebrad: QaAlgebrad) -> Document:
    base = _encode_comm_algebra(algebrad.algebra)
    size = algebrad.size
    rows = sum(size(len(parts)) * int(np.prod([size(p) for p in parts]))
               for parts in algebrad_parts(algebrad.max_arity))
    _guard(rows, f"substitution tables of {algebrad.name}")
    tables = _sections([_table_section(parts, algebrad.table(parts)) for parts in algebrad_parts(algebrad.max_arity)])
    return Document(calculus="qa", kind="algebrad", name=algebrad.name, max_arity=base.max_arity, base=base,
                    structure=StructureSection(unit=algebrad.unit + 1, substitution=tables))


def _encode_monoid(monoid: CommMonoid) -> Document:
    table = [[int(v) + 1 for v in row] for row in monoid.table]
    return Document(calculus="qa", kind="monoid", name=monoid.name,
                    structure=StructureSection(unit=monoid.unit + 1, elements=jsonable(monoid.labels), table=table))


ENCODERS = [
    (SymSeq, _encode_symseq),
    (Operad, _encode_operad),
    (OperadAlgebra, _encode_algebra),
    (AlgebraicMonad, _encode_monad),
    (SigmaModule, _encode_module),
    (FinFunctor, _encode_functor),
    (QaAlgebrad, _encode_algebrad),
    (CommAlgObject, _encode_comm_algebra),
    (FinPresheaf, _encode_presheaf),
    (CommMonoid, _encode_monoid),
]


def encode(structure: Any) -> Document:
    for cls, encoder in ENCODERS:
        if isinstance(structure, cls):
            return encoder(structure)
    raise DocumentError(f"cannot export a {type(structure).__name__}", details={"type": type(structure).__name__})


# decoding


def _indices(values: Sequence[int], bound: int, where: str) -> Tuple[int, ...]:
    for v in values:
        if not 1 <= v <= bound:
            raise DocumentError(f"{where}: index {v} is outside 1..{bound}", details={"where": where, "index": v, "bound": bound})
    return tuple(v - 1 for v in values)


def _table(section: TableSection, bounds: Sequence[int], where: str) -> Dict[Tuple[int, ...], int]:
    table = {}
    for row in section.entries:
        if len(row) != len(bounds):
            raise DocumentError(f"{where}: row {row} should have {len(bounds)} entries",
                                details={"where": where, "row": row})
        values = tuple(_indices([v], b, where)[0] for v, b in zip(row, bounds))
        table[values[:-1]] = values[-1]
    return table


def _structure(doc: Document) -> StructureSection:
    return doc.structure or StructureSection()


def _unit(doc: Document, bound: int) -> int:
    unit = _structure(doc).unit
    if unit is None:
        raise DocumentError(f"{doc.kind} {doc.name!r} has no unit", details={"kind": doc.kind})
    return _indices([unit], bound, f"{doc.kind} unit")[0]


def _decode_symseq(doc: Document) -> SymSeq:
    carriers = []
    for n, rows in enumerate(doc.actions):
        order = symmetric_group(n).order
        if any(len(row) != order for row in rows):
            raise DocumentError(f"action table in arity {n} needs {order} columns, one per element of S_{n}",
                                details={"arity": n, "order": order})
        for row in rows:
            _indices(row, len(rows), f"action table in arity {n}")
        table = np.asarray(rows, dtype=np.int64).reshape(len(rows), order) - 1
        labels = _freeze(doc.labels[n]) if doc.labels is not None else None
        if labels is not None and len(labels) != len(rows):
            raise DocumentError(f"arity {n} has {len(rows)} elements but {len(labels)} labels", details={"arity": n})
        carriers.append(GSet(n, table, labels))
    return SymSeq(doc.max_arity, tuple(carriers), doc.support_bound, doc.name or "symseq")


def _decode_operad(doc: Document) -> Operad:
    seq = _decode_symseq(doc)
    size = lambda n: seq.carriers[n].size
    subs = {}
    for section in _structure(doc).substitution or []:
        parts = tuple(section.index)
        if len(parts) > doc.max_arity or sum(parts) > doc.max_arity or any(p < 0 for p in parts):
            raise DocumentError(f"substitution table {list(parts)} is outside the truncation", details={"parts": list(parts)})
        bounds = [size(len(parts))] + [size(p) for p in parts] + [size(sum(parts))]
        subs[parts] = _table(section, bounds, f"μ_{list(parts)}")
    return Operad(seq, _unit(doc, size(1) if doc.max_arity >= 1 else 0), subs, doc.name or "operad")


def _decode_algebra(doc: Document) -> OperadAlgebra:
    operad = _decode_operad(doc.base)
    structure = _structure(doc)
    labels = _freeze(structure.elements or [])
    actions = {}
    for section in structure.actions or []:
        if len(section.index) != 1 or not 0 <= section.index[0] <= doc.max_arity:
            raise DocumentError(f"algebra action index {section.index} is not an arity", details={"index": section.index})
        n = section.index[0]
        actions[n] = _table(section, [operad.size(n)] + [len(labels)] * (n + 1), f"action in arity {n}")
    return OperadAlgebra(operad, len(labels), actions, labels, bool(structure.partial), doc.name or "algebra")


def _decode_carriers(doc: Document) -> Tuple[Tuple[Any, ...], ...]:
    carriers = tuple(_freeze(c) for c in doc.labels)
    for n, carrier in enumerate(carriers):
        if len(set(carrier)) != len(carrier):
            raise DocumentError(f"labels in arity {n} are not distinct", details={"arity": n})
    return carriers


def _decode_transitions(doc: Document, carriers, contravariant: bool) -> Dict[FinMap, Tuple[int, ...]]:
    transitions = {}
    for section in doc.transitions:
        if section.dom > doc.max_arity or section.cod > doc.max_arity:
            raise DocumentError(f"map {section.dom}→{section.cod} is outside the truncation",
                                details={"dom": section.dom, "cod": section.cod})
        source, target = (section.cod, section.dom) if contravariant else (section.dom, section.cod)
        if len(section.table) != len(carriers[source]):
            raise DocumentError(f"transition along {section.images} needs {len(carriers[source])} entries",
                                details={"images": section.images})
        f = FinMap.of(tuple(section.images), section.cod)
        transitions[f] = _indices(section.table, len(carriers[target]), f"transition along {section.images}")
    return transitions


def _decode_functor(doc: Document) -> FinFunctor:
    carriers = _decode_carriers(doc)
    return FinFunctor(doc.max_arity, carriers, _decode_transitions(doc, carriers, False), name=doc.name or "functor")


def _decode_monad(doc: Document) -> AlgebraicMonad:
    functor = _decode_functor(doc)
    size = functor.size
    tables = {}
    for section in _structure(doc).substitution or []:
        if len(section.index) != 2 or not all(0 <= v <= doc.max_arity for v in section.index):
            raise DocumentError(f"substitution index {section.index} should be [p, n] inside the truncation",
                                details={"index": section.index})
        p, n = section.index
        tables[(p, n)] = _table(section, [size(p)] + [size(n)] * (p + 1), f"μ_{{{p},{n}}}")
    return AlgebraicMonad(functor, _unit(doc, size(1) if doc.max_arity >= 1 else 0), tables,
                          name=doc.name or "monad")


def _decode_module(doc: Document) -> SigmaModule:
    monad = _decode_monad(doc.base)
    structure = _structure(doc)
    labels = _freeze(structure.elements or [])
    k = len(labels)
    if k > doc.max_arity:
        raise CapacityError(f"module with {k} elements is past max arity {doc.max_arity}",
                            details={"elements": k, "max_arity": doc.max_arity})
    action = structure.action or []
    if len(action) != monad.functor.size(k):
        raise DocumentError(f"module action needs one value per element of Σ({k})",
                            details={"expected": monad.functor.size(k), "got": len(action)})
    return SigmaModule(monad, labels, _indices(action, k, "module action"), doc.name or "module")


def _decode_presheaf(doc: Document) -> FinPresheaf:
    carriers = _decode_carriers(doc)
    return FinPresheaf(doc.max_arity, carriers, _decode_transitions(doc, carriers, True),
                       doc.support_bound, doc.generator_degree, doc.name or "presheaf")


def _decode_comm_algebra(doc: Document) -> CommAlgObject:
    presheaf = _decode_presheaf(doc)
    size = presheaf.size
    mult = {}
    for section in _structure(doc).multiplication or []:
        if len(section.index) != 2 or min(section.index) < 0 or sum(section.index) > doc.max_arity:
            raise DocumentError(f"multiplication index {section.index} should be [p, q] with p + q inside the truncation",
                                details={"index": section.index})
        p, q = section.index
        mult[(p, q)] = _table(section, [size(p), size(q), size(p + q)], f"M_{{{p},{q}}}")
    return CommAlgObject(presheaf, mult, _unit(doc, size(0)), doc.name or "algebra")


def _decode_algebrad(doc: Document) -> QaAlgebrad:
    algebra = _decode_comm_algebra(doc.base)
    size = algebra.presheaf.size
    subs = {}
    for section in _structure(doc).substitution or []:
        parts = tuple(section.index)
        if len(parts) > doc.max_arity or sum(parts) > doc.max_arity or any(p < 0 for p in parts):
            raise DocumentError(f"substitution table {list(parts)} is outside the truncation", details={"parts": list(parts)})
        bounds = [size(len(parts))] + [size(p) for p in parts] + [size(sum(parts))]
        subs[parts] = _table(section, bounds, f"μ_{list(parts)}")
    return QaAlgebrad(algebra, _unit(doc, size(1) if doc.max_arity >= 1 else 0), subs, name=doc.name or "algebrad")


def _decode_monoid(doc: Document) -> CommMonoid:
    structure = _structure(doc)
    labels = _freeze(structure.elements or [])
    k = len(labels)
    rows = structure.table or []
    if len(rows) != k or any(len(row) != k for row in rows):
        raise DocumentError(f"monoid table must be {k}×{k}", details={"elements": k})
    table = np.array([_indices(row, k, "monoid table") for row in rows], dtype=np.int64).reshape(k, k)
    return CommMonoid(labels, table, _unit(doc, k), doc.name or "monoid")


DECODERS = {
    "symseq": _decode_symseq,
    "operad": _decode_operad,
    "algebra": _decode_algebra,
    "functor": _decode_functor,
    "monad": _decode_monad,
    "module": _decode_module,
    "presheaf": _decode_presheaf,
    "comm-algebra": _decode_comm_algebra,
    "algebrad": _decode_algebrad,
    "monoid": _decode_monoid,
}


def carrier_report(structure: Any) -> LawReport:
    """The carrier validator of a structure: S_n actions, functoriality or the monoid table"""
    if isinstance(structure, CommMonoid):
        return monoid_check(structure)
    if isinstance(structure, OperadAlgebra):
        structure = structure.operad
    elif isinstance(structure, SigmaModule):
        structure = structure.monad
    if isinstance(structure, Operad):
        return validate_symseq(structure.carrier)
    if isinstance(structure, SymSeq):
        return validate_symseq(structure)
    if isinstance(structure, AlgebraicMonad):
        return validate_functor(structure.functor)
    if isinstance(structure, FinFunctor):
        return validate_functor(structure)
    if isinstance(structure, (CommAlgObject, QaAlgebrad)):
        return validate_presheaf(structure.presheaf)
    if isinstance(structure, FinPresheaf):
        return validate_presheaf(structure)
    raise DocumentError(f"no carrier validator for {type(structure).__name__}",
                        details={"type": type(structure).__name__})


def decode(doc: Document, validate: bool = True, where: Optional[str] = None) -> Any:
    logger.debug(f"Decoding {doc.kind} document {doc.name!r} at N={doc.max_arity}")
    structure = DECODERS[doc.kind](doc)
    if not validate:
        return structure
    report = carrier_report(structure)
    if not report.passed:
        first = report.violations[0]
        source = where or doc.name
        logger.warning(f"Refusing {doc.kind} document {source!r}: {first.message}")
        raise DocumentError(f"{source} does not hold a valid {doc.kind}: {first.message}",
                            details={"source": source, "law": first.law, "witness": first.witness})
    return structure


# text and files


def dumps(doc: Document) -> str:
    return json.dumps(doc.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, where: str = "<string>") -> Document:
    try:
        return Document.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise DocumentError(f"{where} is not JSON: {e.msg} at line {e.lineno}", details={"source": where}) from e
    except ValidationError as e:
        errors = [{"loc": [str(p) for p in err["loc"]], "msg": err["msg"]} for err in e.errors()]
        raise DocumentError(f"{where} is not a valid document: {errors[0]['msg']}",
                            details={"source": where, "errors": errors}) from e


def write_document(doc: Document, path: str) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")
    logger.info(f"Wrote {doc.kind} document {doc.name!r} to {path}")


def load_document(source: str, max_arity: Optional[int] = None) -> Document:
    if source.startswith(CORPUS_SCHEME):
        return encode(load_structure(source, max_arity))
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {source}: {e.strerror}", details={"source": source}) from e
    return loads(text, source)


def load_structure(source: str, max_arity: Optional[int] = None, validate: bool = True) -> Any:
    """A structure from a file path or a `corpus:<id>` reference; corpus entries are built, not validated"""
    if source.startswith(CORPUS_SCHEME):
        from ..data_sources.corpus import build
        return build(source[len(CORPUS_SCHEME):], max_arity)
    return decode(load_document(source), validate=validate, where=source)


def document_schema() -> Dict[str, Any]:
    return Document.model_json_schema()


def report_schema() -> Dict[str, Any]:
    return Report.model_json_schema()
