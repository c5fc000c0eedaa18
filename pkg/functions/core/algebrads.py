"""
Q_a-algebrads and evaluation at commutative monoids.

An algebrad sits on a commutative algebra object Σ (a presheaf with M and E_0)
and adds ε ∈ Σ(1) and substitutions μ_{p1..pn}: Σ(n) × Σ(p1) × … × Σ(pn) →
Σ(p1+…+pn), the i-th block of the result being the i-th run of p_i points.
Nobody writes the full list of relations these have to satisfy, so
algebrad_check asks for what the monoid laws of the composition product
amount to on elements:

  * unit laws against ε and associativity on two-level data
  * multiplicativity: μ carries M to M and E_0 to E_0
  * naturality: restricting a substituted element along any map is the same
    as restricting the pieces and substituting on the pulled-back layout
  * substitution_compatibility: μ(Σ(φ)ξ; a) = μ(ξ; φ_* a), φ_* merging the
    blocks of each fibre of φ with M

eval_qa is the other end: a presheaf P and a finite commutative monoid A give
the coequalizer of ⊔_n P(n) × Aⁿ along every φ, where φ moves P backwards and
multiplies tuples of A along its fibres.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Hashable, List, Optional, Protocol, Sequence, Tuple, runtime_checkable

import numpy as np

from .errors import DomainError, PreconditionError, UnboundedEvaluationError
from .finset import Composition, FinMap, all_maps, block_order, blocks_map, compose_images, fibre_composition, \
    monotone_perm_factor, restrict_to_fibres, weak_compositions
from .presheaves import CommAlgObject, FinPresheaf, map_witness, merge_blocks
from .quotients import FiniteQuotient, UnionFind
from .reports import LawReport, law_instances, new_report

logger = logging.getLogger(__name__)

Label = Hashable
Table = Dict[Tuple[int, ...], int]


@runtime_checkable
class AlgebradRule(Protocol):
    def unit(self) -> Label: ...

    def substitute(self, parts: Sequence[int], x: Label, ys: Sequence[Label]) -> Label: ...


@dataclass(frozen=True, eq=False)
class QaAlgebrad:
    algebra: CommAlgObject
    unit: int
    subs: Dict[Tuple[int, ...], Table] = field(default_factory=dict)
    rule: Optional[AlgebradRule] = None
    name: str = "algebrad"
    _memo: Dict[Tuple[Any, ...], Optional[int]] = field(default_factory=dict, init=False, repr=False)

    @property
    def max_arity(self) -> int:
        return self.algebra.max_arity

    @property
    def presheaf(self) -> FinPresheaf:
        return self.algebra.presheaf

    def size(self, n: int) -> int:
        return self.algebra.presheaf.size(n)

    def substitute(self, parts: Sequence[int], x: int, ys: Sequence[int]) -> Optional[int]:
        parts = tuple(parts)
        key = (x,) + tuple(ys)
        table = self.subs.get(parts)
        if table is not None and key in table:
            value = table[key]
            return value if 0 <= value < self.size(sum(parts)) else None
        if self.rule is None:
            return None
        memo_key = (parts, key)
        if memo_key not in self._memo:
            carriers = self.presheaf.carriers
            label = self.rule.substitute(parts, carriers[len(parts)][x], [carriers[p][y] for p, y in zip(parts, ys)])
            self._memo[memo_key] = self.presheaf.position(sum(parts), label)
        return self._memo[memo_key]

    def with_entry(self, parts: Sequence[int], key: Sequence[int], value: int) -> "QaAlgebrad":
        subs = dict(self.subs)
        table = dict(subs.get(tuple(parts), {}))
        table[tuple(key)] = value
        subs[tuple(parts)] = table
        return replace(self, subs=subs)

    def domain(self, parts: Sequence[int]) -> List[range]:
        return [range(self.size(len(parts)))] + [range(self.size(p)) for p in parts]

    def table(self, parts: Sequence[int]) -> Table:
        entries: Table = {}
        for key in itertools.product(*self.domain(parts)):
            value = self.substitute(parts, key[0], key[1:])
            if value is not None:
                entries[key] = value
        return entries


def algebrad_parts(max_arity: int):
    for s in range(max_arity + 1):
        for total in range(max_arity + 1):
            yield from weak_compositions(total, s)


def algebrad_from_rule(algebra: CommAlgObject, rule: AlgebradRule, name: str = "algebrad") -> QaAlgebrad:
    unit = algebra.presheaf.position(1, rule.unit())
    if unit is None:
        raise DomainError(f"unit {rule.unit()!r} of {name} is not an element of Σ(1)", details={"algebrad": name})
    return QaAlgebrad(algebra, unit, {}, rule, name)


def algebrad_check(algebrad: QaAlgebrad) -> LawReport:
    report = new_report(f"algebrad {algebrad.name}")
    N = algebrad.max_arity
    size = algebrad.size
    mu = algebrad.substitute
    sheaf = algebrad.presheaf
    M = algebrad.algebra.multiply
    E0 = algebrad.algebra.unit
    for law in ("totality", "left_unit", "right_unit", "associativity", "multiplicativity", "naturality",
                "substitution_compatibility"):
        report.law(law)
    logger.info(f"Checking algebrad laws for {algebrad.name} at N={N}, sizes {sheaf.sizes()}")

    unit_ok = 0 <= algebrad.unit < size(1)
    if not unit_ok:
        report.record("totality", {"unit": algebrad.unit}, "unit ε is not an element of Σ(1)")
    for parts in algebrad_parts(N):
        for key in law_instances(report, "totality", algebrad.domain(parts), str(parts)):
            if mu(parts, key[0], key[1:]) is None:
                report.record("totality", {"parts": list(parts), "key": list(key)},
                              f"μ_{list(parts)} is undefined or out of range at {list(key)}")

    if unit_ok:
        for p in range(N + 1):
            for (a,) in law_instances(report, "left_unit", [range(size(p))], str(p)):
                value = mu((p,), algebrad.unit, (a,))
                if value is not None and value != a:
                    report.record("left_unit", {"p": p, "a": a, "got": value}, f"μ_({p})(ε; a) ≠ a")
        for n in range(N + 1):
            for (xi,) in law_instances(report, "right_unit", [range(size(n))], str(n)):
                value = mu((1,) * n, xi, (algebrad.unit,) * n)
                if value is not None and value != xi:
                    report.record("right_unit", {"n": n, "xi": xi, "got": value}, "μ_(1,…,1)(ξ; ε,…,ε) ≠ ξ")

    _check_associativity(algebrad, report)

    report.count("multiplicativity")
    empty = mu((), E0, ())
    if empty is not None and empty != E0:
        report.record("multiplicativity", {"parts": [], "got": empty}, "μ_()(E_0) ≠ E_0")
    for parts in algebrad_parts(N):
        n, P = len(parts), sum(parts)
        for split in range(n + 1):
            first, second = parts[:split], parts[split:]
            P1 = sum(first)
            ranges = [range(size(split)), range(size(n - split))] + [range(size(p)) for p in parts]
            for key in law_instances(report, "multiplicativity", ranges, f"{list(first)}|{list(second)}"):
                xi, xi2, ys = key[0], key[1], key[2:]
                joined = M(split, n - split, xi, xi2)
                left, right = mu(first, xi, ys[:split]), mu(second, xi2, ys[split:])
                if joined is None or left is None or right is None:
                    continue
                lhs, rhs = mu(parts, joined, ys), M(P1, P - P1, left, right)
                if lhs is not None and rhs is not None and lhs != rhs:
                    report.record("multiplicativity", {
                        "parts": list(parts), "split": split, "xi": xi, "xi2": xi2, "ys": list(ys), "lhs": lhs, "rhs": rhs,
                    }, f"μ_{list(parts)} does not carry M to M")

    for parts in algebrad_parts(N):
        P = sum(parts)
        layout = blocks_map(parts)
        blocks = [layout.fibre(i) for i in range(1, len(parts) + 1)]
        for w in range(N + 1):
            ranges = [all_maps(w, P)] + algebrad.domain(parts)
            for key in law_instances(report, "naturality", ranges, f"{list(parts)}←{w}"):
                f, xi, ys = key[0], key[1], key[2:]
                value = mu(parts, xi, ys)
                if value is None:
                    continue
                pulled = FinMap.of(compose_images(layout.images, f.images), len(parts))
                pieces = restrict_to_fibres(f, blocks)
                moved = [sheaf.restrict(g, y) for g, y in zip(pieces, ys)]
                if any(y is None for y in moved):
                    continue
                new_parts = tuple(g.dom.size for g in pieces)
                substituted = mu(new_parts, xi, moved)
                if substituted is None:
                    continue
                lhs = sheaf.restrict(f, value)
                rhs = sheaf.restrict(block_order(pulled), substituted)
                if lhs is not None and rhs is not None and lhs != rhs:
                    report.record("naturality", {
                        "parts": list(parts), "map": map_witness(f), "xi": xi, "ys": list(ys), "lhs": lhs, "rhs": rhs,
                    }, f"restricting μ_{list(parts)}(ξ; a) along {list(f.images)} disagrees with substituting restrictions")

    for parts in algebrad_parts(N):
        m = len(parts)
        layout = blocks_map(parts)
        for n in range(N + 1):
            ranges = [all_maps(m, n), range(size(n))] + [range(size(p)) for p in parts]
            for key in law_instances(report, "substitution_compatibility", ranges, f"{list(parts)}→{n}"):
                phi, xi, ys = key[0], key[1], key[2:]
                restricted = sheaf.restrict(phi, xi)
                merged = merge_blocks(algebrad.algebra, phi, layout, ys)
                if restricted is None or merged is None:
                    continue
                lhs = mu(parts, restricted, ys)
                pushed = FinMap.of(compose_images(phi.images, layout.images), n)
                merged_parts = tuple(len(pushed.fibre(j)) for j in range(1, n + 1))
                substituted = mu(merged_parts, xi, merged)
                if lhs is None or substituted is None:
                    continue
                rhs = sheaf.restrict(block_order(pushed), substituted)
                if rhs is not None and lhs != rhs:
                    report.record("substitution_compatibility", {
                        "parts": list(parts), "map": map_witness(phi), "xi": xi, "ys": list(ys), "lhs": lhs, "rhs": rhs,
                    }, f"μ(Σ(φ)ξ; a) ≠ μ(ξ; φ_* a) for φ = {list(phi.images)}")
    return report


def _check_associativity(algebrad: QaAlgebrad, report: LawReport) -> None:
    N = algebrad.max_arity
    mu = algebrad.substitute
    size = algebrad.size
    for s in range(N + 1):
        for P in range(N + 1):
            for parts in weak_compositions(P, s):
                offsets = Composition(parts).offsets()
                for Q in range(N + 1):
                    for inner in weak_compositions(Q, P):
                        groups = [inner[o:o + p] for o, p in zip(offsets, parts)]
                        totals = tuple(sum(g) for g in groups)
                        ranges = algebrad.domain(parts) + [range(size(q)) for q in inner]
                        for key in law_instances(report, "associativity", ranges, f"{parts}/{inner}"):
                            x, ys, zs = key[0], key[1:1 + s], key[1 + s:]
                            outer = mu(parts, x, ys)
                            nested = [mu(g, ys[i], zs[o:o + p]) for i, (g, o, p) in enumerate(zip(groups, offsets, parts))]
                            if outer is None or any(v is None for v in nested):
                                continue
                            lhs, rhs = mu(inner, outer, zs), mu(totals, x, nested)
                            if lhs is not None and rhs is not None and lhs != rhs:
                                report.record("associativity", {
                                    "parts": list(parts), "inner": list(inner), "x": x, "ys": list(ys), "zs": list(zs),
                                    "lhs": lhs, "rhs": rhs,
                                }, f"substituting in two steps disagrees for outer {list(parts)}, inner {list(inner)}")


@dataclass(frozen=True, eq=False)
class CommMonoid:
    labels: Tuple[Any, ...]
    table: np.ndarray
    unit: int
    name: str = "monoid"

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "table", np.asarray(self.table, dtype=np.int64).reshape(len(self.labels), len(self.labels)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, elements: Sequence[int]) -> int:
        value = self.unit
        for element in elements:
            value = self.multiply(value, element)
        return value

    def violations(self, limit: Optional[int] = None) -> List[Dict[str, Any]]:
        found: List[Dict[str, Any]] = []
        k = self.size
        if not 0 <= self.unit < k:
            return [{"law": "unit", "unit": self.unit}]
        if k and (self.table.min() < 0 or self.table.max() >= k):
            return [{"law": "closure"}]
        elements = range(k)
        for a in elements:
            if self.multiply(self.unit, a) != a or self.multiply(a, self.unit) != a:
                found.append({"law": "unit", "a": a})
        for a, b in itertools.product(elements, repeat=2):
            if self.multiply(a, b) != self.multiply(b, a):
                found.append({"law": "commutativity", "a": a, "b": b})
        for a, b, c in itertools.product(elements, repeat=3):
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                found.append({"law": "associativity", "a": a, "b": b, "c": c})
        return found[:limit] if limit is not None else found


MONOID_LAWS = ("unit", "closure", "commutativity", "associativity")


def monoid_check(monoid: CommMonoid) -> LawReport:
    report = new_report(f"monoid {monoid.name}")
    k = monoid.size
    for law, count in zip(MONOID_LAWS, (k, k * k, k * k, k ** 3)):
        report.count(law, count)
    for found in monoid.violations():
        law = found["law"]
        report.record(law, found, f"({', '.join(map(str, monoid.labels))}) fails {law}")
    return report


def product_monoid(first: CommMonoid, second: CommMonoid) -> CommMonoid:
    labels = tuple(itertools.product(first.labels, second.labels))
    k = second.size
    table = np.empty((len(labels), len(labels)), dtype=np.int64)
    for (a, b), (c, d) in itertools.product(itertools.product(range(first.size), range(k)), repeat=2):
        table[a * k + b, c * k + d] = first.multiply(a, c) * k + second.multiply(b, d)
    return CommMonoid(labels, table, first.unit * k + second.unit, name=f"{first.name}×{second.name}")


def pushforward(monoid: CommMonoid, phi: FinMap, values: Sequence[int]) -> Tuple[int, ...]:
    """φ_*: permute by the sorting part of φ, then multiply along the fibres of the monotone part"""
    monotone, sigma = monotone_perm_factor(phi)
    permuted = [0] * len(values)
    for i, value in enumerate(values, start=1):
        permuted[sigma(i) - 1] = value
    result, start = [], 0
    for size in fibre_composition(monotone).parts:
        result.append(monoid.product(permuted[start:start + size]))
        start += size
    return tuple(result)


def eval_qa(presheaf: FinPresheaf, monoid: CommMonoid) -> FiniteQuotient:
    """⊔_n P(n) × Aⁿ modulo (P(φ)ξ, a) ~ (ξ, φ_* a); elements (n, ξ, a)"""
    problems = monoid.violations(limit=5)
    if problems:
        raise PreconditionError(
            f"{monoid.name} is not a commutative monoid",
            details={"monoid": monoid.name, "violations": problems},
        )
    cutoff = presheaf.cutoff
    if cutoff is None or cutoff > presheaf.max_arity:
        raise UnboundedEvaluationError(
            f"{presheaf.name} is neither supported nor generated in a degree within {presheaf.max_arity}",
            details={"support_bound": presheaf.support_bound, "generator_degree": presheaf.generator_degree,
                     "max_arity": presheaf.max_arity},
        )
    k = monoid.size
    elements = [(n, xi, values)
                for n in range(cutoff + 1)
                for xi in range(presheaf.size(n))
                for values in itertools.product(range(k), repeat=n)]
    index = {element: i for i, element in enumerate(elements)}
    uf = UnionFind(len(elements))
    for m in range(cutoff + 1):
        for n in range(cutoff + 1):
            for phi in all_maps(m, n):
                for xi in range(presheaf.size(n)):
                    restricted = presheaf.restrict(phi, xi)
                    if restricted is None:
                        continue
                    for values in itertools.product(range(k), repeat=m):
                        uf.union(index[(m, restricted, values)], index[(n, xi, pushforward(monoid, phi, values))])
    quotient = FiniteQuotient.from_union_find(uf, elements)
    logger.info(f"Evaluated {presheaf.name} at {monoid.name}: {len(elements)} pairs, {quotient.size} classes")
    return quotient
