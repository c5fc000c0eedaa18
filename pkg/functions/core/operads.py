"""
Symmetric Operads and Their Algebras

An operad here is a symmetric sequence Σ with a unit ε ∈ Σ_1 and the
substitution family μ_{p1..ps}: Σ_s × Σ_{p1} × … × Σ_{ps} → Σ_{p1+…+ps},
one table per composition with s, total ≤ N. The blocks of the result are
consecutive: the inputs of y_1 come first, then those of y_2, and so on.

operad_monoid_check derives its laws from the monoid laws of the composition
product rather than from a transcribed list:

  * equivariance_blocks: μ(x; …, y_i·h_i, …) = μ(x; y)·h for h in the Young
    subgroup (checked on adjacent transpositions inside each block)
  * equivariance_relabel: μ_{p∘ρ}(x·ρ; y_ρ(1), …)·r_ρ = μ_p(x; y), r_ρ the
    block permutation (checked on adjacent transpositions of S_s)
  * left_unit / right_unit against ε
  * associativity on two-level trees with total arity ≤ N

Together the two equivariance laws are exactly what makes μ well defined on
the classes of Σ∘Σ and S_n-equivariant there.

Algebras act by a_n: Σ_n × Xⁿ → X. The action has to be constant on the
diagonal orbits (a·σ, y∘σ), which is the form the orbit quotient defining
evaluation forces.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .finset import Composition, weak_compositions
from .groups import block_embedding, block_permutation, symmetric_group
from .quotients import FiniteQuotient
from .reports import LawReport, law_instances, new_report
from .symseq import SymSeq, evaluate

logger = logging.getLogger(__name__)

Table = Dict[Tuple[int, ...], int]


@dataclass(frozen=True, eq=False)
class Operad:
    carrier: SymSeq
    unit: int
    subs: Dict[Tuple[int, ...], Table]
    name: str = "operad"

    @property
    def max_arity(self) -> int:
        return self.carrier.max_arity

    def size(self, n: int) -> int:
        return self.carrier.carriers[n].size

    def substitute(self, parts: Sequence[int], x: int, ys: Sequence[int]) -> Optional[int]:
        table = self.subs.get(tuple(parts))
        if table is None:
            return None
        value = table.get((x,) + tuple(ys))
        if value is None or not 0 <= value < self.size(sum(parts)):
            return None
        return value

    def domain(self, parts: Sequence[int]) -> List[range]:
        return [range(self.size(len(parts)))] + [range(self.size(p)) for p in parts]

    def with_entry(self, parts: Sequence[int], key: Sequence[int], value: int) -> "Operad":
        subs = dict(self.subs)
        table = dict(subs.get(tuple(parts), {}))
        table[tuple(key)] = value
        subs[tuple(parts)] = table
        return replace(self, subs=subs)


def operad_parts(max_arity: int) -> Iterator[Tuple[int, ...]]:
    """Every composition indexing a substitution table under the truncation"""
    for s in range(max_arity + 1):
        for total in range(max_arity + 1):
            yield from weak_compositions(total, s)


def _nonempty(operad: Operad, parts: Sequence[int]) -> bool:
    return operad.size(len(parts)) > 0 and all(operad.size(p) > 0 for p in parts)


def operad_monoid_check(operad: Operad) -> LawReport:
    report = new_report(f"operad {operad.name}")
    N = operad.max_arity
    carriers = operad.carrier.carriers
    logger.info(f"Checking operad laws for {operad.name} at N={N}")

    for law in ("totality", "equivariance_blocks", "equivariance_relabel", "left_unit", "right_unit", "associativity"):
        report.law(law)

    # totality
    for parts in operad_parts(N):
        if not _nonempty(operad, parts):
            continue
        table = operad.subs.get(parts, {})
        for key in law_instances(report, "totality", operad.domain(parts), str(parts)):
            value = table.get(key)
            if value is None or not 0 <= value < operad.size(sum(parts)):
                report.record("totality", {"parts": list(parts), "key": list(key), "value": value},
                              f"μ_{list(parts)} is undefined or out of range at {list(key)}")
    unit_ok = 0 <= operad.unit < operad.size(1)
    if not unit_ok:
        report.record("totality", {"unit": operad.unit}, "unit ε is not an element of Σ_1")

    mu = operad.substitute
    for parts in operad_parts(N):
        if not _nonempty(operad, parts):
            continue
        n, s = sum(parts), len(parts)
        group = symmetric_group(n)
        out = carriers[n]

        for block, p in enumerate(parts):
            if p < 2:
                continue
            local_group = symmetric_group(p)
            for gen in local_group.generators():
                h = group.index[block_embedding(parts, block, local_group.elements[gen])]
                for key in law_instances(report, "equivariance_blocks", operad.domain(parts), str(parts)):
                    x, ys = key[0], key[1:]
                    z = mu(parts, x, ys)
                    moved = list(ys)
                    moved[block] = int(carriers[p].table[ys[block], gen])
                    z_moved = mu(parts, x, moved)
                    if z is None or z_moved is None:
                        continue
                    if z_moved != int(out.table[z, h]):
                        report.record("equivariance_blocks", {
                            "parts": list(parts), "x": x, "ys": list(ys), "block": block + 1,
                            "sigma": list(local_group.elements[gen]),
                        }, f"μ_{list(parts)} does not commute with permuting inside block {block + 1}")

        if s >= 2:
            slot_group = symmetric_group(s)
            for gen in slot_group.generators():
                rho = slot_group.elements[gen]
                new_parts = tuple(parts[k - 1] for k in rho)
                r = group.position(block_permutation(parts, rho))
                for key in law_instances(report, "equivariance_relabel", operad.domain(parts), str(parts)):
                    x, ys = key[0], key[1:]
                    z = mu(parts, x, ys)
                    z_relabelled = mu(new_parts, int(carriers[s].table[x, gen]), [ys[k - 1] for k in rho])
                    if z is None or z_relabelled is None:
                        continue
                    if int(out.table[z_relabelled, r]) != z:
                        report.record("equivariance_relabel", {
                            "parts": list(parts), "x": x, "ys": list(ys), "rho": list(rho),
                        }, f"μ_{list(parts)} does not commute with relabelling the slots by {list(rho)}")

    if unit_ok:
        for n in range(N + 1):
            for (y,) in law_instances(report, "left_unit", [range(operad.size(n))], str(n)):
                z = mu((n,), operad.unit, (y,))
                if z is not None and z != y:
                    report.record("left_unit", {"arity": n, "y": y, "got": z}, f"μ_({n})(ε; y) ≠ y")
        for s in range(N + 1):
            for (x,) in law_instances(report, "right_unit", [range(operad.size(s))], str(s)):
                z = mu((1,) * s, x, (operad.unit,) * s)
                if z is not None and z != x:
                    report.record("right_unit", {"arity": s, "x": x, "got": z}, f"μ_(1,…,1)(x; ε,…,ε) ≠ x")

    _check_associativity(operad, report)
    return report


def _check_associativity(operad: Operad, report: LawReport) -> None:
    N = operad.max_arity
    mu = operad.substitute
    for s in range(N + 1):
        for P in range(N + 1):
            for parts in weak_compositions(P, s):
                if not _nonempty(operad, parts):
                    continue
                offsets = Composition(parts).offsets()
                for Q in range(N + 1):
                    for inner in weak_compositions(Q, P):
                        if any(operad.size(q) == 0 for q in inner):
                            continue
                        groups = [inner[o:o + p] for o, p in zip(offsets, parts)]
                        totals = tuple(sum(g) for g in groups)
                        ranges = operad.domain(parts) + [range(operad.size(q)) for q in inner]
                        for key in law_instances(report, "associativity", ranges, f"{parts}/{inner}"):
                            x, ys, zs = key[0], key[1:1 + s], key[1 + s:]
                            outer = mu(parts, x, ys)
                            if outer is None:
                                continue
                            lhs = mu(inner, outer, zs)
                            nested = [mu(g, ys[i], zs[o:o + p]) for i, (g, o, p) in enumerate(zip(groups, offsets, parts))]
                            if lhs is None or any(v is None for v in nested):
                                continue
                            rhs = mu(totals, x, nested)
                            if rhs is not None and lhs != rhs:
                                report.record("associativity", {
                                    "parts": list(parts), "inner": list(inner), "x": x, "ys": list(ys), "zs": list(zs),
                                    "lhs": lhs, "rhs": rhs,
                                }, f"substituting in two steps disagrees for outer {list(parts)}, inner {list(inner)}")


@dataclass(frozen=True, eq=False)
class OperadAlgebra:
    operad: Operad
    size: int
    actions: Dict[int, Table]
    labels: Optional[Tuple[Any, ...]] = None
    partial: bool = False
    name: str = "algebra"
    _by_operation: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], int]]] = field(default_factory=dict, init=False, repr=False)

    def act(self, x: int, ms: Sequence[int]) -> Optional[int]:
        value = self.actions.get(len(ms), {}).get((x,) + tuple(ms))
        if value is None or not 0 <= value < self.size:
            return None
        return value

    def with_entry(self, key: Sequence[int], value: int) -> "OperadAlgebra":
        actions = dict(self.actions)
        arity = len(key) - 1
        table = dict(actions.get(arity, {}))
        table[tuple(key)] = value
        actions[arity] = table
        return replace(self, actions=actions)

    def entries_for(self, arity: int, x: int) -> List[Tuple[Tuple[int, ...], int]]:
        if not self._by_operation:
            for n, table in self.actions.items():
                for key, value in sorted(table.items()):
                    self._by_operation.setdefault((n, key[0]), []).append((key[1:], value))
        return self._by_operation.get((arity, x), [])


def algebra_check(algebra: OperadAlgebra) -> LawReport:
    operad = algebra.operad
    report = new_report(f"algebra {algebra.name} over {operad.name}")
    N = operad.max_arity
    carriers = operad.carrier.carriers
    for law in ("totality", "equivariance", "unit", "associativity"):
        report.law(law)

    if algebra.partial:
        report.notice("partial algebra: totality skipped, instances touching omitted entries are skipped")
    else:
        for n in range(N + 1):
            for key in law_instances(report, "totality", [range(operad.size(n))] + [range(algebra.size)] * n, str(n)):
                if algebra.act(key[0], key[1:]) is None:
                    report.record("totality", {"arity": n, "key": list(key)}, f"a_{n} undefined at {list(key)}")

    for n in range(2, N + 1):
        group = symmetric_group(n)
        for key, value in sorted(algebra.actions.get(n, {}).items()):
            x, ms = key[0], key[1:]
            report.count("equivariance")
            for gen in group.generators():
                sigma = group.elements[gen]
                moved = algebra.act(int(carriers[n].table[x, gen]), [ms[i - 1] for i in sigma])
                if moved is not None and moved != algebra.act(x, ms):
                    report.record("equivariance", {"arity": n, "x": x, "ms": list(ms), "sigma": list(sigma)},
                                  f"a_{n} is not constant on the diagonal orbit of ({x}, {list(ms)})")

    if 0 <= operad.unit < operad.size(1):
        for m in range(algebra.size):
            report.count("unit")
            got = algebra.act(operad.unit, (m,))
            if got is not None and got != m:
                report.record("unit", {"m": m, "got": got}, f"a_1(ε, {m}) = {got}")

    for s in range(N + 1):
        for P in range(N + 1):
            for parts in weak_compositions(P, s):
                if not _nonempty(operad, parts):
                    continue
                offsets = Composition(parts).offsets()
                for key in law_instances(report, "associativity", operad.domain(parts), str(parts)):
                    x, ys = key[0], key[1:]
                    composite = operad.substitute(parts, x, ys)
                    if composite is None:
                        continue
                    per_block = [algebra.entries_for(p, y) for p, y in zip(parts, ys)]
                    for chosen in itertools.product(*per_block):
                        flat = tuple(m for ms, _ in chosen for m in ms)
                        lhs = algebra.act(composite, flat)
                        rhs = algebra.act(x, [value for _, value in chosen])
                        if lhs is None or rhs is None:
                            continue
                        if lhs != rhs:
                            report.record("associativity", {
                                "parts": list(parts), "x": x, "ys": list(ys), "ms": list(flat), "lhs": lhs, "rhs": rhs,
                            }, f"acting by μ_{list(parts)}(x; y) differs from acting in two steps")
    return report


def free_algebra(operad: Operad, points: Union[int, Sequence[Any]]) -> OperadAlgebra:
    """Carrier eval(Σ, S); entries whose total arity passes N are left out"""
    quotient: FiniteQuotient = evaluate(operad.carrier, points)
    N = operad.max_arity
    index = {element: i for i, element in enumerate(quotient.elements)}
    by_arity: Dict[int, List[int]] = {}
    for c, (n, _, _) in enumerate(quotient.representative_labels()):
        by_arity.setdefault(n, []).append(c)
    reps = quotient.representative_labels()

    present = [p for p in range(N + 1) if by_arity.get(p)]
    omitted = bool(present) and any(operad.size(n) > 0 and n * max(present) > N for n in range(1, N + 1))

    actions: Dict[int, Table] = {}
    for n in range(N + 1):
        table: Table = {}
        for x in range(operad.size(n)):
            for total in range(N + 1):
                for parts in weak_compositions(total, n):
                    chosen_lists = [by_arity.get(p, []) for p in parts]
                    for classes in itertools.product(*chosen_lists):
                        ys = tuple(reps[c][1] for c in classes)
                        word = tuple(point for c in classes for point in reps[c][2])
                        z = operad.substitute(parts, x, ys)
                        if z is None:
                            continue
                        table[(x,) + classes] = quotient.projection[index[(total, z, word)]]
        actions[n] = table
    labels = tuple(reps)
    logger.info(f"Free {operad.name}-algebra on {len(labels)} classes")
    return OperadAlgebra(operad, quotient.size, actions, labels, partial=omitted, name=f"free {operad.name}-algebra")
