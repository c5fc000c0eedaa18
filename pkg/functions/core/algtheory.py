"""
Algebraic Theories

The coalgebra-classifier calculus. A finitary functor is tabulated on the
standard sets 0̄, ..., N̄: carriers F(n) are tuples of labels and every map
f: m̄ → n̄ inside the bound gets its transition F(f) as a tuple of indices.
Storing all of them (instead of generators and relations) keeps validation
total, and at desk scale there are only a few hundred maps.

Functors and monads may also carry a rule. A rule knows how to list F(n) and
how F(f) moves a label for any n, which is what composition needs when G(n)
has more than N elements, and what lets a monad compute μ lazily instead of
shipping a table with a million rows. Explicit table entries always win over
the rule, so a mutated monad is just a rule-backed monad with one entry
overridden.

An algebraic monad is Σ with ε ∈ Σ(1) and substitutions
μ_{p,n}: Σ(p) × Σ(n)^p → Σ(n). The output arity never goes above n, so a
monad truncated at N is closed under its own operations and needs no support
bound. Modules are sets M with α: Σ(|M|) → M, the points of M identified with
1..|M| in the given order. A module with more than N points is partial: it
only exists for rule-backed monads, and cannot be written to a document.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Hashable, List, Optional, Protocol, Sequence, Tuple, Union, runtime_checkable

import numpy as np

from .errors import CapacityError, DomainError, PreconditionError
from .finset import FinMap, all_maps, compose_images
from .reports import LawReport, law_instances, new_report
from ..config.calculus_config import ConfigurationManager

logger = logging.getLogger(__name__)

Label = Hashable
Transition = Tuple[int, ...]
SubstitutionTable = Dict[Tuple[int, ...], int]


@runtime_checkable
class FunctorRule(Protocol):
    """Carriers and transitions of a functor at any arity"""

    def size(self, n: int) -> int: ...

    def carrier(self, n: int) -> Sequence[Label]: ...

    def apply(self, f: FinMap, element: Label) -> Label: ...


@runtime_checkable
class MonadRule(Protocol):
    def unit(self) -> Label: ...

    def substitute(self, n: int, t: Label, us: Sequence[Label]) -> Label: ...


def map_witness(f: FinMap) -> Dict[str, Any]:
    return {"dom": f.dom.size, "cod": f.cod.size, "images": list(f.images)}


@dataclass(frozen=True, eq=False)
class FinFunctor:
    max_arity: int
    carriers: Tuple[Tuple[Label, ...], ...]
    transitions: Dict[FinMap, Transition]
    rule: Optional[FunctorRule] = None
    name: str = "functor"
    _positions: Dict[int, Dict[Label, int]] = field(default_factory=dict, init=False, repr=False)
    _carriers_past_bound: Dict[int, Tuple[Label, ...]] = field(default_factory=dict, init=False, repr=False)
    _transitions_past_bound: Dict[FinMap, Transition] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "carriers", tuple(tuple(c) for c in self.carriers))
        if len(self.carriers) != self.max_arity + 1:
            raise DomainError(
                f"functor truncated at {self.max_arity} needs {self.max_arity + 1} carriers, got {len(self.carriers)}",
                details={"max_arity": self.max_arity, "carriers": len(self.carriers)},
            )

    def _refuse(self, n: int) -> CapacityError:
        return CapacityError(
            f"{self.name} is tabulated up to arity {self.max_arity} and has no rule for arity {n}",
            details={"functor": self.name, "arity": n, "max_arity": self.max_arity},
        )

    def size(self, n: int) -> int:
        if n <= self.max_arity:
            return len(self.carriers[n])
        if self.rule is None:
            raise self._refuse(n)
        return self.rule.size(n)

    def carrier(self, n: int) -> Tuple[Label, ...]:
        if n <= self.max_arity:
            return self.carriers[n]
        if n not in self._carriers_past_bound:
            size = self.size(n)
            limit = ConfigurationManager.active().rule_carrier_limit
            if size > limit:
                raise CapacityError(
                    f"{self.name}({n}) has {size} elements, more than the rule carrier limit {limit}",
                    details={"functor": self.name, "arity": n, "size": size, "limit": limit},
                )
            self._carriers_past_bound[n] = tuple(self.rule.carrier(n))
        return self._carriers_past_bound[n]

    def position(self, n: int, label: Label) -> Optional[int]:
        if n not in self._positions:
            self._positions[n] = {element: i for i, element in enumerate(self.carrier(n))}
        return self._positions[n].get(label)

    def transition(self, f: FinMap) -> Optional[Transition]:
        m, n = f.dom.size, f.cod.size
        if m <= self.max_arity and n <= self.max_arity:
            return self.transitions.get(f)
        if self.rule is None:
            raise self._refuse(max(m, n))
        if f not in self._transitions_past_bound:
            self._transitions_past_bound[f] = tuple(
                self.position(n, self.rule.apply(f, label)) for label in self.carrier(m)
            )
        return self._transitions_past_bound[f]

    def apply(self, f: FinMap, element: int) -> Optional[int]:
        table = self.transition(f)
        if table is None or not 0 <= element < len(table):
            return None
        return table[element]

    def sizes(self) -> List[int]:
        return [len(c) for c in self.carriers]


def functor_from_rule(rule: FunctorRule, max_arity: Optional[int] = None, name: str = "functor") -> FinFunctor:
    """Tabulate every carrier and every transition of `rule` up to the bound"""
    N = ConfigurationManager.active().max_arity if max_arity is None else max_arity
    carriers = [tuple(rule.carrier(n)) for n in range(N + 1)]
    positions = [{label: i for i, label in enumerate(c)} for c in carriers]
    transitions: Dict[FinMap, Transition] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                transitions[f] = tuple(positions[n][rule.apply(f, label)] for label in carriers[m])
    logger.debug(f"Tabulated {name} up to arity {N}: sizes {[len(c) for c in carriers]}")
    return FinFunctor(N, tuple(carriers), transitions, rule, name)


def validate_functor(functor: FinFunctor) -> LawReport:
    """Exhaustive identity and composition checks over every map within the bound"""
    report = new_report(f"functor {functor.name}")
    N = functor.max_arity
    for law in ("totality", "identity", "composition"):
        report.law(law)

    tables: Dict[Tuple[int, int, Tuple[int, ...]], np.ndarray] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                report.count("totality")
                table = functor.transitions.get(f)
                if table is None or len(table) != functor.size(m) or any(not 0 <= v < functor.size(n) for v in table):
                    report.record("totality", {"map": map_witness(f), "transition": None if table is None else list(table)},
                                  f"F({list(f.images)}) is missing or does not land in F({n})")
                    continue
                tables[f.key] = np.asarray(table, dtype=np.int64)

    for n in range(N + 1):
        report.count("identity")
        table = tables.get(FinMap.identity(n).key)
        if table is None:
            continue
        moved = np.nonzero(table != np.arange(len(table)))[0]
        if moved.size:
            report.record("identity", {"arity": n, "element": int(moved[0]), "image": int(table[moved[0]])},
                          f"F(id_{n}) moves element {int(moved[0])}")

    for l in range(N + 1):
        for m in range(N + 1):
            for f in all_maps(l, m):
                first = tables.get(f.key)
                if first is None:
                    continue
                for n in range(N + 1):
                    for g in all_maps(m, n):
                        second = tables.get(g.key)
                        composite = tables.get((l, n, compose_images(g.images, f.images)))
                        if second is None or composite is None:
                            continue
                        report.count("composition")
                        mismatch = np.nonzero(second[first] != composite)[0]
                        if mismatch.size:
                            report.record("composition", {
                                "f": map_witness(f), "g": map_witness(g), "element": int(mismatch[0]),
                            }, f"F(g∘f) ≠ F(g)∘F(f) for f = {list(f.images)}, g = {list(g.images)}")
    logger.info(f"Validated {functor.name}: {sum(report.instances.values())} instances, passed={report.passed}")
    return report


@dataclass(frozen=True)
class QcEvaluation:
    points: Tuple[Any, ...]
    elements: Tuple[Label, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def _points(points: Union[int, Sequence[Any]]) -> Tuple[Any, ...]:
    if isinstance(points, int):
        return tuple(range(1, points + 1))
    return tuple(points)


def evaluate_qc(functor: FinFunctor, points: Union[int, Sequence[Any]]) -> QcEvaluation:
    """F(X) read off F(k) along the order bijection X ≅ k̄"""
    points = _points(points)
    k = len(points)
    if k > functor.max_arity:
        raise CapacityError(
            f"cannot evaluate {functor.name} at a {k}-element set: max arity is {functor.max_arity}",
            details={"set_size": k, "max_arity": functor.max_arity},
        )
    return QcEvaluation(points, functor.carrier(k))


def _common_arity(*functors: FinFunctor) -> int:
    arities = {f.max_arity for f in functors}
    if len(arities) != 1:
        raise DomainError("functors must share their max arity", details={"max_arities": [f.max_arity for f in functors]})
    return arities.pop()


@dataclass(frozen=True, eq=False)
class ComposedRule:
    outer: FinFunctor
    inner: FinFunctor

    def size(self, n: int) -> int:
        return self.outer.size(self.inner.size(n))

    def carrier(self, n: int) -> Sequence[Label]:
        return self.outer.carrier(self.inner.size(n))

    def apply(self, f: FinMap, element: Label) -> Label:
        pushed = _pushforward(self.inner, f)
        source = self.outer.position(pushed.dom.size, element)
        return self.outer.carrier(pushed.cod.size)[self.outer.transition(pushed)[source]]


def _pushforward(functor: FinFunctor, f: FinMap) -> FinMap:
    """G(f) as a map between standard sets"""
    table = functor.transition(f)
    if table is None:
        raise PreconditionError(
            f"{functor.name} has no transition for {list(f.images)}",
            details={"functor": functor.name, "map": map_witness(f)},
        )
    return FinMap.of(tuple(i + 1 for i in table), functor.size(f.cod.size))


def compose(outer: FinFunctor, inner: FinFunctor) -> FinFunctor:
    """(F∘G)(n) = F(G(n)), transitions F(G(f))"""
    N = _common_arity(outer, inner)
    sizes = [inner.size(n) for n in range(N + 1)]
    logger.info(f"Composing {outer.name} ∘ {inner.name} at N={N}: inner sizes {sizes}")
    carriers = [outer.carrier(s) for s in sizes]
    transitions: Dict[FinMap, Transition] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                pushed = _pushforward(inner, f)
                table = outer.transition(pushed)
                if table is None:
                    raise PreconditionError(
                        f"{outer.name} has no transition for {list(pushed.images)}",
                        details={"functor": outer.name, "map": map_witness(pushed)},
                    )
                transitions[f] = table
    rule = ComposedRule(outer, inner) if outer.rule is not None and inner.rule is not None else None
    return FinFunctor(N, tuple(carriers), transitions, rule, name=f"{outer.name}∘{inner.name}")


@dataclass(frozen=True, eq=False)
class ProductRule:
    left: FinFunctor
    right: FinFunctor

    def size(self, n: int) -> int:
        return self.left.size(n) * self.right.size(n)

    def carrier(self, n: int) -> Sequence[Label]:
        return tuple(itertools.product(self.left.carrier(n), self.right.carrier(n)))

    def apply(self, f: FinMap, element: Label) -> Label:
        a, b = element
        n = f.cod.size
        moved_a = self.left.transition(f)[self.left.position(f.dom.size, a)]
        moved_b = self.right.transition(f)[self.right.position(f.dom.size, b)]
        return (self.left.carrier(n)[moved_a], self.right.carrier(n)[moved_b])


def product(left: FinFunctor, right: FinFunctor) -> FinFunctor:
    """Pointwise product, which is the tensor product of q_c"""
    N = _common_arity(left, right)
    carriers = [tuple(itertools.product(left.carriers[n], right.carriers[n])) for n in range(N + 1)]
    transitions: Dict[FinMap, Transition] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            width = len(right.carriers[n])
            for f in all_maps(m, n):
                a, b = left.transitions.get(f), right.transitions.get(f)
                if a is None or b is None:
                    continue
                table = np.asarray(a, dtype=np.int64)[:, None] * width + np.asarray(b, dtype=np.int64)[None, :]
                transitions[f] = tuple(int(v) for v in table.ravel())
    rule = ProductRule(left, right) if left.rule is not None and right.rule is not None else None
    return FinFunctor(N, tuple(carriers), transitions, rule, name=f"{left.name}×{right.name}")


@dataclass(frozen=True, eq=False)
class AlgebraicMonad:
    functor: FinFunctor
    unit: int
    tables: Dict[Tuple[int, int], SubstitutionTable] = field(default_factory=dict)
    rule: Optional[MonadRule] = None
    name: str = "monad"
    _memo: Dict[Tuple[int, ...], Optional[int]] = field(default_factory=dict, init=False, repr=False)

    @property
    def max_arity(self) -> int:
        return self.functor.max_arity

    def substitute(self, p: int, n: int, t: int, us: Sequence[int]) -> Optional[int]:
        """μ_{p,n}(t; u_1, ..., u_p), or None where the monad says nothing"""
        key = (t,) + tuple(us)
        table = self.tables.get((p, n))
        if table is not None and key in table:
            value = table[key]
            return value if 0 <= value < self.functor.size(n) else None
        if self.rule is None:
            return None
        memo_key = (p, n) + key
        if memo_key not in self._memo:
            carrier_p, carrier_n = self.functor.carrier(p), self.functor.carrier(n)
            label = self.rule.substitute(n, carrier_p[t], [carrier_n[u] for u in us])
            self._memo[memo_key] = self.functor.position(n, label)
        return self._memo[memo_key]

    def generator(self, n: int, i: int) -> Optional[int]:
        """Σ(ι_i)(ε) for ι_i: 1̄ → n̄ picking i"""
        return self.functor.apply(FinMap.of((i,), n), self.unit)

    def with_entry(self, p: int, n: int, key: Sequence[int], value: int) -> "AlgebraicMonad":
        tables = dict(self.tables)
        table = dict(tables.get((p, n), {}))
        table[tuple(key)] = value
        tables[(p, n)] = table
        return replace(self, tables=tables)

    def table(self, p: int, n: int) -> SubstitutionTable:
        """Every entry of μ_{p,n}, computing through the rule where needed"""
        size = self.functor.size
        entries: SubstitutionTable = {}
        for key in itertools.product(range(size(p)), *([range(size(n))] * p)):
            value = self.substitute(p, n, key[0], key[1:])
            if value is not None:
                entries[key] = value
        return entries


def monad_from_rule(functor: FinFunctor, rule: MonadRule, name: str = "monad") -> AlgebraicMonad:
    unit = functor.position(1, rule.unit())
    if unit is None:
        raise DomainError(f"unit {rule.unit()!r} of {name} is not an element of Σ(1)", details={"monad": name})
    return AlgebraicMonad(functor, unit, {}, rule, name)


def monad_check(monad: AlgebraicMonad) -> LawReport:
    report = new_report(f"monad {monad.name}")
    functor = monad.functor
    N = monad.max_arity
    size = functor.size
    mu = monad.substitute
    for law in ("totality", "left_unit", "right_unit", "associativity", "naturality", "substitution_compatibility"):
        report.law(law)
    logger.info(f"Checking monad laws for {monad.name} at N={N}, sizes {functor.sizes()}")

    unit_ok = 0 <= monad.unit < size(1)
    if not unit_ok:
        report.record("totality", {"unit": monad.unit}, "unit ε is not an element of Σ(1)")

    for p in range(N + 1):
        for n in range(N + 1):
            for key in law_instances(report, "totality", [range(size(p))] + [range(size(n))] * p, f"({p},{n})"):
                if mu(p, n, key[0], key[1:]) is None:
                    report.record("totality", {"p": p, "n": n, "t": key[0], "us": list(key[1:])},
                                  f"μ_{{{p},{n}}} is undefined or out of range at {list(key)}")

    if unit_ok:
        for n in range(N + 1):
            for (t,) in law_instances(report, "left_unit", [range(size(n))], str(n)):
                value = mu(1, n, monad.unit, (t,))
                if value is not None and value != t:
                    report.record("left_unit", {"n": n, "t": t, "got": value}, f"μ_{{1,{n}}}(ε; t) ≠ t")
        for p in range(N + 1):
            generators = [monad.generator(p, i) for i in range(1, p + 1)]
            if any(g is None for g in generators):
                continue
            for (t,) in law_instances(report, "right_unit", [range(size(p))], str(p)):
                value = mu(p, p, t, generators)
                if value is not None and value != t:
                    report.record("right_unit", {"p": p, "t": t, "got": value},
                                  f"μ_{{{p},{p}}}(t; generators) ≠ t")

    for q in range(N + 1):
        for p in range(N + 1):
            for n in range(N + 1):
                ranges = [range(size(q))] + [range(size(p))] * q + [range(size(n))] * p
                for key in law_instances(report, "associativity", ranges, f"({q},{p},{n})"):
                    t, us, vs = key[0], key[1:1 + q], key[1 + q:]
                    inner = [mu(p, n, u, vs) for u in us]
                    middle = mu(q, p, t, us)
                    if middle is None or any(v is None for v in inner):
                        continue
                    lhs, rhs = mu(q, n, t, inner), mu(p, n, middle, vs)
                    if lhs is not None and rhs is not None and lhs != rhs:
                        report.record("associativity", {
                            "q": q, "p": p, "n": n, "t": t, "us": list(us), "vs": list(vs), "lhs": lhs, "rhs": rhs,
                        }, f"nested substitution disagrees at (q,p,n) = ({q},{p},{n})")

    for p in range(N + 1):
        for n in range(N + 1):
            for target in range(N + 1):
                maps = all_maps(n, target)
                ranges = [maps, range(size(p))] + [range(size(n))] * p
                for key in law_instances(report, "naturality", ranges, f"({p},{n}→{target})"):
                    f, t, us = key[0], key[1], key[2:]
                    table = functor.transition(f)
                    value = mu(p, n, t, us)
                    if table is None or value is None:
                        continue
                    lhs = mu(p, target, t, [table[u] for u in us])
                    if lhs is not None and lhs != table[value]:
                        report.record("naturality", {
                            "p": p, "map": map_witness(f), "t": t, "us": list(us), "lhs": lhs, "rhs": table[value],
                        }, f"μ_{{{p},-}} does not commute with Σ({list(f.images)})")

    for p in range(N + 1):
        for wider in range(N + 1):
            for n in range(N + 1):
                maps = all_maps(p, wider)
                ranges = [maps, range(size(p))] + [range(size(n))] * wider
                for key in law_instances(report, "substitution_compatibility", ranges, f"({p}→{wider},{n})"):
                    g, t, vs = key[0], key[1], key[2:]
                    table = functor.transition(g)
                    if table is None:
                        continue
                    lhs = mu(wider, n, table[t], vs)
                    rhs = mu(p, n, t, [vs[j - 1] for j in g.images])
                    if lhs is not None and rhs is not None and lhs != rhs:
                        report.record("substitution_compatibility", {
                            "map": map_witness(g), "n": n, "t": t, "vs": list(vs), "lhs": lhs, "rhs": rhs,
                        }, f"μ(Σ(g)t; v) ≠ μ(t; v∘g) for g = {list(g.images)}")
    return report


@dataclass(frozen=True, eq=False)
class SigmaModule:
    monad: AlgebraicMonad
    labels: Tuple[Any, ...]
    action: Tuple[int, ...]
    name: str = "module"
    # carrier has more than max_arity elements; α and the checks go through the rules
    partial: bool = False

    @property
    def size(self) -> int:
        return len(self.labels)


def _action_map(module: SigmaModule, values: Sequence[int]) -> FinMap:
    return FinMap.of(tuple(v + 1 for v in values), module.size)


def module_check(module: SigmaModule) -> LawReport:
    report = new_report(f"module {module.name} over {module.monad.name}")
    monad = module.monad
    functor = monad.functor
    N = monad.max_arity
    m = module.size
    for law in ("totality", "unit", "associativity", "finitary"):
        report.law(law)

    if m > N:
        if monad.rule is None or functor.rule is None:
            raise CapacityError(f"module carrier has {m} elements, past max arity {N}", details={"size": m, "max_arity": N})
        report.notice(f"carrier has {m} elements, past max arity {N}: Σ({m}) and μ_{{p,{m}}} come from the rules")
    K = functor.size(m)
    report.count("totality", K)
    if len(module.action) != K:
        report.record("totality", {"expected_length": K, "length": len(module.action)},
                      f"α needs one value for each of the {K} elements of Σ({m})")
        return report
    for T, value in enumerate(module.action):
        if not 0 <= value < m:
            report.record("totality", {"element": T, "value": value}, f"α sends element {T} of Σ({m}) outside M")
    if report.failures:
        return report
    alpha = module.action

    for i in range(1, m + 1):
        report.count("unit")
        generator = monad.generator(m, i)
        if generator is not None and alpha[generator] != i - 1:
            report.record("unit", {"point": i, "got": alpha[generator] + 1}, f"α(ε_M({i})) ≠ {i}")

    # monadic form on Σ(Σ(M)) = Σ(K)
    try:
        outer = functor.carrier(K)
    except CapacityError:
        report.notice(f"associativity: Σ(Σ(M)) needs arity {K} past the bound {N}; only the finitary form was checked")
        outer = None
    if outer is not None:
        pushed = functor.transition(_action_map(module, alpha))
        every = tuple(range(K))
        for (T,) in law_instances(report, "associativity", [range(len(outer))], f"Σ({K})"):
            multiplied = monad.substitute(K, m, T, every)
            if pushed is None or multiplied is None:
                continue
            lhs, rhs = alpha[pushed[T]], alpha[multiplied]
            if lhs != rhs:
                report.record("associativity", {"element": T, "lhs": lhs, "rhs": rhs}, "α∘Σ(α) ≠ α∘μ_M")

    for p in range(N + 1):
        for key in law_instances(report, "finitary", [range(functor.size(p))] + [range(K)] * p, str(p)):
            t, us = key[0], key[1:]
            substituted = monad.substitute(p, m, t, us)
            collapsed = functor.apply(_action_map(module, [alpha[u] for u in us]), t)
            if substituted is None or collapsed is None:
                continue
            if alpha[substituted] != alpha[collapsed]:
                report.record("finitary", {"p": p, "t": t, "us": list(us), "lhs": alpha[substituted], "rhs": alpha[collapsed]},
                              f"α(μ_{{{p},{m}}}(t; u)) ≠ α(Σ(α∘u)(t))")
    return report


def free_module(monad: AlgebraicMonad, points: Union[int, Sequence[Any]]) -> SigmaModule:
    """Σ(S) acted on by substitution; past the bound Σ(Σ(S)) is read through the rules and the module is partial"""
    points = _points(points)
    s = len(points)
    N = monad.max_arity
    if s > N:
        raise CapacityError(f"free module on {s} generators is past max arity {N}", details={"generators": s, "max_arity": N})
    K = monad.functor.size(s)
    partial = K > N
    if partial and (monad.rule is None or monad.functor.rule is None):
        raise CapacityError(
            f"free module carrier Σ({s}) has {K} elements, past max arity {N}, and {monad.name} has no rule",
            details={"generators": s, "carrier": K, "max_arity": N},
        )
    every = tuple(range(K))
    action = []
    for T in range(monad.functor.size(K)):
        value = monad.substitute(K, s, T, every)
        if value is None:
            raise PreconditionError(f"μ_{{{K},{s}}} is undefined at {T}", details={"p": K, "n": s, "t": T})
        action.append(value)
    if partial:
        logger.warning(f"Free {monad.name}-module on {s} generators has {K} elements, past max arity {N}")
    else:
        logger.info(f"Free {monad.name}-module on {s} generators: {K} elements")
    return SigmaModule(monad, monad.functor.carrier(s), tuple(action), name=f"free {monad.name}-module on {s}",
                       partial=partial)


def module_morphisms(source: SigmaModule, target: SigmaModule) -> List[Tuple[int, ...]]:
    """Every map h with h∘α_A = α_B∘Σ(h), as 0-based image tuples"""
    if source.monad is not target.monad:
        raise DomainError("module morphisms need both modules over the same monad",
                          details={"source": source.monad.name, "target": target.monad.name})
    functor = source.monad.functor
    found = []
    for h in itertools.product(range(target.size), repeat=source.size):
        pushed = functor.transition(_action_map(target, h))
        if pushed is None:
            continue
        if all(h[source.action[T]] == target.action[pushed[T]] for T in range(functor.size(source.size))):
            found.append(h)
    return found
