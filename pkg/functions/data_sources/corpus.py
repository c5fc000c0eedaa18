"""
Builtin example structures.

Every entry is rebuilt on demand at whatever max arity the caller asks for;
nothing is cached here because the tables themselves are cheap next to the
law checks run on them. Each entry knows its calculus, what kind of thing it
builds, the carrier size it should have in each arity and whether its checker
is expected to pass, so tests can sweep the whole corpus without knowing any
entry by name.

Com is shipped without nullary operations. With Com_0 non-empty the
composition product has contributions from every s in every arity and nothing
composed with it would stay finite.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config.calculus_config import ConfigurationManager
from ..core.algebrads import CommMonoid, QaAlgebrad, algebrad_from_rule
from ..core.algtheory import AlgebraicMonad, FinFunctor, free_module, functor_from_rule, monad_from_rule
from ..core.errors import CapacityError, UnknownEntryError
from ..core.finset import FinMap
from ..core.groups import symmetric_group
from ..core.gsets import empty_gset, regular_gset, trivial_gset
from ..core.operads import Operad, OperadAlgebra, operad_parts
from ..core.presheaves import CommAlgObject, FinPresheaf, constant_presheaf, representable_presheaf, subsets, \
    tabulate_presheaf, unit_qa
from ..core.symseq import SymSeq, unit_comp, unit_tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    calculus: str
    kind: str
    description: str
    builder: Callable[[int], Any]
    expected_size: Optional[Callable[[int], int]] = None
    expected_pass: bool = True
    # smallest max arity the entry can be built at
    min_arity: int = 1


# q_o


def com_positive(N: int) -> Operad:
    carriers = [trivial_gset(n, 1) if n >= 1 else empty_gset(0) for n in range(N + 1)]
    seq = SymSeq(N, tuple(carriers), name="Com≥1")
    subs = {parts: {(0,) * (len(parts) + 1): 0}
            for parts in operad_parts(N) if parts and all(p >= 1 for p in parts)}
    return Operad(seq, 0, subs, name="Com≥1")


def associative(N: int) -> Operad:
    """Σ_n = S_n; substituting orders the blocks by x and each block by y_i"""
    seq = SymSeq(N, tuple(regular_gset(n) for n in range(N + 1)), name="Ass")
    subs: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
    for parts in operad_parts(N):
        s, n = len(parts), sum(parts)
        blocks = [symmetric_group(p).elements for p in parts]
        target = symmetric_group(n)
        table = {}
        for x_index, x in enumerate(symmetric_group(s).elements):
            before = [sum(parts[k] for k in range(s) if x[k] < x[i]) for i in range(s)]
            for ys in itertools.product(*[range(len(b)) for b in blocks]):
                images = tuple(before[i] + blocks[i][y][j] for i, y in enumerate(ys) for j in range(parts[i]))
                table[(x_index,) + ys] = target.index[images]
        subs[parts] = table
    return Operad(seq, 0, subs, name="Ass")


def unit_operad(N: int) -> Operad:
    """X_o with its only possible structure"""
    subs = {(1,): {(0, 0): 0}} if N >= 1 else {}
    return Operad(unit_comp(N), 0, subs, name="X_o")


def com_positive_terminal(N: int) -> OperadAlgebra:
    operad = com_positive(N)
    actions = {n: {(0,) * (n + 1): 0} for n in range(1, N + 1)}
    return OperadAlgebra(operad, 1, actions, labels=("*",), name="terminal")


# q_c


class IdentityRule:
    def size(self, n: int) -> int:
        return n

    def carrier(self, n: int) -> List[int]:
        return list(range(1, n + 1))

    def apply(self, f: FinMap, element: int) -> int:
        return f(element)

    def unit(self) -> int:
        return 1

    def substitute(self, n: int, t: int, us: Sequence[int]) -> int:
        return us[t - 1]


class PointedRule:
    """Σ(n) = n̄ ⊔ {*}, the point surviving every substitution"""

    POINT = "*"

    def size(self, n: int) -> int:
        return n + 1

    def carrier(self, n: int) -> List[Any]:
        return list(range(1, n + 1)) + [self.POINT]

    def apply(self, f: FinMap, element: Any) -> Any:
        return self.POINT if element == self.POINT else f(element)

    def unit(self) -> int:
        return 1

    def substitute(self, n: int, t: Any, us: Sequence[Any]) -> Any:
        return self.POINT if t == self.POINT else us[t - 1]


class PowersetRule:
    """Finite subsets, multiplication by union"""

    def size(self, n: int) -> int:
        return 2 ** n

    def carrier(self, n: int) -> List[Tuple[int, ...]]:
        return subsets(n)

    def apply(self, f: FinMap, element: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(sorted({f(i) for i in element}))

    def unit(self) -> Tuple[int, ...]:
        return (1,)

    def substitute(self, n: int, t: Tuple[int, ...], us: Sequence[Tuple[int, ...]]) -> Tuple[int, ...]:
        return tuple(sorted(set().union(*(us[i - 1] for i in t))))


@dataclass(frozen=True)
class RepresentableRule:
    """h_k: S ↦ S^k"""
    k: int

    def size(self, n: int) -> int:
        return n ** self.k

    def carrier(self, n: int) -> List[Tuple[int, ...]]:
        return list(itertools.product(range(1, n + 1), repeat=self.k))

    def apply(self, f: FinMap, element: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(f(i) for i in element)


def identity_monad(N: int) -> AlgebraicMonad:
    rule = IdentityRule()
    return monad_from_rule(functor_from_rule(rule, N, "Id"), rule, "identity")


def pointed_monad(N: int) -> AlgebraicMonad:
    rule = PointedRule()
    return monad_from_rule(functor_from_rule(rule, N, "Maybe"), rule, "pointed")


def powerset_monad(N: int) -> AlgebraicMonad:
    rule = PowersetRule()
    return monad_from_rule(functor_from_rule(rule, N, "P"), rule, "powerset")


def representable_functor(k: int, N: int) -> FinFunctor:
    return functor_from_rule(RepresentableRule(k), N, f"h{k}")


# q_a and monoids


def make_monoid(labels: Sequence[Any], operation: Callable[[Any, Any], Any], unit: Any, name: str) -> CommMonoid:
    labels = tuple(labels)
    index = {label: i for i, label in enumerate(labels)}
    table = np.array([[index[operation(a, b)] for b in labels] for a in labels], dtype=np.int64)
    return CommMonoid(labels, table, index[unit], name)


def trivial_monoid() -> CommMonoid:
    return make_monoid((0,), lambda a, b: 0, 0, "trivial")


def and_monoid() -> CommMonoid:
    return make_monoid((0, 1), lambda a, b: a & b, 1, "and")


def xor_monoid() -> CommMonoid:
    return make_monoid((0, 1), lambda a, b: a ^ b, 0, "xor")


def functions_presheaf(monoid: CommMonoid, N: int) -> FinPresheaf:
    """Σ(n) = Cⁿ with restriction by precomposition"""
    k = monoid.size
    return tabulate_presheaf(
        lambda n: list(itertools.product(range(k), repeat=n)),
        lambda f, c: tuple(c[i - 1] for i in f.images),
        N,
        generator_degree=k,
        name=f"{monoid.name}^-",
    )


def functions_algebra(monoid: CommMonoid, N: int) -> CommAlgObject:
    """Concatenation of tuples, E_0 the empty tuple"""
    sheaf = functions_presheaf(monoid, N)
    mult = {}
    for p in range(N + 1):
        for q in range(N + 1 - p):
            mult[(p, q)] = {(a, b): sheaf.position(p + q, x + y)
                            for a, x in enumerate(sheaf.carriers[p]) for b, y in enumerate(sheaf.carriers[q])}
    return CommAlgObject(sheaf, mult, sheaf.position(0, ()), name=f"functions into {monoid.name}")


@dataclass(frozen=True)
class FunctionsAlgebradRule:
    """μ(c; d_1, ..., d_n) = c_1·d_1 ++ … ++ c_n·d_n, scaling each block pointwise"""
    monoid: CommMonoid

    def unit(self) -> Tuple[int]:
        return (self.monoid.unit,)

    def substitute(self, parts: Sequence[int], x: Tuple[int, ...], ys: Sequence[Tuple[int, ...]]) -> Tuple[int, ...]:
        return tuple(self.monoid.multiply(c, d) for c, block in zip(x, ys) for d in block)


def functions_algebrad(monoid: CommMonoid, N: int) -> QaAlgebrad:
    return algebrad_from_rule(functions_algebra(monoid, N), FunctionsAlgebradRule(monoid), name=f"functions-{monoid.name}")


class TerminalAlgebradRule:
    def unit(self) -> int:
        return 0

    def substitute(self, parts: Sequence[int], x: int, ys: Sequence[int]) -> int:
        return 0


def terminal_algebrad(N: int) -> QaAlgebrad:
    sheaf = constant_presheaf(1, N, name="1")
    mult = {(p, q): {(0, 0): 0} for p in range(N + 1) for q in range(N + 1 - p)}
    algebra = CommAlgObject(sheaf, mult, 0, name="terminal")
    return algebrad_from_rule(algebra, TerminalAlgebradRule(), name="terminal")


def _entries() -> List[CorpusEntry]:
    return [
        CorpusEntry("qo/com-pos", "qo", "operad", "Com≥1: one operation in every positive arity",
                    com_positive, lambda n: 1 if n >= 1 else 0),
        CorpusEntry("qo/ass", "qo", "operad", "Ass: Σ_n the regular S_n-set, substitution by block order",
                    associative, math.factorial),
        CorpusEntry("qo/unit", "qo", "operad", "X_o = (∅, 1, ∅, …), the unit of the composition product",
                    unit_operad, lambda n: 1 if n == 1 else 0),
        CorpusEntry("qo/tensor-unit", "qo", "symseq", "Unit_⊗ = (1, ∅, ∅, …)",
                    unit_tensor, lambda n: 1 if n == 0 else 0),
        CorpusEntry("qo/com-pos-terminal", "qo", "algebra", "the one-point Com≥1-algebra",
                    com_positive_terminal),
        CorpusEntry("qc/identity", "qc", "monad", "identity monad Σ(n) = n̄",
                    identity_monad, lambda n: n),
        CorpusEntry("qc/pointed", "qc", "monad", "pointed-set monad Σ(n) = n̄ ⊔ {*}",
                    pointed_monad, lambda n: n + 1),
        CorpusEntry("qc/powerset", "qc", "monad", "finite powerset (semilattice) monad, μ = union",
                    powerset_monad, lambda n: 2 ** n),
        CorpusEntry("qc/h1", "qc", "functor", "representable h_1: S ↦ S",
                    lambda N: representable_functor(1, N), lambda n: n),
        CorpusEntry("qc/h2", "qc", "functor", "representable h_2: S ↦ S²",
                    lambda N: representable_functor(2, N), lambda n: n ** 2),
        CorpusEntry("qc/h3", "qc", "functor", "representable h_3: S ↦ S³",
                    lambda N: representable_functor(3, N), lambda n: n ** 3),
        CorpusEntry("qc/pointed-free-2", "qc", "module", "free pointed-set module on two generators",
                    lambda N: free_module(pointed_monad(N), 2), min_arity=3),
        CorpusEntry("qa/terminal", "qa", "algebrad", "terminal algebrad, every carrier a point",
                    terminal_algebrad, lambda n: 1),
        CorpusEntry("qa/monoid-functions", "qa", "algebrad", "functions algebrad over ({0,1}, ∧)",
                    lambda N: functions_algebrad(and_monoid(), N), lambda n: 2 ** n),
        CorpusEntry("qa/monoid-functions-xor", "qa", "algebrad", "functions algebrad over (Z/2, +)",
                    lambda N: functions_algebrad(xor_monoid(), N), lambda n: 2 ** n),
        CorpusEntry("qa/unit", "qa", "presheaf", "Unit_⊗ = h_0",
                    unit_qa, lambda n: 1 if n == 0 else 0),
        CorpusEntry("qa/h1", "qa", "presheaf", "representable h_1",
                    lambda N: representable_presheaf(1, N), lambda n: 1),
        CorpusEntry("qa/h2", "qa", "presheaf", "representable h_2",
                    lambda N: representable_presheaf(2, N), lambda n: 2 ** n),
        CorpusEntry("monoid/trivial", "qa", "monoid", "the one-element monoid", lambda N: trivial_monoid()),
        CorpusEntry("monoid/and", "qa", "monoid", "({0,1}, ∧, 1)", lambda N: and_monoid()),
        CorpusEntry("monoid/xor", "qa", "monoid", "(Z/2, +, 0)", lambda N: xor_monoid()),
    ]


CORPUS: Dict[str, CorpusEntry] = {entry.id: entry for entry in _entries()}


def entries() -> List[CorpusEntry]:
    return list(CORPUS.values())


def get_entry(entry_id: str) -> CorpusEntry:
    entry = CORPUS.get(entry_id)
    if entry is None:
        raise UnknownEntryError(f"unknown corpus id {entry_id!r}", details={"id": entry_id, "known": sorted(CORPUS)})
    return entry


def build(entry_id: str, max_arity: Optional[int] = None) -> Any:
    entry = get_entry(entry_id)
    N = ConfigurationManager.active().max_arity if max_arity is None else max_arity
    if N < entry.min_arity:
        raise CapacityError(f"{entry_id} needs max arity at least {entry.min_arity}",
                            details={"id": entry_id, "max_arity": N, "min_arity": entry.min_arity})
    logger.info(f"Building corpus entry {entry_id} at N={N}")
    return entry.builder(N)
