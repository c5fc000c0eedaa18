"""
Finite-Set Presheaves

The algebra-classifier calculus works with contravariant functors on finite
sets. Like the covariant side we tabulate them on standard sets only: P(n)
is a tuple of labels, and every f: m̄ → n̄ inside the bound gets a restriction
P(f): P(n) → P(m) stored as a tuple of indices into P(m).

Subsets U of a standard set are read on the standard set |U| through the
order-preserving bijection, which is how the Day-style tensor
(P⊗Q)(W) = ⊔_{U⊔V=W} P(U) × Q(V) and the multiplications M_{U,V} of a
commutative algebra object become finite tables. On standard sets U is always
the first block: M_{p,q}: Σ(p) × Σ(q) → Σ(p+q).

Composition X∘Y with Y a commutative algebra glues ⊔_n X(n) × Y^{⊗n}(V) along
every φ: m̄ → n̄, one arrow restricting ξ along φ, the other merging the
blocks of each fibre of φ with M (E_0 for empty fibres). The sum over n has
no upper end because Y(∅) is never empty, so we only compose when X is
supported in bounded degree or generated there.
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, UnboundedCompositionError
from .finset import FinMap, all_maps, block_order, block_sum, compose_images, restrict_to_fibres, weak_compositions
from .quotients import UnionFind, FiniteQuotient
from .reports import LawReport, law_instances, new_report
from ..config.calculus_config import ConfigurationManager

logger = logging.getLogger(__name__)

Label = Hashable
Restriction = Tuple[int, ...]
Table = Dict[Tuple[int, ...], int]


def map_witness(f: FinMap) -> Dict[str, Any]:
    return {"dom": f.dom.size, "cod": f.cod.size, "images": list(f.images)}


@dataclass(frozen=True, eq=False)
class FinPresheaf:
    max_arity: int
    carriers: Tuple[Tuple[Label, ...], ...]
    restrictions: Dict[FinMap, Restriction]
    support_bound: Optional[int] = None
    # every element is a restriction of one living in degree <= generator_degree
    generator_degree: Optional[int] = None
    name: str = "presheaf"
    _positions: Dict[int, Dict[Label, int]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "carriers", tuple(tuple(c) for c in self.carriers))
        if len(self.carriers) != self.max_arity + 1:
            raise DomainError(
                f"presheaf truncated at {self.max_arity} needs {self.max_arity + 1} carriers, got {len(self.carriers)}",
                details={"max_arity": self.max_arity, "carriers": len(self.carriers)},
            )

    def size(self, n: int) -> int:
        return len(self.carriers[n])

    def sizes(self) -> List[int]:
        return [len(c) for c in self.carriers]

    def position(self, n: int, label: Label) -> Optional[int]:
        if n not in self._positions:
            self._positions[n] = {element: i for i, element in enumerate(self.carriers[n])}
        return self._positions[n].get(label)

    def restrict(self, f: FinMap, element: int) -> Optional[int]:
        table = self.restrictions.get(f)
        if table is None or not 0 <= element < len(table):
            return None
        return table[element]

    @property
    def cutoff(self) -> Optional[int]:
        """Degree past which composition and evaluation add nothing new"""
        return self.support_bound if self.support_bound is not None else self.generator_degree


def tabulate_presheaf(carrier: Callable[[int], Sequence[Label]], restrict: Callable[[FinMap, Label], Label],
                      max_arity: Optional[int] = None, support_bound: Optional[int] = None,
                      generator_degree: Optional[int] = None, name: str = "presheaf") -> FinPresheaf:
    N = ConfigurationManager.active().max_arity if max_arity is None else max_arity
    carriers = [tuple(carrier(n)) for n in range(N + 1)]
    positions = [{label: i for i, label in enumerate(c)} for c in carriers]
    restrictions: Dict[FinMap, Restriction] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                restrictions[f] = tuple(positions[m][restrict(f, label)] for label in carriers[n])
    return FinPresheaf(N, tuple(carriers), restrictions, support_bound, generator_degree, name)


def validate_presheaf(presheaf: FinPresheaf) -> LawReport:
    report = new_report(f"presheaf {presheaf.name}")
    N = presheaf.max_arity
    for law in ("totality", "identity", "composition"):
        report.law(law)

    tables: Dict[Tuple[int, int, Tuple[int, ...]], np.ndarray] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                report.count("totality")
                table = presheaf.restrictions.get(f)
                if table is None or len(table) != presheaf.size(n) or any(not 0 <= v < presheaf.size(m) for v in table):
                    report.record("totality", {"map": map_witness(f), "restriction": None if table is None else list(table)},
                                  f"P({list(f.images)}) is missing or does not land in P({m})")
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
                          f"P(id_{n}) moves element {int(moved[0])}")

    # P(g∘f) = P(f)∘P(g)
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
                        mismatch = np.nonzero(first[second] != composite)[0]
                        if mismatch.size:
                            report.record("composition", {
                                "f": map_witness(f), "g": map_witness(g), "element": int(mismatch[0]),
                            }, f"P(g∘f) ≠ P(f)∘P(g) for f = {list(f.images)}, g = {list(g.images)}")

    if presheaf.support_bound is not None:
        report.law("support_bound")
        for n in range(presheaf.support_bound + 1, N + 1):
            report.count("support_bound")
            if presheaf.size(n):
                report.record("support_bound", {"arity": n, "size": presheaf.size(n)},
                              f"P({n}) is not empty above the support bound {presheaf.support_bound}")
    return report


def constant_presheaf(k: int = 1, max_arity: Optional[int] = None, name: Optional[str] = None) -> FinPresheaf:
    return tabulate_presheaf(lambda n: tuple(range(k)), lambda f, x: x, max_arity,
                             generator_degree=1 if k else 0, name=name or f"const{k}")


def representable_presheaf(k: int, max_arity: Optional[int] = None) -> FinPresheaf:
    """h_k: P(n) = Hom(n̄, k̄), restriction by precomposition"""
    def carrier(n: int) -> List[Tuple[int, ...]]:
        return list(itertools.product(range(1, k + 1), repeat=n))

    def restrict(f: FinMap, y: Tuple[int, ...]) -> Tuple[int, ...]:
        return compose_images(y, f.images)

    return tabulate_presheaf(carrier, restrict, max_arity, support_bound=0 if k == 0 else None,
                             generator_degree=k, name=f"h{k}")


def unit_qa(max_arity: Optional[int] = None) -> FinPresheaf:
    """Unit_⊗ = h_0: one element in degree 0, nothing above"""
    presheaf = representable_presheaf(0, max_arity)
    return replace(presheaf, name="unit_qa")


def _common_arity(*presheaves: FinPresheaf) -> int:
    arities = {p.max_arity for p in presheaves}
    if len(arities) != 1:
        raise DomainError("presheaves must share their max arity", details={"max_arities": [p.max_arity for p in presheaves]})
    return arities.pop()


def subsets(n: int) -> List[Tuple[int, ...]]:
    """Subsets of n̄ as sorted tuples, by size and then lexicographically"""
    return [combo for size in range(n + 1) for combo in itertools.combinations(range(1, n + 1), size)]


def complement(subset: Sequence[int], n: int) -> Tuple[int, ...]:
    chosen = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in chosen)


def day_tensor(left: FinPresheaf, right: FinPresheaf) -> FinPresheaf:
    """(P⊗Q)(W) = ⊔_{U⊔V=W} P(U) × Q(V), elements (U, a, b)"""
    N = _common_arity(left, right)
    logger.info(f"Day tensor {left.name} ⊗ {right.name} at N={N}")
    keys: List[List[Tuple[Tuple[int, ...], int, int]]] = []
    for n in range(N + 1):
        keys.append([(U, a, b) for U in subsets(n)
                     for a in range(left.size(len(U))) for b in range(right.size(n - len(U)))])
    positions = [{key: i for i, key in enumerate(level)} for level in keys]

    restrictions: Dict[FinMap, Restriction] = {}
    for m in range(N + 1):
        for n in range(N + 1):
            for f in all_maps(m, n):
                table = []
                for U, a, b in keys[n]:
                    V = complement(U, n)
                    along_u, along_v = restrict_to_fibres(f, [U, V])
                    pulled = tuple(i for i in range(1, m + 1) if f(i) in U)
                    table.append(positions[m][(pulled, left.restrict(along_u, a), right.restrict(along_v, b))])
                restrictions[f] = tuple(table)

    carriers = [tuple((U, left.carriers[len(U)][a], right.carriers[n - len(U)][b]) for U, a, b in level)
                for n, level in enumerate(keys)]
    support = left.support_bound + right.support_bound \
        if left.support_bound is not None and right.support_bound is not None else None
    degree = left.generator_degree + right.generator_degree \
        if left.generator_degree is not None and right.generator_degree is not None else None
    return FinPresheaf(N, tuple(carriers), restrictions, support, degree, name=f"{left.name}⊗{right.name}")


@dataclass(frozen=True, eq=False)
class CommAlgObject:
    presheaf: FinPresheaf
    mult: Dict[Tuple[int, int], Table]
    unit: int
    name: str = "algebra"

    @property
    def max_arity(self) -> int:
        return self.presheaf.max_arity

    def multiply(self, p: int, q: int, a: int, b: int) -> Optional[int]:
        """M_{p,q}(a, b), a on the first p points"""
        value = self.mult.get((p, q), {}).get((a, b))
        if value is None or not 0 <= value < self.presheaf.size(p + q):
            return None
        return value

    def with_entry(self, p: int, q: int, key: Tuple[int, int], value: int) -> "CommAlgObject":
        mult = dict(self.mult)
        table = dict(mult.get((p, q), {}))
        table[key] = value
        mult[(p, q)] = table
        return replace(self, mult=mult)


def block_swap(p: int, q: int) -> FinMap:
    """β: p+q → q+p moving the first p points behind the last q"""
    return FinMap.of(tuple(q + i for i in range(1, p + 1)) + tuple(range(1, q + 1)), p + q)


def comm_alg_check(algebra: CommAlgObject) -> LawReport:
    report = new_report(f"commutative algebra {algebra.name}")
    sheaf = algebra.presheaf
    N = algebra.max_arity
    size = sheaf.size
    M = algebra.multiply
    for law in ("totality", "naturality", "commutativity", "associativity", "left_unit", "right_unit"):
        report.law(law)

    unit_ok = 0 <= algebra.unit < size(0)
    if not unit_ok:
        report.record("totality", {"unit": algebra.unit}, "unit E_0 is not an element of Σ(0)")
    pairs = [(p, q) for total in range(N + 1) for p, q in weak_compositions(total, 2)]

    for p, q in pairs:
        for a, b in law_instances(report, "totality", [range(size(p)), range(size(q))], f"({p},{q})"):
            if M(p, q, a, b) is None:
                report.record("totality", {"p": p, "q": q, "a": a, "b": b}, f"M_{{{p},{q}}} is undefined at ({a}, {b})")

    for p, q in pairs:
        for p2 in range(N + 1):
            for q2 in range(N + 1 - p2):
                ranges = [all_maps(p2, p), all_maps(q2, q), range(size(p)), range(size(q))]
                for f, g, a, b in law_instances(report, "naturality", ranges, f"({p2},{q2})→({p},{q})"):
                    product_ab = M(p, q, a, b)
                    fa, gb = sheaf.restrict(f, a), sheaf.restrict(g, b)
                    if product_ab is None or fa is None or gb is None:
                        continue
                    lhs, rhs = M(p2, q2, fa, gb), sheaf.restrict(block_sum(f, g), product_ab)
                    if lhs is not None and rhs is not None and lhs != rhs:
                        report.record("naturality", {
                            "f": map_witness(f), "g": map_witness(g), "a": a, "b": b, "lhs": lhs, "rhs": rhs,
                        }, f"M does not commute with restricting along {list(f.images)} ⊕ {list(g.images)}")

    for p, q in pairs:
        swap = block_swap(p, q)
        for a, b in law_instances(report, "commutativity", [range(size(p)), range(size(q))], f"({p},{q})"):
            forward, backward = M(p, q, a, b), M(q, p, b, a)
            if forward is None or backward is None:
                continue
            swapped = sheaf.restrict(swap, backward)
            if swapped is not None and swapped != forward:
                report.record("commutativity", {"p": p, "q": q, "a": a, "b": b, "lhs": forward, "rhs": swapped},
                              f"M_{{{p},{q}}}(a, b) is not the block swap of M_{{{q},{p}}}(b, a)")

    for total in range(N + 1):
        for p, q, r in weak_compositions(total, 3):
            ranges = [range(size(p)), range(size(q)), range(size(r))]
            for a, b, c in law_instances(report, "associativity", ranges, f"({p},{q},{r})"):
                ab, bc = M(p, q, a, b), M(q, r, b, c)
                if ab is None or bc is None:
                    continue
                lhs, rhs = M(p + q, r, ab, c), M(p, q + r, a, bc)
                if lhs is not None and rhs is not None and lhs != rhs:
                    report.record("associativity", {"p": p, "q": q, "r": r, "a": a, "b": b, "c": c, "lhs": lhs, "rhs": rhs},
                                  f"M is not associative at ({p},{q},{r})")

    if unit_ok:
        for p in range(N + 1):
            for (a,) in law_instances(report, "left_unit", [range(size(p))], str(p)):
                value = M(0, p, algebra.unit, a)
                if value is not None and value != a:
                    report.record("left_unit", {"p": p, "a": a, "got": value}, f"M_{{0,{p}}}(E_0, a) ≠ a")
            for (a,) in law_instances(report, "right_unit", [range(size(p))], str(p)):
                value = M(p, 0, a, algebra.unit)
                if value is not None and value != a:
                    report.record("right_unit", {"p": p, "a": a, "got": value}, f"M_{{{p},0}}(a, E_0) ≠ a")
    return report


def _fold(algebra: CommAlgObject, sizes: Sequence[int], elements: Sequence[int]) -> Optional[int]:
    """M over the blocks in order, E_0 when there are none"""
    if not elements:
        return algebra.unit
    value, total = elements[0], sizes[0]
    for size, element in zip(sizes[1:], elements[1:]):
        value = algebra.multiply(total, size, value, element)
        if value is None:
            return None
        total += size
    return value


def merge_blocks(algebra: CommAlgObject, phi: FinMap, layout: FinMap,
                 elements: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """φ_* of block data.

    `layout`: v̄ → m̄ says which block each point of V lies in and
    elements[i] ∈ Y(|layout⁻¹(i+1)|). The result has one element per point j
    of n̄, living on the points of (φ∘layout)⁻¹(j) in increasing order.
    """
    sizes = [len(layout.fibre(i)) for i in range(1, phi.dom.size + 1)]
    merged = []
    for j in range(1, phi.cod.size + 1):
        fibre = phi.fibre(j)
        folded = _fold(algebra, [sizes[i - 1] for i in fibre], [elements[i - 1] for i in fibre])
        if folded is None:
            return None
        if len(fibre) > 1:
            local = {i: k for k, i in enumerate(fibre, start=1)}
            points = [local[layout(v)] for v in range(1, layout.dom.size + 1) if layout(v) in local]
            folded = algebra.presheaf.restrict(block_order(FinMap.of(points, len(fibre))), folded)
            if folded is None:
                return None
        merged.append(folded)
    return tuple(merged)


def _block_data(algebra: CommAlgObject, layout: FinMap) -> List[Tuple[int, ...]]:
    """Every tuple (y_1, ..., y_n) with y_i ∈ Y(|layout⁻¹(i)|)"""
    ranges = [range(algebra.presheaf.size(len(layout.fibre(i)))) for i in range(1, layout.cod.size + 1)]
    return list(itertools.product(*ranges))


def compose_qa(outer: FinPresheaf, algebra: CommAlgObject) -> FinPresheaf:
    """(X∘Y)(V) as the coequalizer over n up to the degree cutoff of X"""
    N = _common_arity(outer, algebra.presheaf)
    cutoff = outer.cutoff
    if cutoff is None or cutoff > N:
        raise UnboundedCompositionError(
            f"{outer.name} is neither supported nor generated in a degree within {N}; "
            "Y(∅) is never empty, so the coequalizer would run over every n",
            details={"support_bound": outer.support_bound, "generator_degree": outer.generator_degree, "max_arity": N},
        )
    logger.info(f"Composing {outer.name} ∘ {algebra.name} at N={N}, degrees up to {cutoff}")
    Y = algebra.presheaf

    levels: List[List[Tuple[int, int, Tuple[int, ...], Tuple[int, ...]]]] = []
    quotients: List[FiniteQuotient] = []
    for v in range(N + 1):
        elements = [(n, xi, layout.images, ys)
                    for n in range(cutoff + 1)
                    for xi in range(outer.size(n))
                    for layout in all_maps(v, n)
                    for ys in _block_data(algebra, layout)]
        index = {element: i for i, element in enumerate(elements)}
        uf = UnionFind(len(elements))
        for m in range(cutoff + 1):
            for n in range(cutoff + 1):
                for phi in all_maps(m, n):
                    for xi in range(outer.size(n)):
                        restricted = outer.restrict(phi, xi)
                        if restricted is None:
                            continue
                        for layout in all_maps(v, m):
                            pushed_layout = FinMap.of(compose_images(phi.images, layout.images), n)
                            for ys in _block_data(algebra, layout):
                                merged = merge_blocks(algebra, phi, layout, ys)
                                if merged is None:
                                    continue
                                uf.union(index[(m, restricted, layout.images, ys)],
                                         index[(n, xi, pushed_layout.images, merged)])
        levels.append(elements)
        quotients.append(FiniteQuotient.from_union_find(uf, elements))
        logger.debug(f"(X∘Y)({v}): {len(elements)} elements, {quotients[-1].size} classes")

    restrictions: Dict[FinMap, Restriction] = {}
    for w in range(N + 1):
        index = {element: i for i, element in enumerate(levels[w])}
        for v in range(N + 1):
            for f in all_maps(w, v):
                table = []
                for n, xi, images, ys in quotients[v].representative_labels():
                    layout = FinMap.of(images, n)
                    pieces = [layout.fibre(i) for i in range(1, n + 1)]
                    moved = tuple(Y.restrict(g, y) for g, y in zip(restrict_to_fibres(f, pieces), ys))
                    pulled = compose_images(images, f.images)
                    table.append(quotients[w].class_of(index[(n, xi, pulled, moved)]))
                restrictions[f] = tuple(table)

    carriers = [q.representative_labels() for q in quotients]
    inner = Y.cutoff
    support = cutoff * Y.support_bound if Y.support_bound is not None else None
    degree = cutoff * inner if inner is not None else None
    return FinPresheaf(N, tuple(carriers), restrictions, support, degree, name=f"{outer.name}∘{algebra.name}")
