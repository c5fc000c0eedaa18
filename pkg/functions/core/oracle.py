"""
Brute-force oracles.

Slow, literal recomputations of what the calculus modules compute cleverly.
Nothing here goes through the group tables, coset tables, union-find or block
helpers of the main path: the coequalizers are written straight from their
defining relations with a raised cutoff, the law checks enumerate every
instance (every group element instead of generators, no sampling), and G-set
isomorphism is decided by searching for an actual bijection.

Tests compare verdicts, not code paths, so when the two sides disagree one of
them is wrong and the `oracle` CLI command reproduces the case.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from .algebrads import CommMonoid, QaAlgebrad
from .algtheory import AlgebraicMonad, FinFunctor, SigmaModule
from .errors import CapacityError, DomainError, PreconditionError
from .finset import FinMap
from .gsets import GSet
from .operads import Operad
from .presheaves import CommAlgObject, FinPresheaf

logger = logging.getLogger(__name__)

MAX_SEARCH_SIZE = 12


class _Partition:
    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}

    def add(self, x: Hashable) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: Hashable) -> Hashable:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def merge(self, x: Hashable, y: Hashable) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def classes(self) -> List[Tuple[Hashable, ...]]:
        groups: Dict[Hashable, List[Hashable]] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((tuple(sorted(members)) for members in groups.values()), key=lambda members: members[0])


@dataclass(frozen=True)
class StabilizedQuotient:
    cutoff: int
    classes: Tuple[Tuple[Any, ...], ...]
    stabilized: bool

    @property
    def size(self) -> int:
        return len(self.classes)


def _stabilize(build: Callable[[int], _Partition], cutoff: int) -> StabilizedQuotient:
    """Quotient at `cutoff`, stabilized when the one at cutoff - 1 maps onto it bijectively"""
    upper = build(cutoff)
    classes = upper.classes()
    if cutoff == 0:
        return StabilizedQuotient(cutoff, tuple(classes), not classes)
    lower = build(cutoff - 1)
    images = {lower.find(x): upper.find(x) for x in lower.parent}
    hit = set(images.values())
    stabilized = len(hit) == len(images) and len(hit) == len(classes)
    return StabilizedQuotient(cutoff, tuple(classes), stabilized)


def _maps(m: int, n: int) -> Iterable[Tuple[int, ...]]:
    return itertools.product(range(1, n + 1), repeat=m)


def _point_count(points: Union[int, Sequence[Any]]) -> int:
    return points if isinstance(points, int) else len(points)


def naive_eval_qc(functor: FinFunctor, points: Union[int, Sequence[Any]], cutoff: int) -> StabilizedQuotient:
    """⊔_{n≤cutoff} F(n) × Xⁿ modulo (n, F(φ)ξ, y) ~ (m, ξ, y∘φ)"""
    if cutoff > functor.max_arity:
        raise PreconditionError(f"cutoff {cutoff} is past the functor's max arity {functor.max_arity}",
                                details={"cutoff": cutoff, "max_arity": functor.max_arity})
    k = _point_count(points)

    def build(c: int) -> _Partition:
        partition = _Partition()
        for n in range(c + 1):
            for xi in range(len(functor.carriers[n])):
                for y in itertools.product(range(k), repeat=n):
                    partition.add((n, xi, y))
        for m in range(c + 1):
            for n in range(c + 1):
                for images in _maps(m, n):
                    table = functor.transitions.get(FinMap.of(images, n))
                    if table is None:
                        continue
                    for xi in range(len(functor.carriers[m])):
                        for y in itertools.product(range(k), repeat=n):
                            partition.merge((n, table[xi], y), (m, xi, tuple(y[i - 1] for i in images)))
        return partition

    result = _stabilize(build, cutoff)
    logger.debug(f"naive eval of {functor.name} at {k} points, cutoff {cutoff}: {result.size} classes")
    return result


def naive_eval_qa(presheaf: FinPresheaf, monoid: CommMonoid, cutoff: int) -> StabilizedQuotient:
    """⊔_{n≤cutoff} P(n) × Aⁿ modulo (m, P(φ)ξ, a) ~ (n, ξ, fibrewise products of a)"""
    if cutoff > presheaf.max_arity:
        raise PreconditionError(f"cutoff {cutoff} is past the presheaf's max arity {presheaf.max_arity}",
                                details={"cutoff": cutoff, "max_arity": presheaf.max_arity})
    k = len(monoid.labels)

    def fibre_products(images: Tuple[int, ...], n: int, values: Tuple[int, ...]) -> Tuple[int, ...]:
        out = []
        for j in range(1, n + 1):
            acc = monoid.unit
            for image, value in zip(images, values):
                if image == j:
                    acc = int(monoid.table[acc][value])
            out.append(acc)
        return tuple(out)

    def build(c: int) -> _Partition:
        partition = _Partition()
        for n in range(c + 1):
            for xi in range(len(presheaf.carriers[n])):
                for values in itertools.product(range(k), repeat=n):
                    partition.add((n, xi, values))
        for m in range(c + 1):
            for n in range(c + 1):
                for images in _maps(m, n):
                    table = presheaf.restrictions.get(FinMap.of(images, n))
                    if table is None:
                        continue
                    for xi in range(len(presheaf.carriers[n])):
                        for values in itertools.product(range(k), repeat=m):
                            partition.merge((m, table[xi], values), (n, xi, fibre_products(images, n, values)))
        return partition

    return _stabilize(build, cutoff)


def _sorting_positions(labels: Sequence[int]) -> Tuple[int, ...]:
    """1-based position of each point once points are grouped by label, labels ascending"""
    positions = []
    for k, label in enumerate(labels):
        before = sum(1 for other in labels if other < label)
        rank = sum(1 for other in labels[:k + 1] if other == label)
        positions.append(before + rank)
    return tuple(positions)


def _merge_pairwise(algebra: CommAlgObject, pieces: Sequence[Tuple[Tuple[int, ...], int]]) -> Optional[int]:
    """Multiply pieces living on disjoint point sets, re-sorting after every step"""
    if not pieces:
        return algebra.unit
    points, acc = pieces[0]
    restrictions = algebra.presheaf.restrictions
    for other_points, element in pieces[1:]:
        product = algebra.mult.get((len(points), len(other_points)), {}).get((acc, element))
        if product is None:
            return None
        laid_out = points + other_points
        union = tuple(sorted(laid_out))
        table = restrictions.get(FinMap.of(tuple(laid_out.index(x) + 1 for x in union), len(union)))
        if table is None:
            return None
        acc, points = table[product], union
    return acc


def _block_sizes(algebra: CommAlgObject, layout: Tuple[int, ...], n: int) -> List[range]:
    return [range(len(algebra.presheaf.carriers[sum(1 for image in layout if image == i)])) for i in range(1, n + 1)]


def naive_compose_qa(outer: FinPresheaf, algebra: CommAlgObject, cutoff: int) -> Dict[int, StabilizedQuotient]:
    """(X∘Y)(V) for every |V| ≤ N straight from the coequalizer, degrees up to `cutoff`"""
    N = outer.max_arity
    if cutoff > N:
        raise PreconditionError(f"cutoff {cutoff} is past max arity {N}", details={"cutoff": cutoff, "max_arity": N})

    def merged(images: Tuple[int, ...], n: int, layout: Tuple[int, ...], ys: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        out = []
        for j in range(1, n + 1):
            pieces = []
            for i, image in enumerate(images, start=1):
                if image == j:
                    block = tuple(v for v, b in enumerate(layout, start=1) if b == i)
                    pieces.append((block, ys[i - 1]))
            value = _merge_pairwise(algebra, pieces)
            if value is None:
                return None
            out.append(value)
        return tuple(out)

    results = {}
    for v in range(N + 1):
        def build(c: int, v: int = v) -> _Partition:
            partition = _Partition()
            for n in range(c + 1):
                for xi in range(len(outer.carriers[n])):
                    for layout in _maps(v, n):
                        for ys in itertools.product(*_block_sizes(algebra, layout, n)):
                            partition.add((n, xi, layout, ys))
            for m in range(c + 1):
                for n in range(c + 1):
                    for images in _maps(m, n):
                        table = outer.restrictions.get(FinMap.of(images, n))
                        if table is None:
                            continue
                        for layout in _maps(v, m):
                            pushed = tuple(images[b - 1] for b in layout)
                            for ys in itertools.product(*_block_sizes(algebra, layout, m)):
                                target = merged(images, n, layout, ys)
                                if target is None:
                                    continue
                                for xi in range(len(outer.carriers[n])):
                                    partition.merge((m, table[xi], layout, ys), (n, xi, pushed, target))
            return partition

        results[v] = _stabilize(build, cutoff)
    return results


@dataclass
class OracleVerdict:
    subject: str
    instances: Dict[str, int] = field(default_factory=dict)
    failing: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failing

    @property
    def failed_laws(self) -> set:
        return set(self.failing)

    def count(self, law: str) -> None:
        self.instances[law] = self.instances.get(law, 0) + 1

    def fail(self, law: str, witness: Dict[str, Any]) -> None:
        self.failing.setdefault(law, witness)


def _weak(total: int, parts: int) -> List[Tuple[int, ...]]:
    return [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]


def _all_parts(N: int) -> List[Tuple[int, ...]]:
    return [parts for s in range(N + 1) for total in range(N + 1) for parts in _weak(total, s)]


@lru_cache(maxsize=None)
def _perms(n: int) -> List[Tuple[int, ...]]:
    return list(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def _columns(n: int) -> Dict[Tuple[int, ...], int]:
    return {sigma: j for j, sigma in enumerate(_perms(n))}


def _column(n: int, sigma: Sequence[int]) -> int:
    return _columns(n)[tuple(sigma)]


def _offsets(parts: Sequence[int]) -> List[int]:
    return [sum(parts[:i]) for i in range(len(parts))]


def _operad_verdict(operad: Operad, verdict: OracleVerdict) -> None:
    N = operad.max_arity
    carriers = operad.carrier.carriers
    size = lambda n: carriers[n].size

    def mu(parts, x, ys):
        value = operad.subs.get(tuple(parts), {}).get((x,) + tuple(ys))
        return value if value is not None and 0 <= value < size(sum(parts)) else None

    def domain(parts):
        return itertools.product(range(size(len(parts))), *[range(size(p)) for p in parts])

    parts_list = _all_parts(N)
    for parts in parts_list:
        for key in domain(parts):
            verdict.count("totality")
            if mu(parts, key[0], key[1:]) is None:
                verdict.fail("totality", {"parts": list(parts), "key": list(key)})
    unit_ok = 0 <= operad.unit < size(1)
    if not unit_ok:
        verdict.fail("totality", {"unit": operad.unit})

    for parts in parts_list:
        n, s = sum(parts), len(parts)
        offsets = _offsets(parts)
        for block, p in enumerate(parts):
            for local in _perms(p):
                h = list(range(1, n + 1))
                for j, image in enumerate(local):
                    h[offsets[block] + j] = offsets[block] + image
                for key in domain(parts):
                    verdict.count("equivariance_blocks")
                    x, ys = key[0], list(key[1:])
                    z = mu(parts, x, ys)
                    moved = list(ys)
                    moved[block] = int(carriers[p].table[ys[block], _column(p, local)])
                    z_moved = mu(parts, x, moved)
                    if z is not None and z_moved is not None and z_moved != int(carriers[n].table[z, _column(n, h)]):
                        verdict.fail("equivariance_blocks", {"parts": list(parts), "key": list(key), "sigma": list(local)})
        for rho in _perms(s):
            new_parts = tuple(parts[k - 1] for k in rho)
            new_offsets = _offsets(new_parts)
            r = [0] * n
            for i, k in enumerate(rho):
                for j in range(parts[k - 1]):
                    r[offsets[k - 1] + j] = new_offsets[i] + j + 1
            for key in domain(parts):
                verdict.count("equivariance_relabel")
                x, ys = key[0], key[1:]
                z = mu(parts, x, ys)
                z_relabelled = mu(new_parts, int(carriers[s].table[x, _column(s, rho)]), [ys[k - 1] for k in rho])
                if z is not None and z_relabelled is not None and int(carriers[n].table[z_relabelled, _column(n, r)]) != z:
                    verdict.fail("equivariance_relabel", {"parts": list(parts), "key": list(key), "rho": list(rho)})

    if unit_ok:
        for n in range(N + 1):
            for y in range(size(n)):
                verdict.count("left_unit")
                z = mu((n,), operad.unit, (y,))
                if z is not None and z != y:
                    verdict.fail("left_unit", {"arity": n, "y": y})
            for x in range(size(n)):
                verdict.count("right_unit")
                z = mu((1,) * n, x, (operad.unit,) * n)
                if z is not None and z != x:
                    verdict.fail("right_unit", {"arity": n, "x": x})

    for parts in parts_list:
        s, P = len(parts), sum(parts)
        offsets = _offsets(parts)
        for Q in range(N + 1):
            for inner in _weak(Q, P):
                groups = [inner[o:o + p] for o, p in zip(offsets, parts)]
                for key in itertools.product(*[range(size(k)) for k in (s,) + tuple(parts) + tuple(inner)]):
                    verdict.count("associativity")
                    x, ys, zs = key[0], key[1:1 + s], key[1 + s:]
                    outer = mu(parts, x, ys)
                    nested = [mu(g, ys[i], zs[o:o + p]) for i, (g, o, p) in enumerate(zip(groups, offsets, parts))]
                    if outer is None or None in nested:
                        continue
                    lhs, rhs = mu(inner, outer, zs), mu(tuple(sum(g) for g in groups), x, nested)
                    if lhs is not None and rhs is not None and lhs != rhs:
                        verdict.fail("associativity", {"parts": list(parts), "inner": list(inner), "key": list(key)})


def _monad_verdict(monad: AlgebraicMonad, verdict: OracleVerdict) -> None:
    functor = monad.functor
    N = functor.max_arity
    size = lambda n: len(functor.carriers[n])
    mu = monad.substitute
    transition = lambda images, n: functor.transitions.get(FinMap.of(images, n))

    for p in range(N + 1):
        for n in range(N + 1):
            for key in itertools.product(range(size(p)), *[range(size(n))] * p):
                verdict.count("totality")
                if mu(p, n, key[0], key[1:]) is None:
                    verdict.fail("totality", {"p": p, "n": n, "key": list(key)})
    unit_ok = 0 <= monad.unit < size(1)
    if not unit_ok:
        verdict.fail("totality", {"unit": monad.unit})

    if unit_ok:
        for n in range(N + 1):
            for t in range(size(n)):
                verdict.count("left_unit")
                value = mu(1, n, monad.unit, (t,))
                if value is not None and value != t:
                    verdict.fail("left_unit", {"n": n, "t": t})
        for p in range(N + 1):
            generators = []
            for i in range(1, p + 1):
                table = transition((i,), p)
                generators.append(None if table is None else table[monad.unit])
            if None in generators:
                continue
            for t in range(size(p)):
                verdict.count("right_unit")
                value = mu(p, p, t, generators)
                if value is not None and value != t:
                    verdict.fail("right_unit", {"p": p, "t": t})

    for q, p, n in itertools.product(range(N + 1), repeat=3):
        for key in itertools.product(range(size(q)), *[range(size(p))] * q, *[range(size(n))] * p):
            verdict.count("associativity")
            t, us, vs = key[0], key[1:1 + q], key[1 + q:]
            inner = [mu(p, n, u, vs) for u in us]
            middle = mu(q, p, t, us)
            if middle is None or None in inner:
                continue
            lhs, rhs = mu(q, n, t, inner), mu(p, n, middle, vs)
            if lhs is not None and rhs is not None and lhs != rhs:
                verdict.fail("associativity", {"q": q, "p": p, "n": n, "key": list(key)})

    for p, n, target in itertools.product(range(N + 1), repeat=3):
        for images in _maps(n, target):
            table = transition(images, target)
            if table is None:
                continue
            for key in itertools.product(range(size(p)), *[range(size(n))] * p):
                verdict.count("naturality")
                t, us = key[0], key[1:]
                value = mu(p, n, t, us)
                if value is None:
                    continue
                lhs = mu(p, target, t, [table[u] for u in us])
                if lhs is not None and lhs != table[value]:
                    verdict.fail("naturality", {"p": p, "images": list(images), "key": list(key)})

    for p, wider, n in itertools.product(range(N + 1), repeat=3):
        for images in _maps(p, wider):
            table = transition(images, wider)
            if table is None:
                continue
            for key in itertools.product(range(size(p)), *[range(size(n))] * wider):
                verdict.count("substitution_compatibility")
                t, vs = key[0], key[1:]
                lhs, rhs = mu(wider, n, table[t], vs), mu(p, n, t, [vs[j - 1] for j in images])
                if lhs is not None and rhs is not None and lhs != rhs:
                    verdict.fail("substitution_compatibility", {"images": list(images), "n": n, "key": list(key)})


def _module_verdict(module: SigmaModule, verdict: OracleVerdict) -> None:
    monad = module.monad
    functor = monad.functor
    N = functor.max_arity
    m = len(module.labels)
    if m > N:
        raise CapacityError(f"the law oracle needs module carriers within max arity {N}, got {m} elements",
                            details={"size": m, "max_arity": N})
    K = len(functor.carriers[m])
    alpha = module.action
    verdict.count("totality")
    if len(alpha) != K or any(not 0 <= a < m for a in alpha):
        verdict.fail("totality", {"length": len(alpha), "expected_length": K})
        return

    for i in range(1, m + 1):
        verdict.count("unit")
        table = functor.transitions.get(FinMap.of((i,), m))
        if table is not None and alpha[table[monad.unit]] != i - 1:
            verdict.fail("unit", {"point": i})

    if K <= N:
        pushed = functor.transitions.get(FinMap.of(tuple(a + 1 for a in alpha), m))
        for T in range(len(functor.carriers[K])):
            verdict.count("associativity")
            multiplied = monad.substitute(K, m, T, tuple(range(K)))
            if pushed is not None and multiplied is not None and alpha[pushed[T]] != alpha[multiplied]:
                verdict.fail("associativity", {"element": T})

    for p in range(N + 1):
        for key in itertools.product(range(len(functor.carriers[p])), *[range(K)] * p):
            verdict.count("finitary")
            t, us = key[0], key[1:]
            substituted = monad.substitute(p, m, t, us)
            table = functor.transitions.get(FinMap.of(tuple(alpha[u] + 1 for u in us), m))
            if substituted is None or table is None:
                continue
            if alpha[substituted] != alpha[table[t]]:
                verdict.fail("finitary", {"p": p, "key": list(key)})


def _comm_alg_verdict(algebra: CommAlgObject, verdict: OracleVerdict) -> None:
    sheaf = algebra.presheaf
    N = sheaf.max_arity
    size = lambda n: len(sheaf.carriers[n])
    def restrict(images, n, x):
        table = sheaf.restrictions.get(FinMap.of(tuple(images), n))
        return None if table is None or x is None else table[x]

    def M(p, q, a, b):
        value = algebra.mult.get((p, q), {}).get((a, b))
        return value if value is not None and 0 <= value < size(p + q) else None

    pairs = [(p, q) for p in range(N + 1) for q in range(N + 1 - p)]
    unit_ok = 0 <= algebra.unit < size(0)
    if not unit_ok:
        verdict.fail("totality", {"unit": algebra.unit})
    for p, q in pairs:
        for a, b in itertools.product(range(size(p)), range(size(q))):
            verdict.count("totality")
            if M(p, q, a, b) is None:
                verdict.fail("totality", {"p": p, "q": q, "a": a, "b": b})

    for p, q in pairs:
        for p2, q2 in [(x, y) for x in range(N + 1) for y in range(N + 1 - x)]:
            for f in _maps(p2, p):
                for g in _maps(q2, q):
                    joined = f + tuple(image + p for image in g)
                    for a, b in itertools.product(range(size(p)), range(size(q))):
                        verdict.count("naturality")
                        ab, fa, gb = M(p, q, a, b), restrict(f, p, a), restrict(g, q, b)
                        if ab is None or fa is None or gb is None:
                            continue
                        lhs, rhs = M(p2, q2, fa, gb), restrict(joined, p + q, ab)
                        if lhs is not None and rhs is not None and lhs != rhs:
                            verdict.fail("naturality", {"f": list(f), "g": list(g), "a": a, "b": b})

    for p, q in pairs:
        swap = tuple(q + i for i in range(1, p + 1)) + tuple(range(1, q + 1))
        for a, b in itertools.product(range(size(p)), range(size(q))):
            verdict.count("commutativity")
            forward, backward = M(p, q, a, b), M(q, p, b, a)
            if forward is None or backward is None:
                continue
            swapped = restrict(swap, p + q, backward)
            if swapped is not None and swapped != forward:
                verdict.fail("commutativity", {"p": p, "q": q, "a": a, "b": b})

    for p, q, r in itertools.product(range(N + 1), repeat=3):
        if p + q + r > N:
            continue
        for a, b, c in itertools.product(range(size(p)), range(size(q)), range(size(r))):
            verdict.count("associativity")
            ab, bc = M(p, q, a, b), M(q, r, b, c)
            if ab is None or bc is None:
                continue
            lhs, rhs = M(p + q, r, ab, c), M(p, q + r, a, bc)
            if lhs is not None and rhs is not None and lhs != rhs:
                verdict.fail("associativity", {"p": p, "q": q, "r": r, "a": a, "b": b, "c": c})

    if unit_ok:
        for p in range(N + 1):
            for a in range(size(p)):
                verdict.count("left_unit")
                verdict.count("right_unit")
                left, right = M(0, p, algebra.unit, a), M(p, 0, a, algebra.unit)
                if left is not None and left != a:
                    verdict.fail("left_unit", {"p": p, "a": a})
                if right is not None and right != a:
                    verdict.fail("right_unit", {"p": p, "a": a})


def _algebrad_verdict(algebrad: QaAlgebrad, verdict: OracleVerdict) -> None:
    algebra = algebrad.algebra
    sheaf = algebra.presheaf
    N = sheaf.max_arity
    size = lambda n: len(sheaf.carriers[n])
    mu = algebrad.substitute

    def restrict(images, n, x):
        table = sheaf.restrictions.get(FinMap.of(tuple(images), n))
        return None if table is None or x is None else table[x]

    def M(p, q, a, b):
        value = algebra.mult.get((p, q), {}).get((a, b))
        return value if value is not None and 0 <= value < size(p + q) else None

    def domain(parts):
        return itertools.product(range(size(len(parts))), *[range(size(p)) for p in parts])

    parts_list = _all_parts(N)
    unit_ok = 0 <= algebrad.unit < size(1)
    if not unit_ok:
        verdict.fail("totality", {"unit": algebrad.unit})
    for parts in parts_list:
        for key in domain(parts):
            verdict.count("totality")
            if mu(parts, key[0], key[1:]) is None:
                verdict.fail("totality", {"parts": list(parts), "key": list(key)})

    if unit_ok:
        for n in range(N + 1):
            for a in range(size(n)):
                verdict.count("left_unit")
                verdict.count("right_unit")
                left = mu((n,), algebrad.unit, (a,))
                right = mu((1,) * n, a, (algebrad.unit,) * n)
                if left is not None and left != a:
                    verdict.fail("left_unit", {"p": n, "a": a})
                if right is not None and right != a:
                    verdict.fail("right_unit", {"n": n, "xi": a})

    for parts in parts_list:
        s, P = len(parts), sum(parts)
        offsets = _offsets(parts)
        for Q in range(N + 1):
            for inner in _weak(Q, P):
                groups = [inner[o:o + p] for o, p in zip(offsets, parts)]
                for key in itertools.product(*[range(size(k)) for k in (s,) + tuple(parts) + tuple(inner)]):
                    verdict.count("associativity")
                    x, ys, zs = key[0], key[1:1 + s], key[1 + s:]
                    outer = mu(parts, x, ys)
                    nested = [mu(g, ys[i], zs[o:o + p]) for i, (g, o, p) in enumerate(zip(groups, offsets, parts))]
                    if outer is None or None in nested:
                        continue
                    lhs, rhs = mu(inner, outer, zs), mu(tuple(sum(g) for g in groups), x, nested)
                    if lhs is not None and rhs is not None and lhs != rhs:
                        verdict.fail("associativity", {"parts": list(parts), "inner": list(inner), "key": list(key)})

    verdict.count("multiplicativity")
    empty = mu((), algebra.unit, ())
    if empty is not None and empty != algebra.unit:
        verdict.fail("multiplicativity", {"parts": []})
    for parts in parts_list:
        n, P = len(parts), sum(parts)
        for split in range(n + 1):
            first, second = parts[:split], parts[split:]
            for key in itertools.product(range(size(split)), range(size(n - split)), *[range(size(p)) for p in parts]):
                verdict.count("multiplicativity")
                xi, xi2, ys = key[0], key[1], key[2:]
                joined = M(split, n - split, xi, xi2)
                left, right = mu(first, xi, ys[:split]), mu(second, xi2, ys[split:])
                if joined is None or left is None or right is None:
                    continue
                lhs, rhs = mu(parts, joined, ys), M(sum(first), sum(second), left, right)
                if lhs is not None and rhs is not None and lhs != rhs:
                    verdict.fail("multiplicativity", {"parts": list(parts), "split": split, "key": list(key)})

    for parts in parts_list:
        P = sum(parts)
        block_of = [i for i, p in enumerate(parts, start=1) for _ in range(p)]
        offsets = _offsets(parts)
        for w in range(N + 1):
            for f in _maps(w, P):
                pulled = [block_of[image - 1] for image in f]
                for key in domain(parts):
                    verdict.count("naturality")
                    xi, ys = key[0], key[1:]
                    value = mu(parts, xi, ys)
                    if value is None:
                        continue
                    moved, new_parts = [], []
                    for i, p in enumerate(parts, start=1):
                        local = tuple(f[k] - offsets[i - 1] for k in range(w) if pulled[k] == i)
                        moved.append(restrict(local, p, ys[i - 1]))
                        new_parts.append(len(local))
                    if None in moved:
                        continue
                    substituted = mu(tuple(new_parts), xi, moved)
                    if substituted is None:
                        continue
                    lhs = restrict(f, P, value)
                    rhs = restrict(_sorting_positions(pulled), w, substituted)
                    if lhs is not None and rhs is not None and lhs != rhs:
                        verdict.fail("naturality", {"parts": list(parts), "images": list(f), "key": list(key)})

    for parts in parts_list:
        m, P = len(parts), sum(parts)
        offsets = _offsets(parts)
        for n in range(N + 1):
            for phi in _maps(m, n):
                for key in itertools.product(range(size(n)), *[range(size(p)) for p in parts]):
                    verdict.count("substitution_compatibility")
                    xi, ys = key[0], key[1:]
                    restricted = restrict(phi, n, xi)
                    if restricted is None:
                        continue
                    lhs = mu(parts, restricted, ys)
                    merged, merged_parts = [], []
                    for j in range(1, n + 1):
                        pieces = [(tuple(range(offsets[i - 1] + 1, offsets[i - 1] + parts[i - 1] + 1)), ys[i - 1])
                                  for i in range(1, m + 1) if phi[i - 1] == j]
                        merged.append(_merge_pairwise(algebra, pieces))
                        merged_parts.append(sum(len(points) for points, _ in pieces))
                    if lhs is None or None in merged:
                        continue
                    substituted = mu(tuple(merged_parts), xi, merged)
                    labels = [phi[b - 1] for b in [i for i, p in enumerate(parts, start=1) for _ in range(p)]]
                    rhs = restrict(_sorting_positions(labels), P, substituted)
                    if rhs is not None and lhs != rhs:
                        verdict.fail("substitution_compatibility", {"parts": list(parts), "phi": list(phi), "key": list(key)})


def exhaustive_law_check(structure: Any, law: Optional[str] = None) -> OracleVerdict:
    """Every instance of every law; `law` narrows the verdict to one of them"""
    checks = [
        (Operad, _operad_verdict),
        (AlgebraicMonad, _monad_verdict),
        (SigmaModule, _module_verdict),
        (CommAlgObject, _comm_alg_verdict),
        (QaAlgebrad, _algebrad_verdict),
    ]
    for kind, check in checks:
        if isinstance(structure, kind):
            verdict = OracleVerdict(subject=f"{kind.__name__} {getattr(structure, 'name', '')}".strip())
            check(structure, verdict)
            break
    else:
        raise DomainError(f"no exhaustive law check for {type(structure).__name__}",
                          details={"type": type(structure).__name__})
    if law is not None:
        verdict.failing = {name: witness for name, witness in verdict.failing.items() if name == law}
        verdict.instances = {name: count for name, count in verdict.instances.items() if name == law}
    logger.info(f"Oracle verdict for {verdict.subject}: failing {sorted(verdict.failing)}")
    return verdict


def _orbit_representatives(gset: GSet) -> List[int]:
    seen, reps = set(), []
    for x in range(gset.size):
        if x in seen:
            continue
        reps.append(x)
        seen.update(int(y) for y in gset.table[x])
    return reps


def bijection_search(source: GSet, target: GSet) -> Optional[Tuple[int, ...]]:
    """An explicit equivariant bijection source → target, or None after exhausting the choices"""
    if source.n != target.n:
        raise DomainError(f"cannot compare an S_{source.n}-set with an S_{target.n}-set",
                          details={"left_arity": source.n, "right_arity": target.n})
    if source.size != target.size:
        return None
    if source.size > MAX_SEARCH_SIZE:
        raise PreconditionError(f"bijection search is limited to {MAX_SEARCH_SIZE} elements, got {source.size}",
                                details={"size": source.size, "limit": MAX_SEARCH_SIZE})
    reps = _orbit_representatives(source)
    columns = source.table.shape[1]

    def extend(k: int, mapping: Dict[int, int], used: set) -> Optional[Dict[int, int]]:
        if k == len(reps):
            return mapping
        x = reps[k]
        for y in range(target.size):
            if y in used:
                continue
            trial: Dict[int, int] = {}
            consistent = True
            for j in range(columns):
                a, b = int(source.table[x, j]), int(target.table[y, j])
                if trial.get(a, b) != b or (a not in trial and (b in used or b in trial.values())):
                    consistent = False
                    break
                trial[a] = b
            if not consistent:
                continue
            found = extend(k + 1, {**mapping, **trial}, used | set(trial.values()))
            if found is not None:
                return found
        return None

    mapping = extend(0, {}, set())
    if mapping is None:
        return None
    return tuple(mapping[x] for x in range(source.size))
