"""
Right S_n-sets

A GSet is a finite set with a right action of S_n stored as a numpy table:
row x, column j holds x·σ_j where σ_j is the j-th permutation of S_n in
lexicographic order. Tables are total by construction and validated on demand.

The interesting operations here are induction along a Young subgroup
(elements are pairs of a factor tuple and a canonical coset representative;
acting by τ renormalises rep∘τ and pushes the Young part onto the factors),
orbit quotients, and deciding isomorphism. Two transitive S_n-sets are
isomorphic exactly when their point stabilizers are conjugate, so a G-set is
determined up to isomorphism by the multiset of conjugacy classes of
stabilizers over its orbits. We compare those multisets.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DomainError
from .finset import Perm
from .groups import SymmetricGroup, coset_table, symmetric_group
from .quotients import FiniteQuotient, UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GSet:
    n: int
    table: np.ndarray
    labels: Optional[Tuple[Any, ...]] = None

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        if table.size == 0:
            table = table.reshape(0, symmetric_group(self.n).order)
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def act(self, x: int, sigma: Union[int, Perm, Sequence[int]]) -> int:
        if not isinstance(sigma, (int, np.integer)):
            sigma = symmetric_group(self.n).position(sigma)
        return int(self.table[x, sigma])

    def label(self, x: int) -> Any:
        return self.labels[x] if self.labels is not None else x


def trivial_gset(n: int, k: int = 1, labels: Optional[Sequence[Any]] = None) -> GSet:
    order = symmetric_group(n).order
    table = np.repeat(np.arange(k, dtype=np.int64)[:, None], order, axis=1)
    return GSet(n, table, tuple(labels) if labels is not None else None)


def empty_gset(n: int) -> GSet:
    return GSet(n, np.zeros((0, symmetric_group(n).order), dtype=np.int64), ())


def regular_gset(n: int) -> GSet:
    """S_n acting on itself by x·σ = x∘σ"""
    group = symmetric_group(n)
    return GSet(n, group.mult.copy(), group.elements)


def disjoint_union(pieces: Sequence[GSet], tags: Optional[Sequence[Any]] = None, n: Optional[int] = None) -> GSet:
    if not pieces:
        if n is None:
            raise DomainError("disjoint union of no G-sets needs an explicit arity")
        return empty_gset(n)
    arity = pieces[0].n
    if any(piece.n != arity for piece in pieces):
        raise DomainError("disjoint union of G-sets with different arities", details={"arities": [p.n for p in pieces]})
    tags = list(tags) if tags is not None else list(range(len(pieces)))
    tables, labels, offset = [], [], 0
    for tag, piece in zip(tags, pieces):
        tables.append(piece.table + offset)
        labels.extend((tag, piece.label(x)) for x in range(piece.size))
        offset += piece.size
    return GSet(arity, np.concatenate(tables, axis=0), tuple(labels))


def gset_violations(gset: GSet, limit: Optional[int] = None) -> List[Dict[str, Any]]:
    """Located failures of the right-action axioms, in table order"""
    group = symmetric_group(gset.n)
    table = gset.table
    found: List[Dict[str, Any]] = []

    def full() -> bool:
        return limit is not None and len(found) >= limit

    if table.ndim != 2 or table.shape[1] != group.order:
        return [{"problem": "shape", "expected_columns": group.order, "shape": list(table.shape)}]
    bad = np.argwhere((table < 0) | (table >= gset.size))
    for x, j in bad[: limit or len(bad)]:
        found.append({"problem": "range", "element": int(x), "sigma": list(group.elements[j]), "value": int(table[x, j])})
    if found:
        return found

    for x in np.nonzero(table[:, 0] != np.arange(gset.size))[0]:
        found.append({"problem": "identity", "element": int(x), "value": int(table[x, 0])})
        if full():
            return found

    for i in range(group.order):
        after_i = table[:, i]
        for j in range(group.order):
            mismatch = np.nonzero(table[after_i, j] != table[:, group.mult[i, j]])[0]
            for x in mismatch:
                found.append({
                    "problem": "compatibility",
                    "element": int(x),
                    "sigma": list(group.elements[i]),
                    "tau": list(group.elements[j]),
                })
                if full():
                    return found
    return found


def induce(factors: Sequence[GSet]) -> GSet:
    """Ind from S_{p1}×…×S_{ps} to S_n of the product of the factors"""
    parts = tuple(f.n for f in factors)
    n = sum(parts)
    group = symmetric_group(n)
    cosets = coset_table(parts)
    reps = cosets.representatives
    sizes = [f.size for f in factors]
    combos = prod(sizes)
    if combos == 0:
        return empty_gset(n)

    strides = [prod(sizes[i + 1:]) for i in range(len(sizes))]
    digits = np.array(list(itertools.product(*[range(s) for s in sizes])), dtype=np.int64).reshape(combos, len(sizes))
    rows = np.arange(combos, dtype=np.int64) * len(reps)
    table = np.empty((combos * len(reps), group.order), dtype=np.int64)

    for k, rep in enumerate(reps):
        rep_index = group.index[rep]
        for j in range(group.order):
            g = group.mult[rep_index, j]
            new_rep = cosets.representative_of[g]
            moved = np.zeros(combos, dtype=np.int64)
            for i, factor in enumerate(factors):
                moved += factor.table[digits[:, i], cosets.block_factors[g, i]] * strides[i]
            table[rows + k, j] = moved * len(reps) + new_rep

    labels = tuple(
        (tuple(factor.label(m) for factor, m in zip(factors, combo)), rep)
        for combo in itertools.product(*[range(s) for s in sizes])
        for rep in reps
    )
    logger.debug(f"Induced {parts}: {len(labels)} elements")
    return GSet(n, table, labels)


def orbit_quotient(gset: GSet) -> FiniteQuotient:
    """
    Orbits of the action, glued along the adjacent transpositions.

    The representative of an orbit is its least element in carrier order, by
    index and not by label. Carriers built here are enumerated in lexicographic
    order, so for them the two agree.
    """
    group = symmetric_group(gset.n)
    uf = UnionFind(gset.size)
    for g in group.generators():
        for x, y in enumerate(gset.table[:, g]):
            uf.union(x, int(y))
    labels = gset.labels if gset.labels is not None else tuple(range(gset.size))
    return FiniteQuotient.from_union_find(uf, labels)


def stabilizer(gset: GSet, x: int) -> np.ndarray:
    return np.nonzero(gset.table[x] == x)[0]


def conjugacy_key(group: SymmetricGroup, subgroup: np.ndarray) -> Tuple[int, ...]:
    """Least sorted conjugate g⁻¹Hg, a complete invariant of the conjugacy class"""
    best = None
    for g in range(group.order):
        conjugate = group.mult[group.inverse[g], group.mult[subgroup, g]]
        key = tuple(sorted(int(c) for c in conjugate))
        if best is None or key < best:
            best = key
    return best


def orbit_types(gset: GSet) -> Counter:
    group = symmetric_group(gset.n)
    keys: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    types: Counter = Counter()
    for x in orbit_quotient(gset).representatives:
        stab = tuple(int(s) for s in stabilizer(gset, x))
        if stab not in keys:
            keys[stab] = conjugacy_key(group, np.array(stab, dtype=np.int64))
        types[keys[stab]] += 1
    return types


def gset_iso(x: GSet, y: GSet) -> bool:
    if x.n != y.n:
        raise DomainError(
            f"cannot compare an S_{x.n}-set with an S_{y.n}-set",
            details={"left_arity": x.n, "right_arity": y.n},
        )
    if x.size != y.size:
        return False
    return orbit_types(x) == orbit_types(y)
