"""
Symmetric Sequences

The object-classifier calculus. A symmetric sequence is a family of right
S_n-sets A_0, ..., A_N truncated at a max arity N, optionally with a support
bound past which every carrier is empty.

Both products are built out of induction along Young subgroups. The tensor
product sums Ind(A_p × B_q) over p + q = n. The composition product sums
X_s × Ind(Y_{p1} × … × Y_{ps}) over all compositions of n and then divides out
the simultaneous relabelling of the s slots: relabelling by ρ permutes the
factor tuple, acts on x, and replaces the coset representative by the one for
the permuted blocks. We build the disjoint union of triples, glue along the
relabelling generators with union-find, and let S_n act on the classes through
their least member.

Evaluation at a finite set X is the orbit set of A_n × Xⁿ under the diagonal
action (a, y)·σ = (a·σ, y∘σ), summed over n ≤ N.
"""

import itertools
import logging
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import CapacityError, DomainError, UnboundedCompositionError
from .finset import compositions, weak_compositions
from .groups import canonical_representative, coset_table, symmetric_group
from .gsets import GSet, disjoint_union, empty_gset, gset_violations, induce, regular_gset, trivial_gset
from .quotients import FiniteQuotient, UnionFind
from .reports import LawReport, new_report
from ..config.calculus_config import ConfigurationManager

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SymSeq:
    max_arity: int
    carriers: Tuple[GSet, ...]
    support_bound: Optional[int] = None
    name: str = "symseq"

    def __post_init__(self):
        object.__setattr__(self, "carriers", tuple(self.carriers))
        if len(self.carriers) != self.max_arity + 1:
            raise DomainError(
                f"symmetric sequence truncated at {self.max_arity} needs {self.max_arity + 1} carriers, got {len(self.carriers)}",
                details={"max_arity": self.max_arity, "carriers": len(self.carriers)},
            )

    def carrier(self, n: int) -> GSet:
        if n > self.max_arity:
            raise CapacityError(f"arity {n} is past the truncation {self.max_arity}", details={"arity": n})
        return self.carriers[n]

    def sizes(self) -> List[int]:
        return [c.size for c in self.carriers]


@dataclass(frozen=True)
class QoElement:
    arity: int
    s: int
    x: int
    parts: Tuple[int, ...]
    coset_rep: Tuple[int, ...]
    ys: Tuple[int, ...]


def _default_arity(max_arity: Optional[int]) -> int:
    return ConfigurationManager.active().max_arity if max_arity is None else max_arity


def validate_symseq(seq: SymSeq) -> LawReport:
    report = new_report(f"symmetric sequence {seq.name}")
    report.law("arity")
    report.law("action")
    for n, carrier in enumerate(seq.carriers):
        report.count("arity")
        if carrier.n != n:
            report.record("arity", {"arity": n, "carrier_arity": carrier.n}, f"carrier {n} carries an S_{carrier.n}-action")
            continue
        report.count("action", carrier.size * carrier.table.shape[1] if carrier.table.ndim == 2 else 0)
        for problem in gset_violations(carrier, limit=report.max_witnesses):
            report.record("action", {"arity": n, **problem}, f"right-action axiom fails at arity {n}: {problem['problem']}")
    if seq.support_bound is not None:
        report.law("support_bound")
        for n in range(seq.support_bound + 1, seq.max_arity + 1):
            report.count("support_bound")
            if seq.carriers[n].size:
                report.record("support_bound", {"arity": n, "size": seq.carriers[n].size},
                              f"carrier {n} is not empty above the support bound {seq.support_bound}")
    return report


def unit_tensor(max_arity: Optional[int] = None) -> SymSeq:
    """(1, ∅, ∅, ...)"""
    N = _default_arity(max_arity)
    carriers = [trivial_gset(0, 1)] + [empty_gset(n) for n in range(1, N + 1)]
    return SymSeq(N, tuple(carriers), support_bound=0, name="unit_tensor")


def unit_comp(max_arity: Optional[int] = None) -> SymSeq:
    """(∅, 1, ∅, ...)"""
    N = _default_arity(max_arity)
    carriers = [trivial_gset(n, 1) if n == 1 else empty_gset(n) for n in range(N + 1)]
    return SymSeq(N, tuple(carriers), support_bound=1, name="unit_comp")


def representable(n: int, max_arity: Optional[int] = None) -> SymSeq:
    N = _default_arity(max_arity)
    if n > N:
        raise CapacityError(f"representable h_{n} does not fit under max arity {N}", details={"n": n, "max_arity": N})
    carriers = [regular_gset(k) if k == n else empty_gset(k) for k in range(N + 1)]
    return SymSeq(N, tuple(carriers), support_bound=n, name=f"h{n}")


def _common_arity(*seqs: SymSeq) -> int:
    arities = {s.max_arity for s in seqs}
    if len(arities) != 1:
        raise DomainError(
            "symmetric sequences must share their max arity",
            details={"max_arities": [s.max_arity for s in seqs]},
        )
    return arities.pop()


def tensor_product(*seqs: SymSeq) -> SymSeq:
    if not seqs:
        return unit_tensor()
    N = _common_arity(*seqs)
    logger.info(f"Tensor product of {[s.name for s in seqs]} at N={N}")
    carriers = []
    for n in range(N + 1):
        pieces, tags = [], []
        for parts in weak_compositions(n, len(seqs)):
            factors = [seq.carriers[p] for seq, p in zip(seqs, parts)]
            if any(f.size == 0 for f in factors):
                continue
            pieces.append(induce(factors))
            tags.append(parts)
        carriers.append(disjoint_union(pieces, tags, n=n))
    bounds = [s.support_bound for s in seqs]
    support = sum(bounds) if all(b is not None for b in bounds) else None
    return SymSeq(N, tuple(carriers), support, name="⊗".join(s.name for s in seqs))


def tensor(a: SymSeq, b: SymSeq) -> SymSeq:
    return tensor_product(a, b)


@dataclass
class _TripleBlock:
    s: int
    parts: Tuple[int, ...]
    offset: int
    x_set: GSet
    induced: GSet
    sizes: Tuple[int, ...]
    strides: Tuple[int, ...]

    @property
    def width(self) -> int:
        return self.induced.size

    @property
    def count(self) -> int:
        return self.x_set.size * self.induced.size


def _slot_compositions(n: int, s: int, allow_empty: bool):
    if allow_empty:
        yield from weak_compositions(n, s)
    elif s <= n:
        for parts in weak_compositions(n - s, s):
            yield tuple(p + 1 for p in parts)


def _compose_arity(x_seq: SymSeq, y_seq: SymSeq, n: int, s_max: int, allow_empty: bool) -> GSet:
    group = symmetric_group(n)
    blocks: List[_TripleBlock] = []
    lookup: Dict[Tuple[int, ...], _TripleBlock] = {}
    offset = 0
    for s in range(s_max + 1):
        x_set = x_seq.carriers[s]
        if x_set.size == 0:
            continue
        for parts in _slot_compositions(n, s, allow_empty):
            factors = [y_seq.carriers[p] for p in parts]
            if any(f.size == 0 for f in factors):
                continue
            induced = induce(factors)
            sizes = tuple(f.size for f in factors)
            strides = tuple(prod(sizes[i + 1:]) for i in range(len(sizes)))
            block = _TripleBlock(s, parts, offset, x_set, induced, sizes, strides)
            blocks.append(block)
            lookup[parts] = block
            offset += block.count
    total = offset
    if total == 0:
        return empty_gset(n)

    uf = UnionFind(total)
    for block in blocks:
        if block.s < 2:
            continue
        s_group = symmetric_group(block.s)
        cosets = coset_table(block.parts)
        block_of_value = [b for b, p in enumerate(block.parts) for _ in range(p)]
        for rho_index in s_group.generators():
            rho = s_group.elements[rho_index]
            rho_inverse = s_group.elements[s_group.inverse[rho_index]]
            new_parts = tuple(block.parts[k - 1] for k in rho)
            target = lookup[new_parts]
            target_cosets = coset_table(new_parts)
            for e in range(block.width):
                rep_pos = e % len(cosets.representatives)
                combo = e // len(cosets.representatives)
                digits = [(combo // stride) % size for stride, size in zip(block.strides, block.sizes)]
                rep = cosets.representatives[rep_pos]
                assignment = [rho_inverse[block_of_value[image - 1]] - 1 for image in rep]
                new_rep = canonical_representative(new_parts, assignment)
                new_digits = [digits[k - 1] for k in rho]
                new_combo = sum(d * stride for d, stride in zip(new_digits, target.strides))
                new_e = new_combo * len(target_cosets.representatives) + target_cosets.position[new_rep]
                for x in range(block.x_set.size):
                    moved_x = int(block.x_set.table[x, rho_index])
                    uf.union(block.offset + x * block.width + e, target.offset + moved_x * target.width + new_e)

    quotient = FiniteQuotient.from_union_find(uf)
    block_starts = [b.offset for b in blocks]
    table = np.empty((quotient.size, group.order), dtype=np.int64)
    labels = []
    for c, rep in enumerate(quotient.representatives):
        block = blocks[int(np.searchsorted(block_starts, rep, side="right")) - 1]
        x, e = divmod(rep - block.offset, block.width)
        moved = block.offset + x * block.width + block.induced.table[e]
        table[c] = [quotient.projection[int(t)] for t in moved]
        cosets = coset_table(block.parts)
        rep_pos = e % len(cosets.representatives)
        combo = e // len(cosets.representatives)
        ys = tuple((combo // stride) % size for stride, size in zip(block.strides, block.sizes))
        labels.append(QoElement(n, block.s, x, block.parts, cosets.representatives[rep_pos], ys))
    logger.debug(f"Composite arity {n}: {total} triples, {quotient.size} classes")
    return GSet(n, table, tuple(labels))


def compose(x_seq: SymSeq, y_seq: SymSeq) -> SymSeq:
    N = _common_arity(x_seq, y_seq)
    allow_empty = y_seq.carriers[0].size > 0
    if allow_empty:
        if x_seq.support_bound is None or x_seq.support_bound > N:
            raise UnboundedCompositionError(
                "composition needs Y_0 empty or X finitely supported within the truncation: "
                "with nullary elements in Y every arity receives contributions from infinitely many s",
                details={"y0_size": y_seq.carriers[0].size, "x_support_bound": x_seq.support_bound, "max_arity": N},
            )
        s_max = x_seq.support_bound
    else:
        s_max = N if x_seq.support_bound is None else min(N, x_seq.support_bound)

    logger.info(f"Composing {x_seq.name} ∘ {y_seq.name} at N={N}")
    carriers = [_compose_arity(x_seq, y_seq, n, min(s_max, N), allow_empty) for n in range(N + 1)]
    if x_seq.support_bound is not None and y_seq.support_bound is not None:
        support = x_seq.support_bound * y_seq.support_bound
    else:
        support = None
    return SymSeq(N, tuple(carriers), support, name=f"{x_seq.name}∘{y_seq.name}")


def _points(points: Union[int, Sequence[Any]]) -> Tuple[Any, ...]:
    if isinstance(points, int):
        return tuple(range(1, points + 1))
    return tuple(points)


def evaluate(seq: SymSeq, points: Union[int, Sequence[Any]]) -> FiniteQuotient:
    """⊔_n (A_n × Xⁿ)/S_n; elements are (n, a, y) with a and y as indices"""
    points = _points(points)
    k = len(points)
    elements: List[Tuple[int, int, Tuple[int, ...]]] = []
    offsets = []
    for n, carrier in enumerate(seq.carriers):
        offsets.append(len(elements))
        for a in range(carrier.size):
            for y in itertools.product(range(k), repeat=n):
                elements.append((n, a, y))

    uf = UnionFind(len(elements))
    for n, carrier in enumerate(seq.carriers):
        if carrier.size == 0 or n < 2:
            continue
        group = symmetric_group(n)
        width = k ** n
        for g in group.generators():
            sigma = group.elements[g]
            for index in range(offsets[n], offsets[n] + carrier.size * width):
                _, a, y = elements[index]
                moved_y = tuple(y[i - 1] for i in sigma)
                code = 0
                for digit in moved_y:
                    code = code * k + digit
                uf.union(index, offsets[n] + int(carrier.table[a, g]) * width + code)

    logger.debug(f"Evaluated {seq.name} at a {k}-element set: {len(elements)} pairs")
    return FiniteQuotient.from_union_find(uf, elements)
