"""
Symmetric groups and Young cosets.

S_n is tabulated once per degree: its elements in lexicographic order (so the
identity sits at index 0), a numpy multiplication table and an inverse table.
The product is composition, (σ·τ)(i) = σ(τ(i)), which is what makes
x·σ = x∘σ a right action.

Young subgroups H = S_{p1}×…×S_{ps} preserve the consecutive blocks of a
composition. A right coset Hg only remembers which block every position is sent
into, so the lexicographically least member assigns the values of each block
in increasing order of position. coset_normalize splits any g as h∘r with r
that least member.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from .errors import CapacityError
from .finset import Composition, Perm, compose_images, invert_images, multinomial
from ..config.calculus_config import ConfigurationManager
from ..infrastructure.caching import cached_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SymmetricGroup:
    degree: int
    elements: Tuple[Tuple[int, ...], ...]
    index: Dict[Tuple[int, ...], int]
    mult: np.ndarray
    inverse: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    def perm(self, i: int) -> Perm:
        return Perm.of(self.elements[i])

    def position(self, sigma: Union[Perm, Sequence[int]]) -> int:
        images = sigma.images if isinstance(sigma, Perm) else tuple(sigma)
        return self.index[images]

    def generators(self) -> List[int]:
        """Adjacent transpositions (i i+1)"""
        gens = []
        for i in range(self.degree - 1):
            images = list(range(1, self.degree + 1))
            images[i], images[i + 1] = images[i + 1], images[i]
            gens.append(self.index[tuple(images)])
        return gens


def _build_symmetric_group(n: int) -> SymmetricGroup:
    elements = tuple(itertools.permutations(range(1, n + 1)))
    index = {sigma: i for i, sigma in enumerate(elements)}
    order = len(elements)
    mult = np.empty((order, order), dtype=np.int64)
    for i, sigma in enumerate(elements):
        for j, tau in enumerate(elements):
            mult[i, j] = index[compose_images(sigma, tau)]
    inverse = np.array([index[invert_images(sigma)] for sigma in elements], dtype=np.int64)
    logger.debug(f"Tabulated S_{n} ({order} elements)")
    return SymmetricGroup(n, elements, index, mult, inverse)


def symmetric_group(n: int) -> SymmetricGroup:
    bound = ConfigurationManager.active().arity_bound
    if n > bound:
        raise CapacityError(
            f"arity {n} exceeds the configured arity bound {bound}",
            details={"arity": n, "arity_bound": bound},
        )
    return cached_table(("sym", n), lambda: _build_symmetric_group(n))


def block_embedding(parts: Sequence[int], block: int, local: Sequence[int]) -> Tuple[int, ...]:
    """Images of the permutation acting as `local` on block `block` (0-based) and fixing the rest"""
    n = sum(parts)
    offset = sum(parts[:block])
    images = list(range(1, n + 1))
    for j, image in enumerate(local):
        images[offset + j] = offset + image
    return tuple(images)


def block_restriction(parts: Sequence[int], h: Sequence[int]) -> List[Tuple[int, ...]]:
    """Pieces h_i ∈ S_{p_i} of a block-preserving permutation"""
    pieces, offset = [], 0
    for p in parts:
        pieces.append(tuple(h[offset + j] - offset for j in range(p)))
        offset += p
    return pieces


def block_permutation(parts: Sequence[int], rho: Sequence[int]) -> Perm:
    """Moves block ρ(i) of `parts` onto position i of the relabelled composition"""
    parts = tuple(parts)
    relabelled = tuple(parts[k - 1] for k in rho)
    offsets = Composition(parts).offsets()
    new_offsets = Composition(relabelled).offsets()
    images = [0] * sum(parts)
    for i, k in enumerate(rho):
        for j in range(parts[k - 1]):
            images[offsets[k - 1] + j] = new_offsets[i] + j + 1
    return Perm.of(images)


def _block_of_value(parts: Sequence[int]) -> List[int]:
    return [block for block, p in enumerate(parts) for _ in range(p)]


def canonical_representative(parts: Sequence[int], assignment: Sequence[int]) -> Tuple[int, ...]:
    """Least permutation sending position j into block assignment[j] (0-based blocks)"""
    next_value = [offset + 1 for offset in Composition(tuple(parts)).offsets()]
    images = []
    for block in assignment:
        images.append(next_value[block])
        next_value[block] += 1
    return tuple(images)


def _normalize_images(parts: Sequence[int], g: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    block_of = _block_of_value(parts)
    r = canonical_representative(parts, [block_of[image - 1] for image in g])
    h = compose_images(g, invert_images(r))
    return h, r


def coset_normalize(parts: Sequence[int], g: Perm) -> Tuple[Perm, Perm]:
    """g = h∘r with h in the Young subgroup and r the canonical representative of Hg"""
    h, r = _normalize_images(tuple(parts), g.images)
    return Perm.of(h), Perm.of(r)


@dataclass(frozen=True, eq=False)
class CosetTable:
    parts: Tuple[int, ...]
    representatives: Tuple[Tuple[int, ...], ...]
    position: Dict[Tuple[int, ...], int]
    # for every element g of S_n: position of the representative of Hg
    representative_of: np.ndarray
    # for every g: index of h_i in S_{p_i}, where g = h∘r
    block_factors: np.ndarray


def coset_table(parts: Sequence[int]) -> CosetTable:
    parts = tuple(parts)
    group = symmetric_group(sum(parts))

    def build() -> CosetTable:
        factor_groups = [symmetric_group(p) for p in parts]
        split = [_normalize_images(parts, g) for g in group.elements]
        representatives = tuple(sorted({r for _, r in split}))
        position = {r: i for i, r in enumerate(representatives)}
        representative_of = np.array([position[r] for _, r in split], dtype=np.int64)
        block_factors = np.zeros((group.order, len(parts)), dtype=np.int64)
        for g, (h, _) in enumerate(split):
            for i, piece in enumerate(block_restriction(parts, h)):
                block_factors[g, i] = factor_groups[i].index[piece]
        logger.debug(f"Young cosets for {parts}: {len(representatives)} of {multinomial(parts)} expected")
        return CosetTable(parts, representatives, position, representative_of, block_factors)

    return cached_table(("cosets", parts), build)


def young_cosets(parts: Union[Composition, Sequence[int]]) -> List[Perm]:
    """Canonical representatives of H\\S_n, sorted lexicographically"""
    parts = parts.parts if isinstance(parts, Composition) else tuple(parts)
    table = coset_table(parts)
    return [Perm.of(r) for r in table.representatives]
