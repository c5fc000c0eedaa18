"""
Standard Finite Sets and Maps

The substrate everything else sits on: the standard sets n̄ = {1, ..., n},
arbitrary maps between them, permutations, and ordered compositions of an
integer. Points are 1-based everywhere a user can see them, so a map is
just the tuple of its images.

Two factorisations come up all over the calculi. Any map splits as a
non-decreasing map after a permutation (the permutation stably sorts the
fibres), and a non-decreasing map is pinned down by its fibre sizes. The
q_a side also needs to move between an arbitrary decomposition of a set into
labelled pieces and the "blocks laid end to end" ordering, which is what
block_order does.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError, PreconditionError
from ..infrastructure.caching import cached_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StdFinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise DomainError(f"standard finite set needs size >= 0, got {self.size}", details={"size": self.size})

    def elements(self) -> range:
        return range(1, self.size + 1)

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True, eq=False)
class FinMap:
    dom: StdFinSet
    cod: StdFinSet
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.dom.size:
            raise DomainError(
                f"map on {self.dom.size} points given {len(images)} images",
                details={"dom": self.dom.size, "images": list(images)},
            )
        for image in images:
            if not 1 <= image <= self.cod.size:
                raise DomainError(
                    f"image {image} outside 1..{self.cod.size}",
                    details={"cod": self.cod.size, "images": list(images)},
                )

    @classmethod
    def of(cls, images: Sequence[int], cod: int) -> "FinMap":
        return cls(StdFinSet(len(images)), StdFinSet(cod), tuple(images))

    @classmethod
    def identity(cls, n: int) -> "FinMap":
        return cls.of(tuple(range(1, n + 1)), n)

    @property
    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.dom.size, self.cod.size, self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinMap):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "FinMap") -> bool:
        return self.key < other.key

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    @property
    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.images, self.images[1:]))

    @property
    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and len(set(self.images)) == self.dom.size

    def fibre(self, point: int) -> Tuple[int, ...]:
        return tuple(i for i, image in enumerate(self.images, start=1) if image == point)

    def as_perm(self) -> "Perm":
        return Perm(self.dom, self.cod, self.images)


@dataclass(frozen=True, eq=False)
class Perm(FinMap):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_bijective:
            raise DomainError(f"{list(self.images)} is not a permutation", details={"images": list(self.images)})

    @classmethod
    def of(cls, images: Sequence[int], cod: Optional[int] = None) -> "Perm":
        n = len(images)
        return cls(StdFinSet(n), StdFinSet(n if cod is None else cod), tuple(images))

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls.of(tuple(range(1, n + 1)))

    def inverse(self) -> "Perm":
        return Perm.of(invert_images(self.images))


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise DomainError(f"composition parts must be >= 0: {list(self.parts)}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def offsets(self) -> Tuple[int, ...]:
        return tuple(itertools.accumulate((0,) + self.parts[:-1])) if self.parts else ()


def compose_images(g: Sequence[int], f: Sequence[int]) -> Tuple[int, ...]:
    """Images of g∘f, both given as 1-based image tuples"""
    return tuple(g[i - 1] for i in f)


def invert_images(sigma: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma, start=1):
        inverse[image - 1] = i
    return tuple(inverse)


def compose_maps(f: FinMap, g: FinMap) -> FinMap:
    """g∘f; f must land where g starts"""
    if f.cod.size != g.dom.size:
        raise DomainError(
            f"cannot compose: codomain {f.cod.size} of the first map is not the domain {g.dom.size} of the second",
            details={"f": list(f.images), "g": list(g.images), "f_cod": f.cod.size, "g_dom": g.dom.size},
        )
    return FinMap(f.dom, g.cod, compose_images(g.images, f.images))


def monotone_perm_factor(f: FinMap) -> Tuple[FinMap, Perm]:
    """Split f as φ∘σ, φ non-decreasing and σ the stable sort of the fibres"""
    order = sorted(range(f.dom.size), key=lambda i: f.images[i])
    phi = FinMap(f.dom, f.cod, tuple(f.images[i] for i in order))
    sigma = [0] * f.dom.size
    for position, i in enumerate(order, start=1):
        sigma[i] = position
    return phi, Perm.of(sigma)


def fibre_composition(phi: FinMap) -> Composition:
    if not phi.is_monotone:
        raise PreconditionError(
            f"fibre composition needs a non-decreasing map, got {list(phi.images)}",
            details={"images": list(phi.images)},
        )
    counts = [0] * phi.cod.size
    for image in phi.images:
        counts[image - 1] += 1
    return Composition(tuple(counts))


def all_maps(m: int, n: int) -> List[FinMap]:
    """Every map m̄ → n̄, images in lexicographic order"""
    def build():
        return [FinMap.of(images, n) for images in itertools.product(range(1, n + 1), repeat=m)]
    return cached_table(("maps", m, n), build)


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `parts` non-negative integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions(total: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of positive integers summing to `total`, shortest first"""
    if total == 0:
        yield ()
        return
    for length in range(1, total + 1):
        for parts in weak_compositions(total - length, length):
            yield tuple(p + 1 for p in parts)


def multinomial(parts: Sequence[int]) -> int:
    result, running = 1, 0
    for p in parts:
        for k in range(1, p + 1):
            running += 1
            result = result * running // k
    return result


def block_sum(f: FinMap, g: FinMap) -> FinMap:
    """f⊕g acting on consecutive blocks"""
    p, q = f.cod.size, g.cod.size
    images = f.images + tuple(image + p for image in g.images)
    return FinMap.of(images, p + q)


def block_order(h: FinMap) -> Perm:
    """Position of each point once the fibres of h are laid end to end.

    Fibres appear in order of their h-value and keep their own order inside.
    For consecutive fibres this is the identity.
    """
    sizes = [0] * h.cod.size
    for image in h.images:
        sizes[image - 1] += 1
    offsets = list(itertools.accumulate([0] + sizes[:-1])) if sizes else []
    seen = [0] * h.cod.size
    positions = []
    for image in h.images:
        seen[image - 1] += 1
        positions.append(offsets[image - 1] + seen[image - 1])
    return Perm.of(positions)


def blocks_map(parts: Sequence[int]) -> FinMap:
    """The non-decreasing map sending block i of `parts` to i"""
    images = tuple(i for i, p in enumerate(parts, start=1) for _ in range(p))
    return FinMap.of(images, len(parts))


def restrict_to_fibres(f: FinMap, pieces: Sequence[Sequence[int]]) -> List[FinMap]:
    """For f: m̄ → n̄ and sorted pieces U_i of n̄, the maps f⁻¹(U_i) → U_i read on standard sets"""
    restricted = []
    for piece in pieces:
        rank = {point: k for k, point in enumerate(piece, start=1)}
        images = tuple(rank[image] for image in f.images if image in rank)
        restricted.append(FinMap.of(images, len(piece)))
    return restricted
