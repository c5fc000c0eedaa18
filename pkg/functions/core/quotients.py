"""
Quotients of finite sets: union-find and coequalizers.

Every colimit the calculi need (orbit sets, S_s-identifications in the
composition product, the coend-style coequalizers of q_c and q_a) ends up as
"merge these pairs of indices and tell me the classes". Classes are reported
in order of their least member and that least member is the representative,
so results are reproducible no matter in which order pairs arrive.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def union_pairs(self, pairs: Iterable[Tuple[int, int]]) -> None:
        for x, y in pairs:
            self.union(x, y)

    def __len__(self) -> int:
        return len(self.parent)


@dataclass(frozen=True)
class FiniteQuotient:
    elements: Tuple[Any, ...]
    classes: Tuple[Tuple[int, ...], ...]
    projection: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(members[0] for members in self.classes)

    def representative_labels(self) -> Tuple[Any, ...]:
        return tuple(self.elements[i] for i in self.representatives)

    def class_of(self, element: int) -> int:
        return self.projection[element]

    @classmethod
    def from_union_find(cls, uf: UnionFind, elements: Optional[Sequence[Any]] = None) -> "FiniteQuotient":
        n = len(uf)
        labels = tuple(elements) if elements is not None else tuple(range(n))
        members = {}
        for x in range(n):
            members.setdefault(uf.find(x), []).append(x)
        classes = tuple(sorted((tuple(group) for group in members.values()), key=lambda group: group[0]))
        projection = [0] * n
        for c, group in enumerate(classes):
            for x in group:
                projection[x] = c
        return cls(labels, classes, tuple(projection))


def coequalizer(u: Sequence[int], v: Sequence[int], size: int, elements: Optional[Sequence[Any]] = None) -> FiniteQuotient:
    """Smallest equivalence on range(size) with u[a] ~ v[a] for every a"""
    uf = UnionFind(size)
    uf.union_pairs(zip(u, v))
    return FiniteQuotient.from_union_find(uf, elements)
