"""Leaf-labelled trees and abstract simplicial complexes."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations


def leaf_set(mask: int) -> list[int]:
    """1-based leaf labels of a split bitmask (bit i is leaf i+1)."""
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True, slots=True)
class Tree:
    """A tree with leaves 1..leaves, stored as its set of internal edges (splits).

    Each split is the bitmask of the leaves on the side away from leaf 1. Internal vertices
    are anonymous, so equal split sets are equal trees. For directed trees `directions`
    runs parallel to `splits`: True means the edge points out of the clade towards leaf 1.
    `incoming` is p of T(p, q): leaves 1..p point into the tree, the rest out of it.
    """

    leaves: int
    splits: tuple[int, ...] = ()
    directions: tuple[bool, ...] | None = None
    incoming: int | None = None

    @property
    def excess(self) -> int:
        return self.leaves - 3 - len(self.splits)

    @property
    def is_directed(self) -> bool:
        return self.directions is not None

    @property
    def internal_edge_count(self) -> int:
        return len(self.splits)

    def undirected(self) -> Tree:
        return Tree(self.leaves, self.splits)

    def direction_of(self, split: int) -> bool | None:
        if self.directions is None:
            return None
        return self.directions[self.splits.index(split)]

    def internal_valences(self) -> list[int]:
        """Valences of internal vertices, sorted descending."""
        root = (1 << self.leaves) - 2
        clades = sorted(self.splits, key=lambda s: bin(s).count("1"))
        valences: list[int] = []
        for node in [*clades, root]:
            below = [s for s in clades if s != node and s & node == s]
            maximal = [s for s in below if not any(s != t and s & t == s for t in below)]
            covered = 0
            for s in maximal:
                covered |= s
            loose = bin(node & ~covered).count("1")
            # the parent edge (or leaf 1 at the root) adds one
            valences.append(len(maximal) + loose + 1)
        return sorted(valences, reverse=True)


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its facets; faces are all nonempty subsets."""

    vertices: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
        cells = {tuple(sorted(s)) for s in map(tuple, simplices) if s}
        facets = sorted(
            (s for s in cells if not any(s != t and set(s) < set(t) for t in cells)),
            key=lambda s: (len(s), s),
        )
        vertices = sorted({v for s in cells for v in s})
        return cls(vertices=tuple(vertices), facets=tuple(facets))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, dim: int) -> list[tuple[int, ...]]:
        """Sorted faces with dim+1 vertices."""
        found: set[tuple[int, ...]] = set()
        for facet in self.facets:
            if len(facet) > dim:
                found.update(combinations(facet, dim + 1))
        return sorted(found)

    def iter_faces(self) -> Iterator[tuple[int, ...]]:
        for dim in range(self.dimension + 1):
            yield from self.faces(dim)

    def f_vector(self) -> list[int]:
        return [len(self.faces(dim)) for dim in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** dim * count for dim, count in enumerate(self.f_vector()))
