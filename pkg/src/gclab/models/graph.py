"""Graph value types: labelled (di)graphs, oriented classes and bigradings."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import asdict, dataclass, field

from gclab.core.errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True, slots=True)
class GradedDegrees:
    """Degree n = |E|-|V| and excess m = 2|E|-3|V|."""

    n: int
    m: int

    @classmethod
    def from_counts(cls, vertex_count: int, edge_count: int) -> GradedDegrees:
        return cls(n=edge_count - vertex_count, m=2 * edge_count - 3 * vertex_count)

    @property
    def vertex_count(self) -> int:
        return 2 * self.n - self.m

    @property
    def edge_count(self) -> int:
        return 3 * self.n - self.m

    @property
    def in_range(self) -> bool:
        return self.n >= 1 and 0 <= self.m <= 2 * self.n - 1

    @property
    def loop_order(self) -> int:
        return self.n + 1

    def lowered(self) -> GradedDegrees:
        return GradedDegrees(self.n, self.m - 1)

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True, slots=True)
class LabelledGraph:
    """A finite multigraph whose edge labels are list positions (1-based in text form).

    Directed edges are (tail, head). Undirected edges keep the endpoint order they were
    given in; only canonical forms normalise it to (min, max).
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    directed: bool = False
    name: str = field(default="", compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError(f"vertex_count must be positive, got {self.vertex_count}")
        for label, (u, v) in enumerate(self.edges, start=1):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(
                    f"edge {label} = ({u + 1}, {v + 1}) leaves the vertex range "
                    f"1..{self.vertex_count}"
                )

    @classmethod
    def build(
        cls,
        vertex_count: int,
        edges: Iterable[Iterable[int]],
        directed: bool = False,
        name: str = "",
    ) -> LabelledGraph:
        pairs = tuple((int(u), int(v)) for u, v in (tuple(e) for e in edges))
        return cls(vertex_count=vertex_count, edges=pairs, directed=directed, name=name)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def grading(self) -> GradedDegrees:
        return GradedDegrees.from_counts(self.vertex_count, self.edge_count)

    def valences(self) -> list[int]:
        """Valence per vertex; a loop contributes 2."""
        counts = [0] * self.vertex_count
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return counts

    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def key(self) -> tuple[int, tuple[Edge, ...], bool]:
        return (self.vertex_count, self.edges, self.directed)

    def named(self, name: str) -> LabelledGraph:
        return LabelledGraph(self.vertex_count, self.edges, self.directed, name)


HalfEdge = tuple[int, int]  # (edge index, end) with end 0 = first/tail, 1 = second/head


def half_edges_at(g: LabelledGraph, v: int) -> list[HalfEdge]:
    """Half-edges at v in label order; a loop contributes both of its ends."""
    return [(i, end) for i, edge in enumerate(g.edges) for end in (0, 1) if edge[end] == v]


@dataclass(frozen=True, slots=True)
class OrientedClass:
    """Canonical representative plus the sign relating a labelling to it.

    sign 0 marks a vanishing class (an automorphism acts oddly on the edge labels).
    """

    canonical: LabelledGraph
    sign: int

    @property
    def vanishes(self) -> bool:
        return self.sign == 0


@dataclass(frozen=True, slots=True)
class DirectionOrbit:
    """One orbit of Aut(g) on direction assignments; bit i set reverses edge i."""

    assignment: int
    size: int
    stabilizer: int

    def to_dict(self) -> dict[str, int]:
        return asdict(self)
