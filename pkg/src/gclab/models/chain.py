"""Sparse chains over Q keyed by canonical graphs."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from gclab.core.errors import ChainError
from gclab.models.graph import GradedDegrees, LabelledGraph


@dataclass(frozen=True, slots=True)
class ChainVector:
    """Linear combination of canonical graphs, each key standing for its sign +1 class.

    Keys must already be canonical; building from raw labelled graphs goes through
    gclab.core.complex.chain_from_terms, which canonicalises and drops vanishing classes.
    """

    grading: GradedDegrees
    directed: bool = False
    terms: Mapping[LabelledGraph, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for graph, coeff in self.terms.items():
            if coeff == 0:
                raise ChainError("stored coefficients must be nonzero")
            if graph.directed != self.directed:
                raise ChainError("mixed directed and undirected terms")
            if graph.grading != self.grading:
                raise ChainError(
                    f"term with grading {graph.grading} in a chain of grading {self.grading}"
                )

    @classmethod
    def zero(cls, grading: GradedDegrees, directed: bool = False) -> ChainVector:
        return cls(grading=grading, directed=directed, terms={})

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[LabelledGraph, Fraction]]:
        for graph in sorted(self.terms, key=LabelledGraph.key):
            yield graph, self.terms[graph]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return (
            self.grading == other.grading
            and self.directed == other.directed
            and dict(self.terms) == dict(other.terms)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, graph: LabelledGraph) -> Fraction:
        return self.terms.get(graph, Fraction(0))

    def _check_compatible(self, other: ChainVector) -> None:
        if self.directed != other.directed:
            raise ChainError("cannot combine directed and undirected chains")
        if self.terms and other.terms and self.grading != other.grading:
            raise ChainError(f"cannot add gradings {self.grading} and {other.grading}")

    def __add__(self, other: ChainVector) -> ChainVector:
        self._check_compatible(other)
        merged = dict(self.terms)
        for graph, coeff in other.terms.items():
            total = merged.get(graph, Fraction(0)) + coeff
            if total:
                merged[graph] = total
            else:
                merged.pop(graph, None)
        grading = self.grading if self.terms else other.grading
        return ChainVector(grading=grading, directed=self.directed, terms=merged)

    def __neg__(self) -> ChainVector:
        return self.scale(-1)

    def __sub__(self, other: ChainVector) -> ChainVector:
        return self + (-other)

    def scale(self, factor: Fraction | int) -> ChainVector:
        factor = Fraction(factor)
        if factor == 0:
            return ChainVector.zero(self.grading, self.directed)
        scaled = {graph: coeff * factor for graph, coeff in self.terms.items()}
        return ChainVector(grading=self.grading, directed=self.directed, terms=scaled)

    def support(self) -> list[LabelledGraph]:
        return sorted(self.terms, key=LabelledGraph.key)

    def is_integral(self) -> bool:
        return all(coeff.denominator == 1 for coeff in self.terms.values())
