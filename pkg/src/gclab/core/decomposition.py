"""The poset of directed graphs obtained from an integral directed cycle by expansions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from gclab.core.canonical import canonical_graph
from gclab.core.complex import split_terms
from gclab.core.errors import ChainError
from gclab.core.multiplicity import n_sigma, numeric_multiplicities
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph
from gclab.models.ledger import MultiplicityLedger


@dataclass(slots=True)
class LevelSummary:
    excess: int
    nodes: int
    copies: int
    n: int
    multiplicities: list[int] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "excess": self.excess,
            "nodes": self.nodes,
            "copies": self.copies,
            "n": self.n,
            "multiplicities": self.multiplicities,
        }


@dataclass(slots=True)
class DecompositionPoset:
    """Nodes are canonical directed graphs; an arc runs from an expansion to its contraction.

    Node attributes: ``excess``, ``copies`` (|coefficient| on top, 1 below), ``n`` = 2^excess
    and ``m``, the product of the valence multiplicities.
    """

    graph: nx.DiGraph
    mu: int

    def levels(self) -> list[LevelSummary]:
        by_excess: dict[int, list[Any]] = {}
        for _, data in self.graph.nodes(data=True):
            by_excess.setdefault(data["excess"], []).append(data)
        return [
            LevelSummary(
                excess=excess,
                nodes=len(rows),
                copies=sum(row["copies"] for row in rows),
                n=n_sigma(excess),
                multiplicities=sorted({row["m"] for row in rows}),
            )
            for excess, rows in sorted(by_excess.items(), reverse=True)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {"mu": self.mu, "levels": [level.to_dict() for level in self.levels()]}


def graph_multiplicity(g: LabelledGraph, multiplicities: dict[int, int]) -> int:
    return math.prod(multiplicities[valence] for valence in g.valences())


def decomposition_poset(
    cycle: ChainVector, ledger: MultiplicityLedger | None = None
) -> DecompositionPoset:
    """Expand every vertex of valence >= 4 down to excess 0, starting from the cycle's terms.

    Expanded graphs are kept even when an automorphism kills their orientation.
    """
    if not cycle.directed:
        raise ChainError("the decomposition poset is built from a directed cycle")
    if not cycle.is_integral():
        raise ChainError("the decomposition poset needs integer coefficients")
    ledger = ledger or MultiplicityLedger()
    poset = nx.DiGraph()
    frontier: list[LabelledGraph] = []
    for graph, coeff in cycle:
        poset.add_node(graph, excess=graph.grading.m, copies=abs(int(coeff)))
        frontier.append(graph)

    while frontier:
        found: dict[LabelledGraph, None] = {}
        for graph in frontier:
            for v in range(graph.vertex_count):
                for term, _ in split_terms(graph, v):
                    child = canonical_graph(term)
                    if child not in poset:
                        poset.add_node(child, excess=child.grading.m, copies=1)
                        found[child] = None
                    poset.add_edge(child, graph)
        frontier = sorted(found, key=LabelledGraph.key)

    top_valence = max((max(g.valences()) for g in poset.nodes), default=4)
    multiplicities = numeric_multiplicities(max(top_valence, 4), ledger)
    for graph, data in poset.nodes(data=True):
        data["n"] = n_sigma(data["excess"])
        data["m"] = graph_multiplicity(graph, multiplicities)
    mu = math.lcm(1, *(data["m"] for _, data in poset.nodes(data=True)))
    return DecompositionPoset(graph=poset, mu=mu)
