"""Vertex splitting, the differential, the averaging map eta and the forgetful map."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from fractions import Fraction
from itertools import combinations

from gclab.core.canonical import canonicalize, forget_directions, with_directions
from gclab.core.errors import ChainError, GraphError
from gclab.core.signs import split_orientation_sign
from gclab.models.chain import ChainVector
from gclab.models.graph import GradedDegrees, HalfEdge, LabelledGraph, half_edges_at

Partition = tuple[frozenset[HalfEdge], frozenset[HalfEdge]]


def admissible_partitions(half_edges: list[HalfEdge]) -> Iterator[Partition]:
    """Unordered splits into two blocks of size >= 2; the first block holds half_edges[0]."""
    rest = half_edges[1:]
    for size in range(2, len(half_edges) - 1):
        for moved in combinations(rest, size):
            second = frozenset(moved)
            yield frozenset(h for h in half_edges if h not in second), second


def split_graph(
    g: LabelledGraph, v: int, second: frozenset[HalfEdge], new_edge_reversed: bool = False
) -> LabelledGraph:
    """Replace v by v and a new last vertex w joined by a new edge with label 1.

    Half-edges in `second` move to w; old labels shift up by one. For directed graphs the
    new edge runs v -> w, or w -> v when new_edge_reversed.
    """
    w = g.vertex_count
    new_edge = (w, v) if new_edge_reversed else (v, w)
    edges = [new_edge]
    for i, (a, b) in enumerate(g.edges):
        a = w if (i, 0) in second else a
        b = w if (i, 1) in second else b
        edges.append((a, b))
    return LabelledGraph(g.vertex_count + 1, tuple(edges), g.directed)


def split_terms(g: LabelledGraph, v: int) -> Iterator[tuple[LabelledGraph, Fraction]]:
    """Raw (graph, coefficient) terms of splitting v, before canonicalisation.

    Directed terms come in both directions of the new edge, each at half the half-edge
    split sign. Reversing the new edge is the split with the two blocks traded.
    """
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v + 1} is not in 1..{g.vertex_count}")
    half_edges = half_edges_at(g, v)
    if len(half_edges) < 4:
        return
    for first, second in admissible_partitions(half_edges):
        if g.directed:
            forward = split_graph(g, v, second)
            yield forward, Fraction(split_orientation_sign(g, v, second, forward), 2)
            swapped = split_orientation_sign(g, v, first, split_graph(g, v, first))
            yield split_graph(g, v, second, new_edge_reversed=True), Fraction(swapped, 2)
        else:
            yield split_graph(g, v, second), Fraction(1)


def chain_from_terms(
    terms: Iterable[tuple[LabelledGraph, Fraction | int]],
    grading: GradedDegrees,
    directed: bool = False,
) -> ChainVector:
    """Collect raw labelled terms into canonical classes, dropping vanishing ones."""
    collected: dict[LabelledGraph, Fraction] = {}
    for graph, coeff in terms:
        if graph.directed != directed:
            raise ChainError("term directedness does not match the chain")
        oriented = canonicalize(graph)
        if oriented.vanishes or coeff == 0:
            continue
        key = oriented.canonical
        total = collected.get(key, Fraction(0)) + oriented.sign * Fraction(coeff)
        if total:
            collected[key] = total
        else:
            collected.pop(key, None)
    return ChainVector(grading=grading, directed=directed, terms=collected)


def chain_from_graph(g: LabelledGraph, coeff: Fraction | int = 1) -> ChainVector:
    return chain_from_terms([(g, coeff)], g.grading, g.directed)


def split_vertex(g: LabelledGraph, v: int) -> ChainVector:
    """Sum over admissible splittings of v; the zero chain when v is 3-valent."""
    return chain_from_terms(split_terms(g, v), g.grading.lowered(), g.directed)


def boundary_terms(g: LabelledGraph) -> Iterator[tuple[LabelledGraph, Fraction]]:
    for v in range(g.vertex_count):
        yield from split_terms(g, v)


def differential(c: ChainVector) -> ChainVector:
    """Apply the vertex-splitting differential; (n, m) goes to (n, m-1)."""
    terms = (
        (graph, coeff * split_coeff)
        for key, coeff in c.terms.items()
        for graph, split_coeff in boundary_terms(key)
    )
    return chain_from_terms(terms, c.grading.lowered(), c.directed)


def eta(c: ChainVector) -> ChainVector:
    """Average each undirected graph over its 2^|E| direction assignments."""
    if c.directed:
        raise ChainError("eta expects an undirected chain")

    def terms() -> Iterator[tuple[LabelledGraph, Fraction]]:
        for key, coeff in c.terms.items():
            weight = coeff / 2**key.edge_count
            for assignment in range(2**key.edge_count):
                yield with_directions(key, assignment), weight

    return chain_from_terms(terms(), c.grading, directed=True)


def forget(c: ChainVector) -> ChainVector:
    """The forgetful map from directed to undirected chains."""
    if not c.directed:
        raise ChainError("forget expects a directed chain")
    return chain_from_terms(
        ((forget_directions(key), coeff) for key, coeff in c.terms.items()), c.grading
    )


def is_cycle(c: ChainVector) -> bool:
    return differential(c).is_zero()


def truncate(c: ChainVector, mu: int) -> ChainVector:
    """Zero out the chain when its excess exceeds the truncation level mu."""
    if c.grading.m > mu:
        return ChainVector.zero(c.grading, c.directed)
    return c
