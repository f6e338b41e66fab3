"""Search for cycles completing a seed graph by a few partner graphs."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from gclab.core.canonical import canonicalize, contract_edge
from gclab.core.complex import chain_from_graph, differential
from gclab.core.errors import ChainError
from gclab.core.linalg import solve
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph, OrientedClass
from gclab.models.matrix import SparseRationalMatrix


def partner_candidates(seed: LabelledGraph) -> list[LabelledGraph]:
    """Classes whose boundary can meet the seed's: edge contractions of its boundary terms."""
    found: set[LabelledGraph] = set()
    for term in differential(chain_from_graph(seed)).support():
        for label, (u, v) in enumerate(term.edges):
            if u == v:
                continue
            oriented = canonicalize(contract_edge(term, label))
            if oriented.vanishes or oriented.canonical == seed:
                continue
            found.add(oriented.canonical)
    return sorted(found, key=LabelledGraph.key)


def cycle_search(
    n: int, m: int, seed: OrientedClass, max_partners: int = 2
) -> list[ChainVector]:
    """Cycles seed + sum c_i G_i with the fewest partners G_i, all c_i nonzero.

    A seed that is already a cycle comes back alone. Returns [] when no combination of at
    most max_partners candidates cancels the seed's boundary.
    """
    graph = seed.canonical
    if seed.vanishes:
        raise ChainError("seed class vanishes")
    if graph.grading.n != n or graph.grading.m != m:
        raise ChainError(f"seed has grading {graph.grading}, expected ({n}, {m})")
    seed_chain = chain_from_graph(graph)
    seed_boundary = differential(seed_chain)
    if seed_boundary.is_zero():
        return [seed_chain]

    candidates = partner_candidates(graph)
    boundaries = {g: differential(chain_from_graph(g)) for g in candidates}
    for size in range(1, max_partners + 1):
        found = [
            cycle
            for group in combinations(candidates, size)
            if (cycle := _complete(seed_chain, seed_boundary, group, boundaries)) is not None
        ]
        if found:
            return found
    return []


def _complete(
    seed_chain: ChainVector,
    seed_boundary: ChainVector,
    group: tuple[LabelledGraph, ...],
    boundaries: dict[LabelledGraph, ChainVector],
) -> ChainVector | None:
    rows = sorted(
        set(seed_boundary.terms).union(*(boundaries[g].terms for g in group)),
        key=LabelledGraph.key,
    )
    index = {g: i for i, g in enumerate(rows)}
    entries = {
        (index[term], j): coeff
        for j, g in enumerate(group)
        for term, coeff in boundaries[g].terms.items()
    }
    matrix = SparseRationalMatrix(rows=len(rows), cols=len(group), entries=entries)
    rhs = {index[term]: -coeff for term, coeff in seed_boundary.terms.items()}
    solution = solve(matrix, rhs)
    if solution is None or any(value == 0 for value in solution):
        return None
    cycle = seed_chain
    for g, value in zip(group, solution):
        cycle = cycle + chain_from_graph(g, Fraction(value))
    return cycle


def scaled_cycle(cycle: ChainVector, graph: LabelledGraph, coefficient: Fraction) -> ChainVector:
    """Rescale so that `graph`, in its own labelling, carries the given coefficient."""
    oriented = canonicalize(graph)
    if oriented.vanishes:
        raise ChainError("the reference graph vanishes")
    current = cycle.coefficient(oriented.canonical)
    if current == 0:
        raise ChainError("the reference graph does not occur in the cycle")
    return cycle.scale(coefficient * oriented.sign / current)
