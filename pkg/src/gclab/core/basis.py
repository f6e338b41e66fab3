"""Enumeration of the nonvanishing canonical classes spanning GC^(n,m).

Graphs are realised degree sequence by degree sequence. Vertices are completed in index
order: the current vertex takes an optional loop and then all remaining half-edges go to
later vertices. Untouched vertices with the same target degree are interchangeable, so the
multiplicities chosen towards them are kept non-increasing.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from gclab.core.canonical import canonical_graph, canonicalize, is_connected, with_directions
from gclab.models.graph import Edge, GradedDegrees, LabelledGraph, OrientedClass


def degree_sequences(vertex_count: int, edge_count: int) -> list[tuple[int, ...]]:
    """Non-increasing sequences with entries >= 3 summing to 2|E|."""
    total = 2 * edge_count
    found: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        slots = vertex_count - len(prefix)
        if slots == 0:
            if remaining == 0:
                found.append(tuple(prefix))
            return
        low = 3
        high = min(cap, remaining - 3 * (slots - 1))
        for degree in range(high, low - 1, -1):
            prefix.append(degree)
            extend(prefix, remaining - degree, degree)
            prefix.pop()

    if vertex_count >= 1:
        extend([], total, total)
    return found


def realizations(
    degrees: tuple[int, ...], loops: bool = True, max_multiplicity: int = 1
) -> Iterator[tuple[Edge, ...]]:
    """Edge lists realising `degrees` with at most one loop per vertex."""
    count = len(degrees)
    remaining = list(degrees)
    touched = [False] * count
    edges: list[Edge] = []

    def choose(
        v: int, candidates: list[int], index: int, need: int, last: dict[int, int]
    ) -> Iterator[list[tuple[int, int]]]:
        if need == 0:
            yield []
            return
        if index == len(candidates):
            return
        w = candidates[index]
        top = min(max_multiplicity, remaining[w], need)
        fresh_group = None if touched[w] else degrees[w]
        if fresh_group is not None and fresh_group in last:
            top = min(top, last[fresh_group])
        for mult in range(top, -1, -1):
            saved = last.get(fresh_group) if fresh_group is not None else None
            if fresh_group is not None:
                last[fresh_group] = mult
            for tail in choose(v, candidates, index + 1, need - mult, last):
                yield ([(w, mult)] if mult else []) + tail
            if fresh_group is not None:
                if saved is None:
                    del last[fresh_group]
                else:
                    last[fresh_group] = saved

    def place(v: int) -> Iterator[tuple[Edge, ...]]:
        while v < count and remaining[v] == 0:
            v += 1
        if v == count:
            yield tuple(edges)
            return
        loop_options = (0, 1) if loops and remaining[v] >= 2 else (0,)
        for loop in loop_options:
            need = remaining[v] - 2 * loop
            candidates = [w for w in range(v + 1, count) if remaining[w] > 0]
            for choice in list(choose(v, candidates, 0, need, {})):
                was_touched = [touched[w] for w, _ in choice]
                start = len(edges)
                if loop:
                    edges.append((v, v))
                for w, mult in choice:
                    edges.extend([(v, w)] * mult)
                    remaining[w] -= mult
                    touched[w] = True
                saved_v, saved_touch = remaining[v], touched[v]
                remaining[v], touched[v] = 0, True
                yield from place(v + 1)
                remaining[v], touched[v] = saved_v, saved_touch
                for (w, mult), flag in zip(choice, was_touched):
                    remaining[w] += mult
                    touched[w] = flag
                del edges[start:]

    yield from place(0)


def _underlying_graphs(
    grading: GradedDegrees, loops: bool, max_multiplicity: int
) -> list[LabelledGraph]:
    seen: dict[LabelledGraph, LabelledGraph] = {}
    vertex_count, edge_count = grading.vertex_count, grading.edge_count
    for degrees in degree_sequences(vertex_count, edge_count):
        for edges in realizations(degrees, loops=loops, max_multiplicity=max_multiplicity):
            if not is_connected(vertex_count, edges):
                continue
            graph = LabelledGraph(vertex_count, edges)
            seen.setdefault(canonical_graph(graph), graph)
    return sorted(seen, key=LabelledGraph.key)


@lru_cache(maxsize=64)
def basis(n: int, m: int, directed: bool = False, loops: bool = True) -> tuple[OrientedClass, ...]:
    """Nonvanishing canonical classes of bidegree (n, m), sorted by canonical key."""
    grading = GradedDegrees(n, m)
    if not grading.in_range:
        return ()
    classes: dict[LabelledGraph, OrientedClass] = {}
    if not directed:
        for graph in _underlying_graphs(grading, loops, max_multiplicity=1):
            oriented = canonicalize(graph)
            if not oriented.vanishes:
                classes[oriented.canonical] = OrientedClass(oriented.canonical, 1)
    else:
        # antiparallel pairs survive in the directed complex
        for graph in _underlying_graphs(grading, loops, max_multiplicity=2):
            for assignment in range(2**graph.edge_count):
                oriented = canonicalize(with_directions(graph, assignment))
                if not oriented.vanishes:
                    classes.setdefault(oriented.canonical, OrientedClass(oriented.canonical, 1))
    return tuple(classes[key] for key in sorted(classes, key=LabelledGraph.key))


def basis_index(classes: tuple[OrientedClass, ...]) -> dict[LabelledGraph, int]:
    return {cls.canonical: i for i, cls in enumerate(classes)}
