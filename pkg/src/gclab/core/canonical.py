"""Canonical forms, orientation signs and automorphism groups of labelled graphs.

The canonical representative of a graph is the lexicographically least sorted edge list
among the discrete colourings produced by colour refinement plus individualisation. The
set of such leaves is closed under automorphisms, so the minimum is isomorphism-invariant,
and the optimal leaves are exactly the vertex automorphisms composed with one of them.
Undirected edges are compared as (min, max) pairs.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Sequence
from functools import lru_cache

import networkx as nx
import numpy as np

from gclab.core.errors import GraphError
from gclab.models.graph import DirectionOrbit, Edge, LabelledGraph, OrientedClass
from gclab.utils import permutation_sign

# neighbour tags used by refinement
_UNDIRECTED, _OUT, _IN, _LOOP = 0, 1, 2, 3


def is_connected(vertex_count: int, edges: tuple[Edge, ...] | list[Edge]) -> bool:
    multigraph = nx.MultiGraph()
    multigraph.add_nodes_from(range(vertex_count))
    multigraph.add_edges_from(edges)
    return bool(nx.is_connected(multigraph))


def validate(g: LabelledGraph) -> None:
    """Raise GraphError unless g is connected with every valence >= 3."""
    if not is_connected(g.vertex_count, g.edges):
        raise GraphError(f"graph {g.name or '<unnamed>'} is disconnected")
    for vertex, valence in enumerate(g.valences()):
        if valence < 3:
            raise GraphError(
                f"graph {g.name or '<unnamed>'}: vertex {vertex + 1} has valence {valence} < 3"
            )


def _rank(signatures: list[object]) -> list[int]:
    index = {sig: i for i, sig in enumerate(sorted(set(signatures)))}  # type: ignore[type-var]
    return [index[sig] for sig in signatures]


def _adjacency(g: LabelledGraph) -> list[list[tuple[int, int]]]:
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        if u == v:
            adjacency[u].append((u, _LOOP))
        elif g.directed:
            adjacency[u].append((v, _OUT))
            adjacency[v].append((u, _IN))
        else:
            adjacency[u].append((v, _UNDIRECTED))
            adjacency[v].append((u, _UNDIRECTED))
    return adjacency


def _initial_colours(g: LabelledGraph) -> list[int]:
    loops = [0] * g.vertex_count
    outs = [0] * g.vertex_count
    ins = [0] * g.vertex_count
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            outs[u] += 1
            ins[v] += 1
    if g.directed:
        sigs: list[object] = [(loops[v], ins[v], outs[v]) for v in range(g.vertex_count)]
    else:
        sigs = [(loops[v], ins[v] + outs[v]) for v in range(g.vertex_count)]
    return _rank(sigs)


def _refine(colours: list[int], adjacency: list[list[tuple[int, int]]]) -> list[int]:
    colours = _rank(list(colours))
    while True:
        sigs: list[object] = [
            (colours[v], tuple(sorted((colours[w], tag) for w, tag in adjacency[v])))
            for v in range(len(colours))
        ]
        refined = _rank(sigs)
        if max(refined, default=0) == max(colours, default=0):
            return refined
        colours = refined


def _relabelled(g: LabelledGraph, perm: tuple[int, ...]) -> list[Edge]:
    if g.directed:
        return [(perm[u], perm[v]) for u, v in g.edges]
    return [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges]  # type: ignore[misc]


def _leaves(g: LabelledGraph) -> tuple[tuple[Edge, ...], list[tuple[int, ...]]]:
    """Best sorted edge list and every leaf colouring attaining it."""
    adjacency = _adjacency(g)
    best: tuple[Edge, ...] | None = None
    optimal: list[tuple[int, ...]] = []
    stack = [_refine(_initial_colours(g), adjacency)]
    while stack:
        colours = stack.pop()
        sizes = Counter(colours)
        target = min((c for c, size in sizes.items() if size > 1), default=None)
        if target is None:
            perm = tuple(colours)
            candidate = tuple(sorted(_relabelled(g, perm)))
            if best is None or candidate < best:
                best, optimal = candidate, [perm]
            elif candidate == best:
                optimal.append(perm)
            continue
        for vertex in reversed([v for v, c in enumerate(colours) if c == target]):
            branch = [2 * c + 1 for c in colours]
            branch[vertex] = 2 * target
            stack.append(_refine(branch, adjacency))
    assert best is not None
    return best, optimal


@lru_cache(maxsize=200_000)
def _canonical_data(g: LabelledGraph) -> tuple[LabelledGraph, int, int]:
    best, optimal = _leaves(g)
    canonical = LabelledGraph(g.vertex_count, best, g.directed)
    if len(set(best)) < len(best):
        return canonical, 0, len(optimal)
    position = {edge: i for i, edge in enumerate(best)}
    signs = {permutation_sign([position[e] for e in _relabelled(g, perm)]) for perm in optimal}
    sign = signs.pop() if len(signs) == 1 else 0
    return canonical, sign, len(optimal)


def canonicalize(g: LabelledGraph) -> OrientedClass:
    """Canonical form of g and the sign with (g, its labelling) = sign * canonical."""
    validate(g)
    canonical, sign, _ = _canonical_data(g.named(""))
    return OrientedClass(canonical=canonical, sign=sign)


def canonical_graph(g: LabelledGraph) -> LabelledGraph:
    """Canonical representative without validation; used for vanishing and raw keys."""
    return _canonical_data(g.named(""))[0]


def is_isomorphic(a: LabelledGraph, b: LabelledGraph) -> bool:
    return a.directed == b.directed and canonical_graph(a) == canonical_graph(b)


def vertex_automorphisms(g: LabelledGraph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge multiset (and directions)."""
    _, optimal = _leaves(g)
    first = optimal[0]
    inverse = [0] * len(first)
    for old, new in enumerate(first):
        inverse[new] = old
    return sorted(tuple(inverse[perm[v]] for v in range(len(perm))) for perm in optimal)


def automorphism_order(g: LabelledGraph) -> int:
    """|Aut g| counting parallel-edge swaps and, for undirected graphs, loop flips."""
    validate(g)
    canonical, _, vertex_auts = _canonical_data(g.named(""))
    order = vertex_auts
    for multiplicity in Counter(canonical.edges).values():
        order *= math.factorial(multiplicity)
    if not g.directed:
        order *= 2 ** canonical.loop_count()
    return order


def with_directions(g: LabelledGraph, assignment: int) -> LabelledGraph:
    """Directed copy of g; bit i of assignment reverses the stored order of edge i."""
    edges = tuple(
        (v, u) if assignment >> i & 1 else (u, v) for i, (u, v) in enumerate(g.edges)
    )
    return LabelledGraph(g.vertex_count, edges, directed=True, name=g.name)


def forget_directions(g: LabelledGraph) -> LabelledGraph:
    return LabelledGraph(g.vertex_count, g.edges, directed=False, name=g.name)


def direction_orbits(g: LabelledGraph) -> list[DirectionOrbit]:
    """Orbits of Aut(g) on the 2^|E| direction assignments of an undirected graph.

    Two assignments lie in one orbit exactly when the resulting digraphs are isomorphic,
    so orbits are grouped by canonical digraph. Representatives are the least bitmask.
    """
    if g.directed:
        raise GraphError("direction_orbits expects an undirected graph")
    validate(g)
    order = automorphism_order(g)
    groups: dict[LabelledGraph, list[int]] = {}
    for assignment in range(2**g.edge_count):
        key = canonical_graph(with_directions(g, assignment))
        entry = groups.setdefault(key, [assignment, 0])
        entry[1] += 1
    orbits = [
        DirectionOrbit(assignment=rep, size=size, stabilizer=order // size)
        for rep, size in groups.values()
    ]
    return sorted(orbits, key=lambda orbit: orbit.assignment)


def relabel(
    g: LabelledGraph, vertex_perm: Sequence[int], edge_order: Sequence[int]
) -> LabelledGraph:
    """Move vertex v to vertex_perm[v]; new edge i is old edge edge_order[i]."""
    edges = tuple(
        (vertex_perm[g.edges[old][0]], vertex_perm[g.edges[old][1]]) for old in edge_order
    )
    return LabelledGraph(g.vertex_count, edges, g.directed, g.name)


def random_relabel(
    g: LabelledGraph, rng: np.random.Generator
) -> tuple[LabelledGraph, tuple[int, ...]]:
    """A uniformly random relabelling of g together with its edge order."""
    vertex_perm = [int(v) for v in rng.permutation(g.vertex_count)]
    edge_order = tuple(int(e) for e in rng.permutation(g.edge_count))
    return relabel(g, vertex_perm, edge_order), edge_order


def relabelling_invariant(g: LabelledGraph, shuffles: int, seed: int = 0) -> bool:
    """canonicalize agrees on `shuffles` random relabellings, up to the edge-order parity."""
    rng = np.random.default_rng(seed)
    reference = canonicalize(g)
    for _ in range(shuffles):
        moved, edge_order = random_relabel(g, rng)
        oriented = canonicalize(moved)
        if oriented.canonical != reference.canonical:
            return False
        if oriented.sign != reference.sign * permutation_sign(edge_order):
            return False
    return True


def contract_edge(g: LabelledGraph, label: int) -> LabelledGraph:
    """Collapse edge `label` (0-based); its head merges into its tail, later labels shift down."""
    u, v = g.edges[label]
    if u == v:
        raise GraphError(f"edge {label + 1} is a loop and cannot be contracted")

    def moved(x: int) -> int:
        x = u if x == v else x
        return x - 1 if x > v else x

    edges = tuple((moved(a), moved(b)) for i, (a, b) in enumerate(g.edges) if i != label)
    return LabelledGraph(g.vertex_count - 1, edges, g.directed, g.name)


def first_betti(g: LabelledGraph) -> int:
    """b_1 of the underlying 1-complex of a connected graph."""
    return g.edge_count - g.vertex_count + 1
