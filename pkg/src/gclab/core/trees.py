"""Tree posets with labelled leaves, their directed versions and the Lie-hedra."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations, product

import networkx as nx

from gclab.core.errors import GclabError
from gclab.core.linalg import rank
from gclab.models.graph import LabelledGraph
from gclab.models.matrix import SparseRationalMatrix
from gclab.models.tree import SimplicialComplex, Tree


def _check_leaves(leaves: int, minimum: int = 3) -> None:
    if leaves < minimum:
        raise GclabError(f"need at least {minimum} leaves, got {leaves}")


@lru_cache(maxsize=32)
def all_splits(leaves: int) -> tuple[int, ...]:
    """Bitmasks of clades avoiding leaf 1 with 2 <= size <= leaves-2."""
    _check_leaves(leaves)
    return tuple(
        mask
        for mask in range(2, 1 << leaves, 2)
        if 2 <= bin(mask).count("1") <= leaves - 2
    )


def compatible(a: int, b: int) -> bool:
    common = a & b
    return common == 0 or common == a or common == b


@lru_cache(maxsize=64)
def _split_sets(leaves: int, size: int) -> tuple[tuple[int, ...], ...]:
    splits = all_splits(leaves)
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        if len(chosen) == size:
            found.append(tuple(chosen))
            return
        for i in range(start, len(splits)):
            candidate = splits[i]
            if all(compatible(candidate, other) for other in chosen):
                chosen.append(candidate)
                extend(i + 1)
                chosen.pop()

    extend(0)
    return tuple(found)


def enumerate_trees(leaves: int, excess: int) -> list[Tree]:
    """All trees with the given leaves and excess, ordered by their sorted split tuples."""
    _check_leaves(leaves)
    if not 0 <= excess <= leaves - 3:
        raise GclabError(f"excess must lie in 0..{leaves - 3}, got {excess}")
    return [Tree(leaves, splits) for splits in _split_sets(leaves, leaves - 3 - excess)]


def corolla(leaves: int) -> Tree:
    """T_l, the tree with a single internal vertex."""
    return Tree(leaves, ())


def contractions(t: Tree) -> list[tuple[int, Tree]]:
    """Single internal-edge contractions, keyed by the contracted split."""
    out: list[tuple[int, Tree]] = []
    for i, split in enumerate(t.splits):
        rest = t.splits[:i] + t.splits[i + 1 :]
        directions = None if t.directions is None else t.directions[:i] + t.directions[i + 1 :]
        out.append((split, Tree(t.leaves, rest, directions, t.incoming)))
    return out


def direction_extensions(t: Tree, p: int, q: int) -> list[Tree]:
    """Every direction on the internal edges, leaves fixed by T(p, q): 2^(l-3-excess) trees."""
    if p + q != t.leaves or p < 0 or q < 0:
        raise GclabError(f"p + q must equal the leaf count {t.leaves}, got {p} + {q}")
    return [
        Tree(t.leaves, t.splits, tuple(choice), p)
        for choice in product((False, True), repeat=len(t.splits))
    ]


def contraction_poset(leaves: int) -> nx.DiGraph:
    """Trees as nodes, an arc from each tree to each single-edge contraction."""
    poset = nx.DiGraph()
    for excess in range(leaves - 2):
        for tree in enumerate_trees(leaves, excess):
            poset.add_node(tree, excess=excess)
            for _, smaller in contractions(tree):
                poset.add_edge(tree, smaller)
    return poset


def one_split_count(leaves: int) -> int:
    return 2 ** (leaves - 1) - leaves - 1


def trivalent_count(leaves: int) -> int:
    """(2l-5)!!"""
    return math.prod(range(2 * leaves - 5, 0, -2))


def tree_count(leaves: int, excess: int) -> int:
    """Number of trees at this excess, by closed form where one is known."""
    _check_leaves(leaves)
    if excess == leaves - 4:
        return one_split_count(leaves)
    if excess == 0:
        return trivalent_count(leaves)
    return len(enumerate_trees(leaves, excess))


def excess_faces(t: Tree) -> list[Tree]:
    """Faces of the cell of metric trees of shape t: every proper contraction, corolla last."""
    faces = {
        Tree(t.leaves, tuple(s for s in t.splits if s not in dropped))
        for size in range(1, len(t.splits) + 1)
        for dropped in combinations(t.splits, size)
    }
    return sorted(faces, key=lambda f: (-len(f.splits), f.splits))


def lie_hedron(leaves: int) -> SimplicialComplex:
    """Splits as vertices, every non-corolla tree as the simplex on its splits."""
    _check_leaves(leaves, minimum=4)
    facets = _split_sets(leaves, leaves - 3)
    return SimplicialComplex(vertices=all_splits(leaves), facets=facets)


def boundary_operator(complex_: SimplicialComplex, dim: int) -> SparseRationalMatrix:
    """Simplicial boundary from dim-faces to (dim-1)-faces with alternating signs."""
    sources = complex_.faces(dim)
    targets = complex_.faces(dim - 1)
    index = {face: i for i, face in enumerate(targets)}
    entries: dict[tuple[int, int], int] = {}
    for j, face in enumerate(sources):
        for i in range(len(face)):
            entries[(index[face[:i] + face[i + 1 :]], j)] = (-1) ** i
    return SparseRationalMatrix.build(len(targets), len(sources), entries)


def complex_homology(complex_: SimplicialComplex) -> list[int]:
    """Rational Betti numbers b_0..b_dim."""
    top = complex_.dimension
    f_vector = complex_.f_vector()
    ranks = [0] + [rank(boundary_operator(complex_, dim)) for dim in range(1, top + 1)] + [0]
    return [f_vector[dim] - ranks[dim] - ranks[dim + 1] for dim in range(top + 1)]


def graph_complex_1d(g: LabelledGraph) -> SimplicialComplex:
    """The 1-dimensional complex of a simple graph."""
    if any(u == v for u, v in g.edges) or len({frozenset(e) for e in g.edges}) < g.edge_count:
        raise GclabError("only simple graphs form a simplicial 1-complex")
    simplices = [(v,) for v in range(g.vertex_count)] + [tuple(sorted(e)) for e in g.edges]
    return SimplicialComplex.from_simplices(simplices)
