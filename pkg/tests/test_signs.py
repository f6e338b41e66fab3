"""Tests for Koszul signs, half-edge orientations and triple-bracket boundary signs."""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from gclab.core.canonical import forget_directions
from gclab.core.complex import (
    admissible_partitions,
    chain_from_terms,
    forget,
    split_graph,
    split_terms,
    split_vertex,
)
from gclab.core.errors import GclabError, GraphError
from gclab.core.signs import (
    half_edge_orientation,
    jacobi_closed_form,
    jacobi_signs,
    koszul_sign,
    reorder_sign,
    split_orientation_sign,
    split_sign,
    suspension_sign,
    vertex_word,
)
from gclab.models.algebra import Generator
from gclab.models.graph import HalfEdge, LabelledGraph, half_edges_at

Split = tuple[int, frozenset[HalfEdge], frozenset[HalfEdge]]


@pytest.fixture
def directed_w4() -> LabelledGraph:
    """Wheel with four spokes; the hub is the only vertex that splits."""
    edges = [(0, 1), (0, 2), (3, 0), (4, 0), (1, 2), (2, 3), (3, 4), (4, 1)]
    return LabelledGraph.build(5, edges, directed=True, name="W4")


@pytest.fixture
def looped() -> LabelledGraph:
    return LabelledGraph.build(3, [(0, 0), (0, 1), (2, 0), (1, 2), (2, 1)], directed=True)


def _splits(g: LabelledGraph) -> list[Split]:
    return [
        (v, first, second)
        for v in range(g.vertex_count)
        if len(half_edges_at(g, v)) >= 4
        for first, second in admissible_partitions(half_edges_at(g, v))
    ]


class TestKoszul:
    def test_odd_swap(self) -> None:
        assert koszul_sign([1, 1], [1, 0]) == -1

    def test_even_swap(self) -> None:
        assert koszul_sign([1, 2], [1, 0]) == 1
        assert koszul_sign([0, 0, 0], [2, 0, 1]) == 1

    def test_cycle_of_three_odd(self) -> None:
        assert koszul_sign([1, 1, 1], [1, 2, 0]) == 1

    def test_not_a_permutation(self) -> None:
        with pytest.raises(GclabError, match="not a permutation"):
            koszul_sign([1, 1], [0, 0])

    def test_reorder(self) -> None:
        a, b, c = Generator("a", 1), Generator("b", 1), Generator("c", 0)
        assert reorder_sign([a, b, c], [b, a, c]) == -1
        assert reorder_sign([a, b, c], [c, a, b]) == 1

    def test_reorder_needs_same_letters(self) -> None:
        a, b = Generator("a", 1), Generator("b", 1)
        with pytest.raises(GclabError, match="rearrangement"):
            reorder_sign([a, b], [a, a])

    @pytest.mark.parametrize("r,d,sign", [(2, 1, -1), (3, 1, 1), (2, 2, 1), (4, 3, -1)])
    def test_suspension(self, r: int, d: int, sign: int) -> None:
        assert suspension_sign(r, d) == sign


class TestHalfEdgeOrientation:
    def test_vertex_words(self, x_directed: LabelledGraph) -> None:
        assert str(vertex_word(x_directed, 0, 1)) == "(e1+ e2+ e3+ e4+ e5+)"
        assert str(vertex_word(x_directed, 1, 1)) == "(e6+ e4- e7-)"
        assert str(vertex_word(x_directed, 2, 1)) == "(e7+ e5- e8-)"
        assert str(vertex_word(x_directed, 3, 1)) == "(e8+ e1- e9-)"

    def test_worked_example_odd_k(self, x_directed: LabelledGraph) -> None:
        orientation = half_edge_orientation(x_directed, 1)
        assert orientation.vertex_signs == (1, 1, -1, -1, 1, 1)
        assert orientation.sign == 1
        assert orientation.factors()[2] == "-(e7+ e5- e8-)"

    def test_every_half_edge_used_once(self, x_directed: LabelledGraph) -> None:
        for k_parity in (0, 1):
            orientation = half_edge_orientation(x_directed, k_parity)
            names = [name for word in orientation.words for name in word.names()]
            assert sorted(names) == sorted(
                f"e{i}{end}" for i in range(1, 11) for end in "+-"
            )

    def test_undirected_rejected(self, x_graph: LabelledGraph) -> None:
        with pytest.raises(GraphError, match="directed"):
            half_edge_orientation(x_graph, 1)


class TestSplitSign:
    @pytest.mark.parametrize("size", [2, 3])
    def test_hub_split_odd_k(self, x_directed: LabelledGraph, size: int) -> None:
        # at odd k every incoming factor is even
        second = frozenset((i, 1) for i in range(5 - size, 5))
        assert split_sign(x_directed, 0, second, 1) == 1

    @pytest.mark.parametrize("size", [2, 3])
    def test_hub_split_even_k(self, x_directed: LabelledGraph, size: int) -> None:
        # e0+ passes the odd first block
        second = frozenset((i, 1) for i in range(5 - size, 5))
        assert split_sign(x_directed, 0, second, 0) == (-1) ** (5 - size)

    def test_trivalent_vertex_cannot_split(self, x_directed: LabelledGraph) -> None:
        with pytest.raises(GraphError, match="valence 3"):
            split_sign(x_directed, 1, frozenset({(5, 1), (3, 0)}), 1)

    def test_block_too_small(self, x_directed: LabelledGraph) -> None:
        with pytest.raises(GraphError, match="second block"):
            split_sign(x_directed, 0, frozenset({(0, 1)}), 1)

    @pytest.mark.parametrize("k_parity", [0, 1])
    @pytest.mark.parametrize("fixture", ["x_directed", "directed_w4", "looped"])
    def test_swapping_blocks(
        self, fixture: str, k_parity: int, request: pytest.FixtureRequest
    ) -> None:
        g: LabelledGraph = request.getfixturevalue(fixture)
        for v, first, second in _splits(g):
            kept = split_graph(g, v, second)
            traded = split_graph(g, v, first)
            w = g.vertex_count
            v1, v2 = vertex_word(kept, v, k_parity), vertex_word(kept, w, k_parity)
            u1, u2 = vertex_word(traded, v, k_parity), vertex_word(traded, w, k_parity)
            transpose = -1 if v1.degree * v2.degree % 2 else 1
            # the new edge changes ends: e0+ leaves o(v2) and e0- joins it
            reverse = reorder_sign(list((v2 + v1).generators), list((u1 + u2).generators))
            product_ = split_sign(g, v, first, k_parity) * split_sign(g, v, second, k_parity)
            assert product_ == transpose * reverse


class TestSplitOrientation:
    @pytest.mark.parametrize("k_parity", [0, 1])
    @pytest.mark.parametrize("fixture", ["x_directed", "directed_w4", "looped"])
    def test_half_edge_route_prepends_new_edge(
        self, fixture: str, k_parity: int, request: pytest.FixtureRequest
    ) -> None:
        g: LabelledGraph = request.getfixturevalue(fixture)
        splits = _splits(g)
        assert splits
        for v, first, second in splits:
            for block in (first, second):
                split = split_graph(g, v, block)
                assert split_orientation_sign(g, v, block, split, k_parity) == 1

    def test_ihx_terms(self, directed_w4: LabelledGraph) -> None:
        partitions = list(admissible_partitions(half_edges_at(directed_w4, 0)))
        assert len(partitions) == 3
        terms = [
            (split_graph(directed_w4, 0, second, reverse), Fraction(1, 2))
            for _, second in partitions
            for reverse in (False, True)
        ]
        expected = chain_from_terms(terms, directed_w4.grading.lowered(), directed=True)
        assert split_vertex(directed_w4, 0) == expected

    @pytest.mark.parametrize("fixture", ["x_directed", "directed_w4", "looped"])
    def test_forget_commutes_with_splitting(
        self, fixture: str, request: pytest.FixtureRequest
    ) -> None:
        g: LabelledGraph = request.getfixturevalue(fixture)
        for v in range(g.vertex_count):
            assert forget(split_vertex(g, v)) == split_vertex(forget_directions(g), v)

    def test_split_terms_use_the_half_edge_sign(
        self, x_directed: LabelledGraph, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        assert {c for _, c in split_terms(x_directed, 0)} == {Fraction(1, 2)}
        monkeypatch.setattr("gclab.core.complex.split_orientation_sign", lambda *_: -1)
        assert {c for _, c in split_terms(x_directed, 0)} == {Fraction(-1, 2)}


class TestJacobi:
    @pytest.mark.parametrize("p,q,r", list(product((2, 3), repeat=3)))
    def test_parity_classes(self, p: int, q: int, r: int) -> None:
        assert jacobi_signs(p, q, r) == jacobi_closed_form(p, q, r)

    def test_random_dimensions(self) -> None:
        rng = np.random.default_rng(2024)
        for p, q, r in rng.integers(2, 12, size=(50, 3)):
            triple = (int(p), int(q), int(r))
            assert jacobi_signs(*triple) == jacobi_closed_form(*triple)

    def test_odd_disks(self) -> None:
        assert jacobi_signs(3, 3, 3) == (1, 1, 1)

    def test_first_coefficient_is_one(self) -> None:
        assert all(jacobi_signs(p, q, r)[0] == 1 for p, q, r in product(range(2, 6), repeat=3))

    def test_small_disks_rejected(self) -> None:
        with pytest.raises(GclabError, match=">= 2"):
            jacobi_signs(1, 2, 2)
