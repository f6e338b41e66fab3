"""Tests for the cycle search around the wheel X."""

from __future__ import annotations

from fractions import Fraction

import pytest

from gclab.core.canonical import automorphism_order, canonicalize
from gclab.core.complex import chain_from_graph, differential, is_cycle
from gclab.core.cycles import cycle_search, partner_candidates, scaled_cycle
from gclab.core.errors import ChainError
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph


class TestCycleSearch:
    def test_partner_is_a_candidate(
        self, x_graph: LabelledGraph, y_graph: LabelledGraph
    ) -> None:
        assert y_graph in partner_candidates(canonicalize(x_graph).canonical)

    def test_gamma_coefficients(
        self, gamma: ChainVector, x_graph: LabelledGraph, y_graph: LabelledGraph
    ) -> None:
        x_key = canonicalize(x_graph).canonical
        assert abs(gamma.coefficient(x_key)) == Fraction(1, 5)
        assert abs(gamma.coefficient(y_graph)) == Fraction(1, 2)

    def test_partner_shape(self, y_graph: LabelledGraph) -> None:
        assert automorphism_order(y_graph) == 2
        assert sorted(y_graph.valences()) == [3, 3, 3, 3, 4, 4]

    def test_cycle_seed_returns_alone(self, k4: LabelledGraph) -> None:
        found = cycle_search(2, 0, canonicalize(k4))
        assert found == [chain_from_graph(canonicalize(k4).canonical)]

    def test_grading_mismatch(self, k4: LabelledGraph) -> None:
        with pytest.raises(ChainError, match="grading"):
            cycle_search(3, 0, canonicalize(k4))

    def test_vanishing_seed(self, theta: LabelledGraph) -> None:
        with pytest.raises(ChainError, match="vanishes"):
            cycle_search(1, 0, canonicalize(theta))

    def test_no_partners_allowed(self, x_graph: LabelledGraph) -> None:
        assert cycle_search(4, 2, canonicalize(x_graph), max_partners=0) == []


class TestScaledCycle:
    def test_reference_coefficient_in_own_labelling(
        self, gamma: ChainVector, x_graph: LabelledGraph
    ) -> None:
        oriented = canonicalize(x_graph)
        assert gamma.coefficient(oriented.canonical) * oriented.sign == Fraction(1, 5)
        rescaled = scaled_cycle(gamma, x_graph, Fraction(1))
        assert is_cycle(rescaled)
        assert rescaled == gamma.scale(5)

    def test_absent_reference(self, gamma: ChainVector, k4: LabelledGraph) -> None:
        with pytest.raises(ChainError, match="does not occur"):
            scaled_cycle(gamma, k4, Fraction(1))

    def test_boundary_of_x_alone_is_cancelled_by_y(
        self, gamma: ChainVector, x_graph: LabelledGraph, y_graph: LabelledGraph
    ) -> None:
        x_part = chain_from_graph(canonicalize(x_graph).canonical)
        y_part = chain_from_graph(y_graph)
        x_coeff = gamma.coefficient(canonicalize(x_graph).canonical)
        y_coeff = gamma.coefficient(y_graph)
        assert differential(x_part.scale(x_coeff)) == -differential(y_part.scale(y_coeff))
