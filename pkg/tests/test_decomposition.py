"""Tests for the expansion poset of the integral directed cycle."""

from __future__ import annotations

import pytest

from gclab.core.complex import eta
from gclab.core.decomposition import decomposition_poset, graph_multiplicity
from gclab.core.errors import ChainError
from gclab.core.multiplicity import numeric_multiplicities
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph
from gclab.models.ledger import MultiplicityLedger

pytestmark = [pytest.mark.slow, pytest.mark.timeout(600)]


@pytest.fixture(scope="module")
def directed_cycle(gamma: ChainVector) -> ChainVector:
    return eta(gamma.scale(2**10)).scale(5)


class TestDecomposition:
    def test_levels_and_mu(self, directed_cycle: ChainVector) -> None:
        poset = decomposition_poset(directed_cycle)
        assert poset.mu == 80
        levels = poset.levels()
        assert [level.excess for level in levels] == [2, 1, 0]
        assert [level.n for level in levels] == [4, 2, 1]
        assert levels[0].multiplicities == [16, 20]
        assert levels[-1].multiplicities == [1]

    def test_arcs_lower_excess(self, directed_cycle: ChainVector) -> None:
        poset = decomposition_poset(directed_cycle).graph
        for child, parent in poset.edges:
            assert poset.nodes[child]["excess"] == poset.nodes[parent]["excess"] - 1

    def test_top_copies_are_coefficients(self, directed_cycle: ChainVector) -> None:
        poset = decomposition_poset(directed_cycle).graph
        for graph, coeff in directed_cycle:
            assert poset.nodes[graph]["copies"] == abs(int(coeff))

    def test_ledger_scales_mu(self, directed_cycle: ChainVector) -> None:
        poset = decomposition_poset(directed_cycle, MultiplicityLedger(q={5: 3}))
        # lcm(60, 16)
        assert poset.mu == 240

    def test_undirected_rejected(self, gamma: ChainVector) -> None:
        with pytest.raises(ChainError, match="directed"):
            decomposition_poset(gamma)

    def test_fractional_rejected(self, gamma: ChainVector) -> None:
        with pytest.raises(ChainError, match="integer"):
            decomposition_poset(eta(gamma.scale(2**10)))


def test_graph_multiplicity(x_graph: LabelledGraph, k4: LabelledGraph) -> None:
    values = numeric_multiplicities(5, MultiplicityLedger())
    assert graph_multiplicity(x_graph, values) == 20
    assert graph_multiplicity(k4, values) == 1
