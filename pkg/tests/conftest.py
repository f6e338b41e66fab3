"""Shared graph fixtures."""

from __future__ import annotations

from fractions import Fraction

import pytest

from gclab.cli.common import bundled
from gclab.core.canonical import canonicalize
from gclab.core.cycles import cycle_search, scaled_cycle
from gclab.io.formats import read_document
from gclab.models.chain import ChainVector
from gclab.models.graph import LabelledGraph

# hub 1, rim 2..6, the labelling of the bundled file
X_EDGES = [(3, 0), (4, 0), (5, 0), (1, 0), (2, 0), (5, 1), (1, 2), (2, 3), (3, 4), (4, 5)]


@pytest.fixture
def x_graph() -> LabelledGraph:
    return LabelledGraph.build(6, X_EDGES, name="X")


@pytest.fixture
def x_directed() -> LabelledGraph:
    return read_document(bundled("x_directed.gc")).first()


@pytest.fixture
def k4() -> LabelledGraph:
    return LabelledGraph.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], name="K4")


@pytest.fixture
def theta() -> LabelledGraph:
    return LabelledGraph.build(2, [(0, 1), (0, 1), (0, 1)], name="theta")


@pytest.fixture
def tripod() -> LabelledGraph:
    """Three tadpoles hung off a central vertex."""
    return LabelledGraph.build(4, [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3)], name="tripod")


@pytest.fixture(scope="session")
def gamma() -> ChainVector:
    """The cycle completing X, with X at coefficient 1/5 in the bundled labelling."""
    x = LabelledGraph.build(6, X_EDGES, name="X")
    found = cycle_search(4, 2, canonicalize(x))
    assert found
    return scaled_cycle(found[0], x, Fraction(1, 5))


@pytest.fixture(scope="session")
def y_graph(gamma: ChainVector) -> LabelledGraph:
    x_key = canonicalize(LabelledGraph.build(6, X_EDGES)).canonical
    partners = [g for g in gamma.support() if g != x_key]
    assert len(partners) == 1
    return partners[0]
