"""Tests for canonical forms, orientation signs and automorphisms."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from gclab.core.basis import degree_sequences, realizations
from gclab.core.canonical import (
    automorphism_order,
    canonical_graph,
    canonicalize,
    contract_edge,
    direction_orbits,
    first_betti,
    forget_directions,
    is_connected,
    is_isomorphic,
    random_relabel,
    relabel,
    relabelling_invariant,
    validate,
    vertex_automorphisms,
    with_directions,
)
from gclab.core.errors import GraphError
from gclab.models.graph import GradedDegrees, LabelledGraph
from gclab.utils import permutation_sign


class TestGrading:
    def test_wheel_bidegree(self, x_graph: LabelledGraph) -> None:
        assert x_graph.grading == GradedDegrees(4, 2)
        assert x_graph.grading.loop_order == 5
        assert x_graph.grading.vertex_count == 6
        assert x_graph.grading.edge_count == 10

    def test_lowered(self) -> None:
        assert GradedDegrees(4, 2).lowered() == GradedDegrees(4, 1)

    def test_in_range(self) -> None:
        assert GradedDegrees(2, 0).in_range
        assert not GradedDegrees(2, 4).in_range


class TestValidate:
    def test_rejects_low_valence(self) -> None:
        with pytest.raises(GraphError, match="valence"):
            validate(LabelledGraph.build(2, [(0, 1), (0, 1)]))

    def test_rejects_disconnected(self, k4: LabelledGraph) -> None:
        edges = list(k4.edges) + [(u + 4, v + 4) for u, v in k4.edges]
        with pytest.raises(GraphError, match="connected"):
            validate(LabelledGraph.build(8, edges))

    def test_rejects_vertex_out_of_range(self) -> None:
        with pytest.raises(GraphError, match="vertex range"):
            LabelledGraph.build(2, [(0, 2)])


class TestCanonicalize:
    def test_isomorphic_relabellings_share_canonical_form(self, x_graph: LabelledGraph) -> None:
        rng = np.random.default_rng(0)
        reference = canonicalize(x_graph)
        for _ in range(20):
            vertex_perm = [int(v) for v in rng.permutation(6)]
            edge_order = [int(e) for e in rng.permutation(10)]
            moved = canonicalize(relabel(x_graph, vertex_perm, edge_order))
            assert moved.canonical == reference.canonical
            # relabelling vertices leaves the edge order alone; only edge_order counts
            assert moved.sign == reference.sign * permutation_sign(edge_order)

    def test_random_relabel(self, x_directed: LabelledGraph) -> None:
        moved, edge_order = random_relabel(x_directed, np.random.default_rng(3))
        assert sorted(edge_order) == list(range(10))
        assert moved.directed
        assert canonical_graph(moved) == canonical_graph(x_directed)

    @pytest.mark.parametrize("fixture", ["x_graph", "x_directed", "tripod", "theta"])
    def test_relabelling_invariant(self, fixture: str, request: pytest.FixtureRequest) -> None:
        graph: LabelledGraph = request.getfixturevalue(fixture)
        assert relabelling_invariant(graph, shuffles=25, seed=11)

    def test_multiple_edges_vanish(self, theta: LabelledGraph) -> None:
        assert canonicalize(theta).vanishes

    def test_k4_survives(self, k4: LabelledGraph) -> None:
        assert not canonicalize(k4).vanishes

    def test_tadpoles_survive(self, tripod: LabelledGraph) -> None:
        assert not canonicalize(tripod).vanishes

    def test_canonical_is_idempotent(self, x_graph: LabelledGraph) -> None:
        once = canonicalize(x_graph).canonical
        twice = canonicalize(once)
        assert twice.canonical == once
        assert twice.sign == 1

    def test_names_do_not_matter(self, k4: LabelledGraph) -> None:
        assert canonical_graph(k4) == canonical_graph(k4.named("other"))

    def test_is_isomorphic(self, x_graph: LabelledGraph, k4: LabelledGraph) -> None:
        shuffled = relabel(x_graph, [5, 4, 3, 2, 1, 0], list(range(9, -1, -1)))
        assert is_isomorphic(x_graph, shuffled)
        assert not is_isomorphic(x_graph, k4)


class TestAutomorphisms:
    def test_wheel(self, x_graph: LabelledGraph) -> None:
        assert automorphism_order(x_graph) == 10

    def test_k4(self, k4: LabelledGraph) -> None:
        assert automorphism_order(k4) == 24

    def test_theta_counts_parallel_swaps(self, theta: LabelledGraph) -> None:
        # vertex swap times 3! edge permutations
        assert automorphism_order(theta) == 12

    def test_tripod_counts_loop_flips(self, tripod: LabelledGraph) -> None:
        assert automorphism_order(tripod) == 6 * 2**3

    def test_partner_has_two(self, y_graph: LabelledGraph) -> None:
        assert automorphism_order(y_graph) == 2


class TestDirections:
    def test_orbit_sizes_sum_to_all_assignments(self, x_graph: LabelledGraph) -> None:
        orbits = direction_orbits(x_graph)
        assert sum(o.size for o in orbits) == 2**10
        assert {o.stabilizer for o in orbits} <= {5, 1}
        assert all(o.size * o.stabilizer == 10 for o in orbits)

    def test_orbits_reject_directed(self, x_directed: LabelledGraph) -> None:
        with pytest.raises(GraphError):
            direction_orbits(x_directed)

    def test_with_and_forget(self, k4: LabelledGraph) -> None:
        directed = with_directions(k4, 0b000101)
        assert directed.directed
        assert directed.edges[0] == (1, 0)
        assert directed.edges[1] == (0, 2)
        assert forget_directions(directed).edges == directed.edges
        assert not forget_directions(directed).directed


class TestContraction:
    def test_contract_joins_endpoints(self, k4: LabelledGraph) -> None:
        contracted = contract_edge(k4, 0)
        assert contracted.vertex_count == 3
        assert contracted.edge_count == 5
        assert sorted(contracted.valences()) == [3, 3, 4]

    def test_loop_cannot_contract(self, tripod: LabelledGraph) -> None:
        with pytest.raises(GraphError, match="loop"):
            contract_edge(tripod, 3)

    def test_first_betti(self, x_graph: LabelledGraph, k4: LabelledGraph) -> None:
        assert first_betti(x_graph) == 5
        assert first_betti(k4) == 3


def _edge_keys(g: LabelledGraph, perm: tuple[int, ...]) -> list[tuple[int, int]]:
    if g.directed:
        return [(perm[u], perm[v]) for u, v in g.edges]
    return [(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges]


def _brute_force(g: LabelledGraph) -> tuple[set[tuple[int, ...]], int]:
    """Vertex automorphisms by trying every permutation, and the induced orientation sign."""
    identity = tuple(range(g.vertex_count))
    keys = _edge_keys(g, identity)
    target = sorted(keys)
    position = {key: i for i, key in enumerate(keys)}
    auts: set[tuple[int, ...]] = set()
    signs: set[int] = set()
    for perm in itertools.permutations(identity):
        image = _edge_keys(g, perm)
        if sorted(image) != target:
            continue
        auts.add(perm)
        if len(position) == len(keys):
            signs.add(permutation_sign([position[key] for key in image]))
    sign = 1 if signs == {1} else 0
    return auts, sign


def _graphs(
    grading: GradedDegrees, directed: bool, loops: bool = True, multiplicity: int = 2
) -> list[LabelledGraph]:
    out = []
    for degrees in degree_sequences(grading.vertex_count, grading.edge_count):
        for edges in realizations(degrees, loops=loops, max_multiplicity=multiplicity):
            if not is_connected(grading.vertex_count, edges):
                continue
            graph = LabelledGraph(grading.vertex_count, edges)
            out.append(with_directions(graph, 0b1011) if directed else graph)
    return out


class TestAgainstBruteForce:
    @pytest.mark.parametrize("directed", [False, True])
    @pytest.mark.parametrize("n, m", [(2, 0), (3, 1), (3, 2), (3, 3), (4, 2), (3, 0)])
    def test_vanishing_matches_enumeration(self, n: int, m: int, directed: bool) -> None:
        graphs = _graphs(GradedDegrees(n, m), directed)
        assert graphs
        for graph in graphs:
            auts, sign = _brute_force(graph)
            assert set(vertex_automorphisms(graph)) == auts
            assert canonicalize(graph).vanishes == (sign == 0)

    @pytest.mark.slow
    @pytest.mark.timeout(600)
    @pytest.mark.parametrize("n, m", [(4, 1), (4, 0)])
    def test_vanishing_up_to_eight_vertices(self, n: int, m: int) -> None:
        for graph in _graphs(GradedDegrees(n, m), False, loops=False, multiplicity=1):
            auts, sign = _brute_force(graph)
            assert len(vertex_automorphisms(graph)) == len(auts)
            assert canonicalize(graph).vanishes == (sign == 0)
