import os
import sys
from itertools import product

import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.errors import HypothesisError, ParameterError
from src.families import complete, complete_multipartite, cycle, onion, path
from src.graph import (
    INFINITY,
    ColoredVertexSet,
    Graph,
    contract,
    contract_with_map,
    girth,
    indices_to_mask,
    induced_subgraph,
    is_connected,
    is_cycle_graph,
    is_forest,
    is_two_connected,
    mask_to_indices,
    multipartite_coloring,
    nullity,
    rank,
    require_connected_simple,
    two_connected_induced_edge_sets,
    verified_coloring,
)


@pytest.fixture
def bowtie():
    """Two triangles sharing vertex 0."""
    return Graph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)))


def test_edges_are_normalized_and_sorted():
    graph = Graph(3, ((2, 1), (1, 0)))
    assert graph.edges == ((0, 1), (1, 2))
    assert graph.simple
    assert Graph(3, ((0, 1), (1, 2))) == graph


def test_multigraph_is_not_simple():
    assert not Graph(2, ((0, 1), (0, 1))).simple
    assert not Graph(1, ((0, 0),)).simple


def test_edge_outside_vertex_range_raises():
    with pytest.raises(ParameterError, match="outside"):
        Graph(2, ((0, 2),))


@pytest.mark.parametrize(
    "edges, colors",
    [
        (((True, 2),), None),
        (((0.9, 1),), None),
        ((("a", 1),), None),
        (((0, 1),), (0, 1.5, 1)),
        (((0, 1),), (False, True, True)),
    ],
)
def test_non_integer_labels_are_rejected(edges, colors):
    with pytest.raises(ParameterError, match="must be an integer"):
        Graph(3, edges, colors=colors)


def test_non_integer_vertex_count_is_rejected():
    with pytest.raises(ParameterError, match="vertex_count must be an integer"):
        Graph(3.0, ())



def test_subset_with_extra_bits_raises():
    with pytest.raises(ParameterError, match="bits beyond"):
        rank(cycle(3), 0b1000)


def test_mask_helpers():
    assert mask_to_indices(0b10110) == [1, 2, 4]
    assert indices_to_mask([1, 2, 4]) == 0b10110


def test_rank_and_nullity_of_standard_graphs():
    k4 = complete(4)
    assert rank(k4) == 3
    assert nullity(k4) == 3
    assert rank(cycle(5)) == 4
    assert nullity(cycle(5)) == 1
    assert nullity(path(6)) == 0
    assert rank(k4, 0) == 0


def test_rank_is_submodular_and_monotone_on_k4():
    k4 = complete(4)
    masks = range(1 << k4.edge_count)
    for a, b in product(masks, masks):
        assert rank(k4, a | b) + rank(k4, a & b) <= rank(k4, a) + rank(k4, b)
        if a & b == a:
            assert rank(k4, a) <= rank(k4, b)


def test_contraction_rank_identity():
    k4 = complete(4)
    for subset in range(1 << k4.edge_count):
        assert rank(contract(k4, subset)) == rank(k4) - rank(k4, subset)


def test_contracting_a_triangle_edge_gives_parallel_pair():
    assert contract(cycle(3), 0b001) == Graph(2, ((0, 1), (0, 1)))


def test_contracting_a_four_cycle_of_k23():
    # onion(2,2,2) edges: (0,2),(0,3),(0,4),(1,2),(1,3),(1,4)
    four_cycle = indices_to_mask([0, 1, 3, 4])
    quotient, edge_map = contract_with_map(onion(2, 2, 2), four_cycle)
    assert quotient == Graph(2, ((0, 1), (0, 1)))
    assert edge_map == (2, 5)


def test_contraction_creates_loops():
    # contracting two edges of a triangle turns the third into a loop
    assert contract(cycle(3), 0b011) == Graph(1, ((0, 0),))


def test_girth():
    assert girth(cycle(7)) == 7
    assert girth(onion(2, 2, 2)) == 4
    assert girth(complete(4)) == 3
    assert girth(path(4)) is INFINITY
    assert girth(Graph(1, ((0, 0),))) == 1
    assert girth(Graph(2, ((0, 1), (0, 1)))) == 2


def test_infinity_compares_above_integers():
    assert 10**9 < INFINITY
    assert not INFINITY < 3
    assert min(5, INFINITY) == 5


def test_connectivity(bowtie):
    assert is_connected(bowtie)
    assert not is_two_connected(bowtie)
    assert is_two_connected(cycle(3))
    assert not is_two_connected(path(2))
    assert is_two_connected(Graph(2, ((0, 1), (0, 1))))
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))


def test_require_connected_simple():
    with pytest.raises(HypothesisError, match="connected"):
        require_connected_simple(Graph(4, ((0, 1), (2, 3))), "mcd")
    with pytest.raises(HypothesisError, match="simple"):
        require_connected_simple(Graph(2, ((0, 1), (0, 1))), "mcd")


def test_induced_subgraph_maps_back_to_host():
    subgraph, vertex_map, edge_map = induced_subgraph(complete(4), [2, 0, 1])
    assert subgraph == cycle(3)
    assert vertex_map == (0, 1, 2)
    assert [complete(4).edges[i] for i in edge_map] == [(0, 1), (0, 2), (1, 2)]


def test_induced_subgraph_keeps_colors():
    k32 = complete_multipartite(3, 2)
    subgraph, _, _ = induced_subgraph(k32, [0, 1, 3, 4])
    assert is_cycle_graph(subgraph)
    assert subgraph.colors == (0, 0, 1, 1)


def test_two_connected_induced_edge_sets(bowtie):
    assert two_connected_induced_edge_sets(cycle(3)) == [0b111]
    assert two_connected_induced_edge_sets(cycle(6)) == [0b111111]
    assert two_connected_induced_edge_sets(path(5)) == []
    # bowtie edges: (0,1),(0,2),(0,3),(0,4),(1,2),(3,4)
    assert two_connected_induced_edge_sets(bowtie) == [
        indices_to_mask([0, 1, 4]),
        indices_to_mask([2, 3, 5]),
    ]


def test_family_recognition():
    assert is_forest(path(5))
    assert not is_forest(cycle(4))
    assert is_cycle_graph(complete_multipartite(2, 2))
    assert not is_cycle_graph(path(4))


def test_multipartite_coloring():
    assert multipartite_coloring(cycle(4)).counts == (2, 2)
    assert multipartite_coloring(path(3)).counts == (2, 1)
    assert multipartite_coloring(complete(4)).counts == (1, 1, 1, 1)
    assert multipartite_coloring(cycle(5)) is None
    assert multipartite_coloring(complete_multipartite(3, 2, 2)).counts == (3, 2, 2)


def test_colored_vertex_set_validation():
    with pytest.raises(ParameterError, match="nonincreasing"):
        ColoredVertexSet(color=(0, 1, 1), counts=(1, 2))
    coloring = ColoredVertexSet.from_labels(["b", "a", "a"])
    assert coloring.counts == (2, 1)
    assert coloring.color == (1, 0, 0)


def test_verified_coloring_uses_supplied_labels():
    relabeled = Graph(5, complete_multipartite(3, 2).edges, colors=(7, 7, 7, 4, 4))
    assert verified_coloring(relabeled) == multipartite_coloring(relabeled)
    assert verified_coloring(cycle(4)).counts == (2, 2)
    assert verified_coloring(cycle(5)) is None


def test_verified_coloring_rejects_contradicting_labels():
    swapped = Graph(4, cycle(4).edges, colors=(0, 0, 1, 1))
    with pytest.raises(HypothesisError, match="do not match"):
        verified_coloring(swapped)
    with pytest.raises(HypothesisError, match="not complete multipartite"):
        verified_coloring(Graph(5, cycle(5).edges, colors=(0, 1, 0, 1, 2)))

