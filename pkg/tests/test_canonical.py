import os
import sys
from collections import Counter

import networkx as nx
import numpy as np
import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.canonical import canonical_key
from src.families import all_connected_graphs, complete, cycle, onion, path
from src.graph import Graph


def _relabel(graph: Graph, permutation) -> Graph:
    return Graph(
        graph.vertex_count,
        tuple((int(permutation[u]), int(permutation[v])) for u, v in graph.edges),
    )


@pytest.fixture(scope="module")
def connected_up_to_six():
    return all_connected_graphs(6)


def test_key_is_invariant_under_relabeling():
    rng = np.random.default_rng(3)
    for graph in (cycle(6), onion(1, 3, 3), complete(5), path(5)):
        for _ in range(5):
            relabeled = _relabel(graph, rng.permutation(graph.vertex_count))
            assert canonical_key(relabeled) == canonical_key(graph)


def test_non_isomorphic_graphs_get_different_keys():
    c4 = cycle(4)
    paw = Graph(4, ((0, 1), (0, 2), (1, 2), (2, 3)))
    star_plus = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2)))
    assert canonical_key(c4) != canonical_key(paw)
    # the paw and this graph are the same up to relabeling
    assert canonical_key(paw) == canonical_key(star_plus)


def test_multiplicities_and_loops_are_part_of_the_key():
    single = Graph(2, ((0, 1),))
    double = Graph(2, ((0, 1), (0, 1)))
    assert canonical_key(single) != canonical_key(double)
    assert canonical_key(Graph(2, ((0, 0), (0, 1)))) == canonical_key(
        Graph(2, ((1, 1), (0, 1)))
    )
    assert canonical_key(Graph(2, ((0, 0), (0, 1)))) != canonical_key(
        Graph(2, ((0, 0), (0, 0)))
    )


def test_connected_graph_counts(connected_up_to_six):
    counts = Counter(graph.vertex_count for graph in connected_up_to_six)
    assert [counts[n] for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    print("✅ Connected graph counts match the known sequence up to 6 vertices")


def test_generated_graphs_match_the_networkx_atlas(connected_up_to_six):
    atlas_keys = set()
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if 1 <= n <= 6 and nx.is_connected(atlas_graph):
            atlas_keys.add(canonical_key(Graph(n, tuple(atlas_graph.edges()))))
    generated_keys = {canonical_key(graph) for graph in connected_up_to_six}
    assert generated_keys == atlas_keys


def test_edge_bound_filters_generation():
    small = all_connected_graphs(4, max_edges=3)
    assert len(small) == 6
    assert all(graph.edge_count <= 3 for graph in small)
