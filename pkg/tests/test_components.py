import os
import sys

import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.cellules import (
    SetPartition,
    components_complete,
    components_cycle,
    components_multipartite,
    enumerate_partitions,
)
from src.errors import HypothesisError, ParameterError
from src.graph import ColoredVertexSet


def _colors(*counts):
    labels = [c for c, q in enumerate(counts) for _ in range(q)]
    return ColoredVertexSet.from_labels(labels)


def test_complete_graph_component_counts():
    assert components_complete(2, 3) == [SetPartition((0, 1))]
    assert len(components_complete(4, 3)) == 6
    assert len(components_complete(5, 3)) == 17


def test_complete_components_have_no_doubletons():
    expected = [
        p
        for p in enumerate_partitions(5)
        if all(len(block) != 2 for block in p.blocks)
    ]
    assert components_complete(5, 4) == expected


def test_complete_needs_d_at_least_three():
    with pytest.raises(HypothesisError, match="d >= 3"):
        components_complete(4, 2)
    with pytest.raises(ParameterError, match="n >= 2"):
        components_complete(1, 3)


def test_triangle_as_multipartite_matches_cycle():
    triangle = components_multipartite(_colors(1, 1, 1), 3)
    assert triangle == [SetPartition((0, 0, 0)), SetPartition((0, 1, 2))]
    assert triangle == components_cycle(3, 3)
    assert triangle == components_complete(3, 3)


def test_multipartite_with_singleton_colours_is_complete():
    assert components_multipartite(_colors(1, 1, 1, 1), 3) == components_complete(4, 3)


def test_k221_component_count():
    # blocks: singletons, {a1,a2,b1,b2}, or c with at least one a and one b
    found = components_multipartite(_colors(2, 2, 1), 3)
    assert len(found) == 11
    assert SetPartition((0, 0, 0, 0, 1)) in found
    assert SetPartition((0, 1, 2, 3, 4)) in found
    assert SetPartition((0, 1, 0, 2, 0)) in found
    assert SetPartition((0, 0, 1, 2, 3)) not in found


def test_multipartite_hypotheses():
    with pytest.raises(HypothesisError, match=r"K_\{2,2\}"):
        components_multipartite(_colors(2, 2), 3)
    with pytest.raises(HypothesisError, match="acyclic"):
        components_multipartite(_colors(2, 1), 3)
    with pytest.raises(HypothesisError, match="d >= 3"):
        components_multipartite(_colors(3, 2), 2)


def test_cycle_components():
    assert components_cycle(4, 3) == [SetPartition.discrete(4)]
    expected = [SetPartition.indiscrete(4), SetPartition.discrete(4)]
    assert components_cycle(4, 4) == expected
    assert components_cycle(6, 1) == [SetPartition.discrete(6)]
    with pytest.raises(ParameterError, match="n >= 3"):
        components_cycle(2, 3)
