import os
import sys

import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.cellules import (
    BallBoxConfig,
    SetPartition,
    ballbox_dimension,
    cellule_dimension,
    delta,
    dimension_profile,
    enumerate_partitions,
    is_d_heavy,
)
from src.errors import ParameterError, SizeLimitError
from src.families import complete, complete_multipartite, cycle, path


def test_delta_counts_edges_inside_blocks():
    c4 = cycle(4)
    assert delta(c4, SetPartition.discrete(4)) == 0
    assert delta(c4, SetPartition.indiscrete(4)) == 4
    assert delta(c4, SetPartition((0, 0, 1, 1))) == 2
    assert delta(c4, SetPartition((0, 1, 0, 1))) == 0


def test_cellule_dimension():
    triangle = cycle(3)
    assert cellule_dimension(triangle, SetPartition.indiscrete(3), 3) == 9
    assert cellule_dimension(triangle, SetPartition.discrete(3), 3) == 9
    assert cellule_dimension(triangle, SetPartition((0, 0, 1)), 3) == 8
    # at d = 1 the dimension is just the number of blocks
    assert cellule_dimension(complete(4), SetPartition.indiscrete(4), 1) == 1


def test_partition_size_must_match_graph():
    with pytest.raises(ParameterError, match="partition covers 3 vertices"):
        delta(cycle(4), SetPartition.discrete(3))
    with pytest.raises(ParameterError, match="at least 1"):
        cellule_dimension(cycle(3), SetPartition.discrete(3), 0)


def test_dimension_profile():
    assert dimension_profile(cycle(3), 3) == (9, 2)
    assert dimension_profile(cycle(4), 2) == (8, 1)


def test_d_heavy():
    assert is_d_heavy(cycle(3), 3)
    assert is_d_heavy(complete_multipartite(3, 2), 3)
    assert not is_d_heavy(cycle(4), 3)
    assert is_d_heavy(cycle(4), 4)
    for d in range(2, 6):
        assert not is_d_heavy(path(2), d)
    assert is_d_heavy(path(1), 2)


def test_d_heavy_bounds():
    with pytest.raises(ParameterError, match="d >= 2"):
        is_d_heavy(cycle(3), 1)
    with pytest.raises(SizeLimitError, match="at most 13 vertices"):
        is_d_heavy(cycle(14), 3)


@pytest.mark.parametrize("counts", [(3, 2, 2), (2, 2, 1, 1), (4, 3)])
def test_ballbox_dimension_agrees_with_cellule_dimension(counts):
    graph = complete_multipartite(*counts)
    coloring = graph.coloring()
    for partition in enumerate_partitions(graph.vertex_count):
        config = BallBoxConfig.from_partition(coloring, partition)
        for d in (2, 3):
            expected = cellule_dimension(graph, partition, d)
            assert ballbox_dimension(config, d) == expected
