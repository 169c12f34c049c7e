"""
Cellule dimensions.

The cellule of a partition pi of V(G) in dimension d is smooth of dimension
d * |pi| + (d - 1) * delta(pi, G), where delta counts the edges with both
endpoints in one block.
"""

import logging
from typing import Tuple

from src.cellules.partitions import (
    MAX_PARTITION_VERTICES,
    SetPartition,
    enumerate_partitions,
)
from src.config import check_vertex_limit
from src.errors import ParameterError
from src.graph import Graph

log = logging.getLogger(__name__)


def _check_partition(graph: Graph, partition: SetPartition) -> None:
    if partition.size != graph.vertex_count:
        raise ParameterError(
            f"partition covers {partition.size} vertices, graph has {graph.vertex_count}"
        )


def delta(graph: Graph, partition: SetPartition) -> int:
    """Number of edges whose endpoints share a block."""
    _check_partition(graph, partition)
    rgs = partition.rgs
    return sum(1 for u, v in graph.edges if rgs[u] == rgs[v])


def cellule_dimension(graph: Graph, partition: SetPartition, d: int) -> int:
    """
    Dimension of the cellule indexed by ``partition``.

    Args:
        graph (Graph): Host graph.
        partition (SetPartition): Partition of the vertices of ``graph``.
        d (int): Ambient dimension, at least 1.

    Returns:
        int: ``d * |partition| + (d - 1) * delta(graph, partition)``.
    """
    if d < 1:
        raise ParameterError(f"dimension d must be at least 1, got {d}")
    return d * partition.block_count + (d - 1) * delta(graph, partition)


def dimension_profile(graph: Graph, d: int) -> Tuple[int, int]:
    """
    Largest cellule dimension and the number of partitions attaining it.

    Returns:
        tuple[int, int]: ``(max_dimension, maximizer_count)``.
    """
    check_vertex_limit(graph.vertex_count, MAX_PARTITION_VERTICES, "dimension_profile")
    best, count = -1, 0
    for partition in enumerate_partitions(graph.vertex_count):
        value = cellule_dimension(graph, partition, d)
        if value > best:
            best, count = value, 1
        elif value == best:
            count += 1
    return best, count


def is_d_heavy(graph: Graph, d: int) -> bool:
    """
    Whether the indiscrete cellule has maximum dimension (ties allowed).

    Args:
        graph (Graph): Graph with at most 13 vertices.
        d (int): Ambient dimension, at least 2.

    Raises:
        ParameterError: If d < 2.
        SizeLimitError: If the graph has more than 13 vertices.
    """
    if d < 2:
        raise ParameterError(f"d-heaviness is defined for d >= 2, got {d}")
    n = graph.vertex_count
    check_vertex_limit(n, MAX_PARTITION_VERTICES, "is_d_heavy")
    if n == 0:
        return True
    indiscrete = d + (d - 1) * graph.edge_count
    # the discrete cellule alone rules out most graphs
    if indiscrete < d * n:
        return False
    for partition in enumerate_partitions(n):
        if cellule_dimension(graph, partition, d) > indiscrete:
            return False
    return True
