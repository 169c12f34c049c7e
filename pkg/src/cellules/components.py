"""
Irreducible components of picture spaces for the classified families.

Each function returns the partitions whose cellule closures are the
components, in restricted-growth lexicographic order.
"""

from typing import List

from src.cellules.ballbox import check_merge_hypotheses
from src.cellules.partitions import SetPartition, enumerate_partitions
from src.errors import HypothesisError, ParameterError
from src.graph import ColoredVertexSet


def _require_d(d: int, minimum: int) -> None:
    if d < minimum:
        raise HypothesisError(f"the classification needs d >= {minimum}, got {d}")


def components_complete(n: int, d: int) -> List[SetPartition]:
    """
    Components of the picture space of K_n for d >= 3: one for every
    partition without a block of size exactly two.
    """
    _require_d(d, 3)
    if n < 2:
        raise ParameterError(f"components_complete needs n >= 2, got {n}")
    return [
        partition
        for partition in enumerate_partitions(n)
        if all(len(block) != 2 for block in partition.blocks)
    ]


def _block_allowed(colors: ColoredVertexSet, block) -> bool:
    if len(block) == 1:
        return True
    tally = {}
    for vertex in block:
        tally[colors.color[vertex]] = tally.get(colors.color[vertex], 0) + 1
    if len(tally) >= 3:
        return True
    return sum(1 for amount in tally.values() if amount >= 2) >= 2


def components_multipartite(colors: ColoredVertexSet, d: int) -> List[SetPartition]:
    """
    Components of the picture space of K_{q_1,...,q_n} for d >= 3.

    A partition indexes a component exactly when each of its blocks is a
    singleton, holds at least two vertices of each of two colours, or holds
    vertices of at least three colours.

    Args:
        colors (ColoredVertexSet): The colour classes.
        d (int): Ambient dimension, at least 3.

    Raises:
        HypothesisError: If d < 3, or the graph is acyclic or K_{2,2}.
    """
    _require_d(d, 3)
    check_merge_hypotheses(colors.counts, d)
    return [
        partition
        for partition in enumerate_partitions(colors.vertex_count)
        if all(_block_allowed(colors, block) for block in partition.blocks)
    ]


def components_cycle(n: int, d: int) -> List[SetPartition]:
    """
    Components of the picture space of C_n: the discrete cellule closure, and
    also the indiscrete one once d >= n.
    """
    if n < 3:
        raise ParameterError(f"components_cycle needs n >= 3, got {n}")
    if d < 1:
        raise ParameterError(f"dimension d must be at least 1, got {d}")
    found = [SetPartition.discrete(n)]
    if d >= n:
        found.insert(0, SetPartition.indiscrete(n))
    return found
