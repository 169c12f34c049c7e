"""
Induced cycles of multigraphs and partial ear decompositions.

After contracting edges a simple graph turns into a multigraph, so "induced
cycle" is taken in the multigraph sense:

- a loop;
- a pair of parallel edges;
- a chordless simple cycle of length at least 3 in which no edge has a
  parallel copy.

A partial ear decomposition of G is a sequence of disjoint edge sets
(C_1, ..., C_k) where each C_i is an induced cycle of G / C_1 / ... / C_(i-1).
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from src.graph import EdgeSubset, Graph, contract_with_map, iter_bits, mask_to_indices


@dataclass(frozen=True)
class EarSequence:
    """
    A sequence of ears, each an edge bitmask of the host graph.

    Attributes:
        ears (tuple[int]): Pairwise disjoint edge subsets, in order.
    """

    ears: Tuple[EdgeSubset, ...]

    @property
    def count(self) -> int:
        return len(self.ears)

    @property
    def total_edges(self) -> int:
        return sum(ear.bit_count() for ear in self.ears)

    @property
    def union(self) -> EdgeSubset:
        union = 0
        for ear in self.ears:
            union |= ear
        return union

    def to_json(self) -> List[List[int]]:
        return [mask_to_indices(ear) for ear in self.ears]


def _pair_indices(graph: Graph) -> Dict[Tuple[int, int], List[int]]:
    pairs: Dict[Tuple[int, int], List[int]] = {}
    for index, pair in enumerate(graph.edges):
        pairs.setdefault(pair, []).append(index)
    return pairs


def induced_cycles(graph: Graph) -> List[Tuple[int, ...]]:
    """
    Every induced cycle of a multigraph as a tuple of its edge indices.

    Returns:
        list[tuple[int]]: Loops first, then parallel pairs, then chordless
        cycles, shorter cycles before longer ones.
    """
    pairs = _pair_indices(graph)
    found = []
    for (u, v), indices in sorted(pairs.items()):
        if u == v:
            found.extend((index,) for index in indices)
    for (u, v), indices in sorted(pairs.items()):
        if u != v and len(indices) >= 2:
            found.extend(combinations(indices, 2))

    underlying = nx.Graph()
    underlying.add_nodes_from(range(graph.vertex_count))
    underlying.add_edges_from(pair for pair in pairs if pair[0] != pair[1])
    longer = []
    for cycle in nx.chordless_cycles(underlying):
        if len(cycle) < 3:
            continue
        steps = [
            (min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])
        ]
        if all(len(pairs[step]) == 1 for step in steps):
            longer.append(tuple(sorted(pairs[step][0] for step in steps)))
    longer.sort(key=lambda edges: (len(edges), edges))
    return found + longer


def is_induced_cycle(graph: Graph, edge_indices: Sequence[int]) -> bool:
    """Check the multigraph induced-cycle definition directly."""
    edges = [graph.edges[i] for i in edge_indices]
    if len(set(edge_indices)) != len(edge_indices) or not edges:
        return False
    if len(edges) == 1:
        return edges[0][0] == edges[0][1]
    if any(u == v for u, v in edges):
        return False
    if len(edges) == 2:
        return edges[0] == edges[1]
    if len(set(edges)) != len(edges):
        return False
    vertices = {v for edge in edges for v in edge}
    if len(vertices) != len(edges):
        return False
    cycle = nx.Graph(edges)
    if any(degree != 2 for _, degree in cycle.degree()) or not nx.is_connected(cycle):
        return False
    # no chord and no parallel copy among the cycle's vertices
    spanned = sum(
        1 for u, v in graph.edges if u != v and u in vertices and v in vertices
    )
    return spanned == len(edges)


def is_partial_ear_decomposition(graph: Graph, ears: Sequence[EdgeSubset]) -> bool:
    """
    Validate a sequence of ears against the definition.

    Args:
        graph (Graph): Host graph.
        ears (Sequence[int]): Edge bitmasks of ``graph``.

    Returns:
        bool: True when the ears are nonempty, pairwise disjoint, and each is an
        induced cycle of the contraction by all earlier ears.
    """
    used = 0
    for ear in ears:
        graph.check_subset(ear)
        if ear == 0 or ear & used:
            return False
        quotient, edge_map = contract_with_map(graph, used)
        position = {original: new for new, original in enumerate(edge_map)}
        if not is_induced_cycle(quotient, [position[i] for i in iter_bits(ear)]):
            return False
        used |= ear
    return True
