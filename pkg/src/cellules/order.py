"""
The computable part of the cellule order.

pi precedes sigma when the pi-cellule lies in the closure of the sigma-cellule,
which can only happen when sigma refines pi. For d = 1 every refinement is a
relation. For d >= 2 this module certifies relations and non-relations from
three kinds of single splits and from d-heavy blocks:

- a block whose induced subgraph is acyclic may be split any way at all;
- a doubleton block may be split into two singletons;
- a vertex with at most one edge into the rest of its block may be peeled off.

KNOWN_LEQ is the transitive closure of those splits. KNOWN_NOT_LEQ holds when
some block of pi that sigma splits induces a d-heavy graph. Everything else is
UNKNOWN, so the maximal partitions found here are only guaranteed for the
families whose components are classified.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from src.cellules.ballbox import check_merge_hypotheses
from src.cellules.dimension import is_d_heavy
from src.cellules.partitions import SetPartition, enumerate_partitions, sub_partitions
from src.config import check_vertex_limit
from src.errors import HypothesisError, InconsistencyError, ParameterError
from src.graph import (
    Graph,
    induced_edge_mask,
    induced_subgraph,
    is_cycle_graph,
    is_forest,
    nullity,
    require_simple,
    verified_coloring,
)
from src.poincare import subset_irreducible

log = logging.getLogger(__name__)

MAX_ORDER_VERTICES = 9

ACYCLIC_SPLIT = "acyclic-split"
DOUBLETON_SPLIT = "doubleton-split"
PEEL = "single-edge-peel"


class RelationStatus(str, Enum):
    KNOWN_LEQ = "KNOWN_LEQ"
    KNOWN_NOT_LEQ = "KNOWN_NOT_LEQ"
    UNKNOWN = "UNKNOWN"


class Exactness(str, Enum):
    EXACT = "EXACT"
    HEURISTIC_UPPER_SET = "HEURISTIC_UPPER_SET"


@dataclass(frozen=True)
class CelluleRelation:
    """
    Status of the pair (pi, sigma) where sigma strictly refines pi.

    Attributes:
        pi (SetPartition): The coarser partition.
        sigma (SetPartition): The finer partition.
        status (RelationStatus): What is known about pi preceding sigma.
        certificate (str): The chain of splits or the d-heavy block behind the
            status; empty when UNKNOWN.
    """

    pi: SetPartition
    sigma: SetPartition
    status: RelationStatus
    certificate: str = ""

    def to_json(self) -> dict:
        return {
            "pi": self.pi.to_json(),
            "sigma": self.sigma.to_json(),
            "status": self.status.value,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class MaximalCellules:
    partitions: List[SetPartition]
    exactness: Exactness
    reason: str = field(default="")

    def to_json(self) -> dict:
        return {
            "partitions": [p.to_json() for p in self.partitions],
            "exactness": self.exactness.value,
            "reason": self.reason,
        }


def _check_inputs(graph: Graph, d: int, operation: str) -> None:
    require_simple(graph, operation)
    if d < 1:
        raise ParameterError(f"dimension d must be at least 1, got {d}")
    check_vertex_limit(graph.vertex_count, MAX_ORDER_VERTICES, operation)


def _replace_block(
    partition: SetPartition, index: int, parts: List[Tuple[int, ...]]
) -> SetPartition:
    blocks = [b for i, b in enumerate(partition.blocks) if i != index] + parts
    return SetPartition.from_blocks(blocks, partition.size)


def _block_is_acyclic(graph: Graph, block: Tuple[int, ...]) -> bool:
    mask = 0
    for vertex in block:
        mask |= 1 << vertex
    return nullity(graph, induced_edge_mask(graph, mask)) == 0


def _single_moves(
    graph: Graph, partition: SetPartition
) -> Iterator[Tuple[SetPartition, str]]:
    for index, block in enumerate(partition.blocks):
        if len(block) < 2:
            continue
        if len(block) == 2:
            split = _replace_block(partition, index, [(block[0],), (block[1],)])
            yield split, DOUBLETON_SPLIT
        elif _block_is_acyclic(graph, block):
            # two-way splits suffice: every part of an acyclic block is acyclic
            head, rest = block[0], block[1:]
            for size in range(0, len(rest)):
                for chosen in combinations(rest, size):
                    left = (head,) + chosen
                    right = tuple(v for v in rest if v not in chosen)
                    yield _replace_block(partition, index, [left, right]), ACYCLIC_SPLIT
        else:
            members = set(block)
            for vertex in block:
                inside = sum(
                    1
                    for u, v in graph.edges
                    if (u == vertex and v in members) or (v == vertex and u in members)
                )
                if inside <= 1:
                    remainder = tuple(v for v in block if v != vertex)
                    yield _replace_block(partition, index, [(vertex,), remainder]), PEEL


class _Closure:
    """Memoised reachability under single splits, with next-hop certificates."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.reach: Dict[
            SetPartition, Dict[SetPartition, Tuple[str, SetPartition]]
        ] = {}

    def descendants(self, partition: SetPartition):
        if partition in self.reach:
            return self.reach[partition]
        found: Dict[SetPartition, Tuple[str, SetPartition]] = {}
        for child, reason in _single_moves(self.graph, partition):
            found.setdefault(child, (reason, child))
            for target in self.descendants(child):
                found.setdefault(target, (reason, child))
        self.reach[partition] = found
        return found

    def chain(self, source: SetPartition, target: SetPartition) -> str:
        steps = []
        while source != target:
            reason, source = self.reach[source][target]
            steps.append(reason)
        return " > ".join(steps)


def refinements(partition: SetPartition) -> List[SetPartition]:
    """Every partition strictly refining ``partition``, in lexicographic order."""
    options = [list(sub_partitions(block)) for block in partition.blocks]
    found = []
    for choice in product(*options):
        blocks = [part for split in choice for part in split]
        candidate = SetPartition.from_blocks(blocks, partition.size)
        if candidate != partition:
            found.append(candidate)
    return sorted(found)


def cellule_order_relations(
    graph: Graph, d: int, pi: Optional[SetPartition] = None
) -> List[CelluleRelation]:
    """
    Status of every strictly refining pair (pi, sigma).

    Pairs where sigma does not refine pi are never related and are not listed.

    Args:
        graph (Graph): A simple graph with at most 9 vertices.
        d (int): Ambient dimension.
        pi (SetPartition, optional): Restrict to pairs with this coarse partition.

    Returns:
        list[CelluleRelation]: Sorted by (pi, sigma).

    Raises:
        SizeLimitError: Above 9 vertices.
        InconsistencyError: If a pair is certified both ways.
    """
    _check_inputs(graph, d, "cellule_order_relations")
    if pi is not None and pi.size != graph.vertex_count:
        raise ParameterError(
            f"partition covers {pi.size} vertices, graph has {graph.vertex_count}"
        )
    sources = [pi] if pi is not None else list(enumerate_partitions(graph.vertex_count))
    relations = []
    if d == 1:
        for source in sources:
            relations.extend(
                CelluleRelation(
                    source, target, RelationStatus.KNOWN_LEQ, "refinement order at d=1"
                )
                for target in refinements(source)
            )
        return relations

    closure = _Closure(graph)
    heavy: Dict[Tuple[int, ...], bool] = {}

    def block_is_heavy(block: Tuple[int, ...]) -> bool:
        if block not in heavy:
            subgraph, _, _ = induced_subgraph(graph, block)
            heavy[block] = is_d_heavy(subgraph, d)
        return heavy[block]

    for source in sources:
        reachable = closure.descendants(source)
        for target in refinements(source):
            target_blocks = set(target.blocks)
            split_heavy = [
                block
                for block in source.blocks
                if block not in target_blocks and block_is_heavy(block)
            ]
            leq = target in reachable
            if leq and split_heavy:
                raise InconsistencyError(
                    f"{source} -> {target} is both reachable and blocked by a "
                    f"{d}-heavy block",
                    details={"pi": source.to_json(), "sigma": target.to_json()},
                )
            if leq:
                status = RelationStatus.KNOWN_LEQ
                certificate = closure.chain(source, target)
            elif split_heavy:
                status = RelationStatus.KNOWN_NOT_LEQ
                certificate = f"{d}-heavy block {list(split_heavy[0])}"
            else:
                status, certificate = RelationStatus.UNKNOWN, ""
            relations.append(CelluleRelation(source, target, status, certificate))
    log.info("✅ Classified %d refining pairs", len(relations))
    return relations


def _classified_family(graph: Graph, d: int) -> Optional[str]:
    if is_forest(graph):
        return "forest"
    if is_cycle_graph(graph):
        return "cycle"
    coloring = verified_coloring(graph)
    if coloring is not None and d >= 3:
        try:
            check_merge_hypotheses(coloring.counts, d)
        except HypothesisError:
            return None
        if coloring.vertex_count == coloring.color_count:
            return "complete"
        return "complete multipartite"
    return None


def maximal_cellules_known(graph: Graph, d: int) -> MaximalCellules:
    """
    Partitions that no certified split dominates.

    When the picture space is irreducible (d = 1, or d below the minimum
    constraint dimension) the discrete partition alone is returned. Otherwise
    the answer is exact for forests, cycles, and complete or complete
    multipartite graphs covered by the classification at d >= 3, and an upper
    set for anything else.

    Returns:
        MaximalCellules: Partitions in lexicographic order and the exactness flag.
    """
    _check_inputs(graph, d, "maximal_cellules_known")
    n = graph.vertex_count
    if n == 0:
        raise ParameterError("maximal_cellules_known needs at least one vertex")
    if d == 1 or subset_irreducible(graph, d):
        return MaximalCellules(
            [SetPartition.discrete(n)], Exactness.EXACT, "irreducible picture space"
        )
    maximal = [
        partition
        for partition in enumerate_partitions(n)
        if next(_single_moves(graph, partition), None) is None
    ]
    family = _classified_family(graph, d)
    if family is None:
        log.warning("⚠️ Maximal cellules for this graph are an upper set only")
        return MaximalCellules(maximal, Exactness.HEURISTIC_UPPER_SET, "")
    return MaximalCellules(maximal, Exactness.EXACT, family)
