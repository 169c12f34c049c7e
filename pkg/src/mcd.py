"""
Minimum constraint dimension.

mcd(G) is the smallest d for which the d-dimensional picture space of G is
reducible, or INFINITY for a forest. It equals the minimum over nonempty edge
sets A with nul(A) >= 1 of ceil(|A| / nul(A)), and three independent
algorithms compute it here:

1. ``mcd_bruteforce`` scans every edge subset.
2. ``mcd_flats`` scans only the edge sets of 2-connected induced subgraphs,
   which is where the minimum is attained.
3. ``mcd_ears`` searches partial ear decompositions (C_1, ..., C_k) and
   minimises ceil(sum |C_i| / k), with branch-and-bound pruning.

``mcd(graph, "all")`` runs every algorithm the graph is small enough for and
fails loudly if they disagree.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.config import check_edge_limit, check_vertex_limit, edge_limit
from src.ears import EarSequence, induced_cycles
from src.errors import (
    HypothesisError,
    InconsistencyError,
    ParameterError,
    SizeLimitError,
)
from src.families import validate_onion
from src.graph import (
    INFINITY,
    EdgeSubset,
    Graph,
    _rank,
    contract_with_map,
    girth,
    mask_to_indices,
    nullity,
    require_connected_simple,
    two_connected_induced_sets,
)
from src.poincare import poincare_polynomial, subset_irreducible
from src.tutte import tutte_deletion_contraction

log = logging.getLogger(__name__)

BRUTEFORCE_MAX_EDGES = 22
FLATS_MAX_VERTICES = 22
EARS_MAX_EDGES = 16
IRREDUCIBILITY_MAX_D = 10
IRREDUCIBILITY_MAX_VERTICES = 8

METHODS = ("brute", "flats", "ears")


def _ceil_ratio(size: int, cycles: int) -> int:
    return -(-size // cycles)


@dataclass(frozen=True)
class McdResult:
    """
    Minimum constraint dimension with the witness that achieves it.

    Attributes:
        value (int | INFINITY): The mcd.
        method (str): ``brute``, ``flats``, ``ears`` or ``all``.
        edges (int | None): Witness edge set A with ceil(|A| / nul(A)) == value.
        vertices (tuple[int] | None): Vertex set inducing ``edges`` (flats only).
        ears (EarSequence | None): Witness ear sequence (ears only).
        cross_checked (tuple[str]): Methods that agreed, for ``all``.
    """

    value: object
    method: str
    edges: Optional[EdgeSubset] = None
    vertices: Optional[Tuple[int, ...]] = None
    ears: Optional[EarSequence] = None
    cross_checked: Tuple[str, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.value is not INFINITY

    def to_json(self) -> dict:
        witness = {}
        if self.edges is not None:
            witness["edges"] = mask_to_indices(self.edges)
        if self.vertices is not None:
            witness["vertices"] = list(self.vertices)
        if self.ears is not None:
            witness["ears"] = self.ears.to_json()
        payload = {
            "mcd": "infinity" if self.value is INFINITY else self.value,
            "method": self.method,
            "witness": witness,
        }
        if self.cross_checked:
            payload["cross_checked"] = list(self.cross_checked)
        return payload


def mcd_bruteforce(graph: Graph) -> McdResult:
    """
    mcd by scanning every nonempty edge subset.

    Args:
        graph (Graph): Connected simple graph with at most 22 edges.

    Returns:
        McdResult: Witness is the smallest bitmask among the minimisers.

    Raises:
        HypothesisError: If the graph is not connected and simple.
        SizeLimitError: Above the edge guard.
    """
    require_connected_simple(graph, "mcd_bruteforce")
    check_edge_limit(graph.edge_count, BRUTEFORCE_MAX_EDGES, "mcd_bruteforce")
    best, witness = INFINITY, None
    for subset in range(1, 1 << graph.edge_count):
        size = subset.bit_count()
        cycles = size - _rank(graph, subset)
        if cycles and _ceil_ratio(size, cycles) < best:
            best, witness = _ceil_ratio(size, cycles), subset
    return McdResult(best, "brute", edges=witness)


def mcd_flats(graph: Graph) -> McdResult:
    """
    mcd over the edge sets of 2-connected induced subgraphs only.

    Args:
        graph (Graph): Connected simple graph with at most 22 vertices.

    Returns:
        McdResult: Witness edge set and the vertex set inducing it; ties go to
        the smallest edge bitmask.
    """
    require_connected_simple(graph, "mcd_flats")
    check_vertex_limit(graph.vertex_count, FLATS_MAX_VERTICES, "mcd_flats")
    best = None
    for vertex_mask, edge_mask in two_connected_induced_sets(graph):
        candidate = (
            _ceil_ratio(edge_mask.bit_count(), nullity(graph, edge_mask)),
            edge_mask,
            vertex_mask,
        )
        if best is None or candidate[:2] < best[:2]:
            best = candidate
    if best is None:
        return McdResult(INFINITY, "flats")
    value, edge_mask, vertex_mask = best
    return McdResult(
        value, "flats", edges=edge_mask, vertices=tuple(mask_to_indices(vertex_mask))
    )


class _EarSearch:
    """Depth-first search over partial ear decompositions."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.best = INFINITY
        self.best_ears: Optional[Tuple[EdgeSubset, ...]] = None
        self.visited = set()
        self.nodes = 0

    def _lower_bound(self, used: int, cycles: int, quotient: Graph):
        # every further ear adds at least one edge and the next one at least girth
        remaining = nullity(quotient)
        shortest = girth(quotient)
        if remaining == 0 or shortest is INFINITY:
            return INFINITY
        return min(
            _ceil_ratio(used + shortest + extra - 1, cycles + extra)
            for extra in (1, remaining)
        )

    def run(self, union: EdgeSubset, ears: Tuple[EdgeSubset, ...]) -> None:
        if union in self.visited:
            return
        self.visited.add(union)
        self.nodes += 1
        used = union.bit_count()
        if ears:
            value = _ceil_ratio(used, len(ears))
            if value < self.best:
                self.best, self.best_ears = value, ears
        quotient, edge_map = contract_with_map(self.graph, union)
        if not self._lower_bound(used, len(ears), quotient) < self.best:
            return
        for cycle in induced_cycles(quotient):
            ear = 0
            for index in cycle:
                ear |= 1 << edge_map[index]
            self.run(union | ear, ears + (ear,))


def ear_sequence_for(
    graph: Graph, target: EdgeSubset
) -> Optional[Tuple[EdgeSubset, ...]]:
    """
    A partial ear decomposition whose union is exactly ``target``.

    Returns:
        tuple[int] | None: Ear masks in order, or None if ``target`` has no
        such decomposition.
    """
    dead = set()

    def extend(union: EdgeSubset, ears: Tuple[EdgeSubset, ...]):
        if union == target:
            return ears
        if union in dead:
            return None
        quotient, edge_map = contract_with_map(graph, union)
        for cycle in induced_cycles(quotient):
            ear = 0
            for index in cycle:
                ear |= 1 << edge_map[index]
            if ear & ~target:
                continue
            found = extend(union | ear, ears + (ear,))
            if found is not None:
                return found
        dead.add(union)
        return None

    return extend(0, ())


def _smallest_decomposable_witness(graph: Graph, value: int):
    for subset in range(1, 1 << graph.edge_count):
        size = subset.bit_count()
        cycles = size - _rank(graph, subset)
        if cycles and _ceil_ratio(size, cycles) == value:
            ears = ear_sequence_for(graph, subset)
            if ears is not None:
                return ears
    return None


def mcd_ears(graph: Graph) -> McdResult:
    """
    mcd as the minimum of ceil(total ear length / number of ears).

    Args:
        graph (Graph): Connected simple graph with at most 16 edges.

    Returns:
        McdResult: Witness ear sequence and its union as the edge set. The
        union is the smallest bitmask among the minimisers that have a
        partial ear decomposition.
    """
    require_connected_simple(graph, "mcd_ears")
    check_edge_limit(graph.edge_count, EARS_MAX_EDGES, "mcd_ears")
    search = _EarSearch(graph)
    search.run(0, ())
    log.debug("Ear search visited %d states", search.nodes)
    if search.best_ears is None:
        return McdResult(INFINITY, "ears")
    sequence = EarSequence(
        _smallest_decomposable_witness(graph, search.best) or search.best_ears
    )
    return McdResult(search.best, "ears", edges=sequence.union, ears=sequence)


_ALGORITHMS = {"brute": mcd_bruteforce, "flats": mcd_flats, "ears": mcd_ears}


def applicable_methods(graph: Graph) -> List[str]:
    """Methods whose size guards admit ``graph``."""
    methods = []
    if graph.edge_count <= edge_limit(BRUTEFORCE_MAX_EDGES):
        methods.append("brute")
    if graph.vertex_count <= FLATS_MAX_VERTICES:
        methods.append("flats")
    if graph.edge_count <= edge_limit(EARS_MAX_EDGES):
        methods.append("ears")
    return methods


def mcd(graph: Graph, method: str = "all") -> McdResult:
    """
    Minimum constraint dimension by one method, or cross-checked by all.

    Args:
        graph (Graph): Connected simple graph.
        method (str): ``brute``, ``flats``, ``ears`` or ``all``.

    Returns:
        McdResult: For ``all``, one witness taken from a single method (the
        ear search when it ran, so ``edges`` is the union of ``ears``) with
        ``cross_checked`` listing every method that ran.

    Raises:
        InconsistencyError: If the methods disagree; ``details`` holds each result.
        SizeLimitError: If no method admits the graph.
    """
    if method in _ALGORITHMS:
        return _ALGORITHMS[method](graph)
    if method != "all":
        raise ParameterError(
            f"unknown mcd method {method!r}; use brute, flats, ears or all"
        )
    require_connected_simple(graph, "mcd")
    methods = applicable_methods(graph)
    if not methods:
        raise SizeLimitError(
            f"no mcd method supports {graph.vertex_count} vertices and "
            f"{graph.edge_count} edges"
        )
    results = [_ALGORITHMS[name](graph) for name in methods]
    if len({result.value for result in results}) > 1:
        raise InconsistencyError(
            "mcd methods disagree: "
            + ", ".join(f"{r.method}={r.value!r}" for r in results),
            details=[result.to_json() for result in results],
        )
    witness = next((r for r in results if r.ears is not None), results[0])
    vertices = next(
        (
            r.vertices
            for r in results
            if r.vertices is not None and r.edges == witness.edges
        ),
        None,
    )
    log.info("✅ mcd=%r confirmed by %s", witness.value, ", ".join(methods))
    return McdResult(
        witness.value,
        "all",
        edges=witness.edges,
        vertices=vertices,
        ears=witness.ears,
        cross_checked=tuple(methods),
    )


def mcd_onion_closed_form(lengths) -> int:
    """
    mcd of the onion graph from its path lengths.

    The union of the r shortest paths has r-1 independent cycles, so the
    value is the minimum over 2 <= r <= k of ceil((a_1 + ... + a_r) / (r - 1)).
    """
    ordered = validate_onion(lengths)
    best = None
    prefix = ordered[0]
    for r in range(2, len(ordered) + 1):
        prefix += ordered[r - 1]
        value = _ceil_ratio(prefix, r - 1)
        best = value if best is None else min(best, value)
    return best


@dataclass(frozen=True)
class GirthBound:
    mcd: int
    girth: int
    holds: bool

    def to_json(self) -> dict:
        return {"mcd": self.mcd, "girth": self.girth, "holds": self.holds}


def girth_bound_check(graph: Graph) -> GirthBound:
    """
    Compute mcd and girth and confirm mcd <= girth.

    Raises:
        HypothesisError: For forests, where both are infinite.
        InconsistencyError: If the bound fails.
    """
    require_connected_simple(graph, "girth_bound_check")
    shortest = girth(graph)
    if shortest is INFINITY:
        raise HypothesisError("girth_bound_check needs a graph with a cycle")
    small = graph.edge_count <= edge_limit(BRUTEFORCE_MAX_EDGES)
    method = "brute" if small else "flats"
    value = mcd(graph, method).value
    if not value <= shortest:
        raise InconsistencyError(
            f"mcd {value} exceeds girth {shortest}",
            details={"mcd": value, "girth": shortest, "edges": list(graph.edges)},
        )
    return GirthBound(value, shortest, True)


def irreducibility_range(graph: Graph, d_max: int) -> List[Tuple[int, bool]]:
    """
    Irreducibility for d = 1..d_max by two criteria that must agree.

    The subset criterion (d * nul(A) < |A| for every nonempty A) and the
    Poincaré criterion (monic of degree d|V|) are both evaluated.

    Args:
        graph (Graph): Connected simple graph with at most 8 vertices.
        d_max (int): Largest dimension, 1..10.

    Returns:
        list[tuple[int, bool]]: ``(d, irreducible)`` pairs.

    Raises:
        InconsistencyError: If the criteria disagree for some d.
    """
    require_connected_simple(graph, "irreducibility_range")
    if d_max < 1:
        raise ParameterError(f"d_max must be at least 1, got {d_max}")
    if d_max > IRREDUCIBILITY_MAX_D:
        raise SizeLimitError(
            f"irreducibility_range supports d_max <= {IRREDUCIBILITY_MAX_D}, got {d_max}"
        )
    check_vertex_limit(
        graph.vertex_count, IRREDUCIBILITY_MAX_VERTICES, "irreducibility_range"
    )
    tutte = tutte_deletion_contraction(graph)
    verdicts = []
    for d in range(1, d_max + 1):
        by_subsets = subset_irreducible(graph, d)
        polynomial = poincare_polynomial(graph, d, tutte=tutte)
        by_polynomial = (
            polynomial.degree == d * graph.vertex_count and polynomial.is_monic()
        )
        if by_subsets != by_polynomial:
            raise InconsistencyError(
                f"irreducibility criteria disagree at d={d}",
                details={
                    "d": d,
                    "subset_criterion": by_subsets,
                    "poincare_criterion": by_polynomial,
                    "poincare": polynomial.to_json(),
                },
            )
        verdicts.append((d, by_subsets))
    return verdicts
