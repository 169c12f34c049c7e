"""
Graph core.

This module defines the finite multigraph used throughout graphvar together
with the graphic-matroid primitives every other module consumes: rank,
nullity, girth, connectivity, contraction and induced subgraphs.

Multigraphs (loops and parallel edges) only appear internally, as products of
contraction; the public computations on picture spaces expect simple graphs.
Edge subsets are plain integers used as bitmasks over edge indices, and every
enumeration walks masks in increasing numeric order so results are
deterministic.
"""

import logging
import numbers
from collections import deque
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from src.errors import HypothesisError, ParameterError

log = logging.getLogger(__name__)

# Bitmask over the edge indices of a host Graph.
EdgeSubset = int


@total_ordering
class _Infinity:
    """Sentinel larger than every integer, used for girth and mcd of forests."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("graphvar.INFINITY")

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_indices(mask: int) -> List[int]:
    return list(iter_bits(mask))


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << int(index)
    return mask


def _integer(value, what: str) -> int:
    # bool is an Integral subclass, floats would be truncated by int()
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ParameterError(f"{what} must be an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class ColoredVertexSet:
    """
    Vertex colouring of a complete multipartite graph.

    Attributes:
        color (tuple[int]): Colour index of each vertex.
        counts (tuple[int]): Number of vertices of each colour, nonincreasing.
    """

    color: Tuple[int, ...]
    counts: Tuple[int, ...]

    def __post_init__(self):
        color = tuple(int(c) for c in self.color)
        counts = tuple(int(q) for q in self.counts)
        if not counts or any(q <= 0 for q in counts):
            raise ParameterError(f"colour counts must be positive, got {counts}")
        if any(a < b for a, b in zip(counts, counts[1:])):
            raise ParameterError(f"colour counts must be nonincreasing, got {counts}")
        observed = [0] * len(counts)
        for c in color:
            if not 0 <= c < len(counts):
                raise ParameterError(f"colour index {c} outside 0..{len(counts) - 1}")
            observed[c] += 1
        if tuple(observed) != counts:
            raise ParameterError(
                f"colour assignment {color} does not match counts {counts}"
            )
        object.__setattr__(self, "color", color)
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "ColoredVertexSet":
        """
        Build a colouring from arbitrary per-vertex labels.

        Colours are renumbered so that counts are nonincreasing; ties keep the
        order in which labels first appear.
        """
        first_seen = {}
        sizes = {}
        for position, label in enumerate(labels):
            first_seen.setdefault(label, position)
            sizes[label] = sizes.get(label, 0) + 1
        order = sorted(sizes, key=lambda label: (-sizes[label], first_seen[label]))
        renumber = {label: index for index, label in enumerate(order)}
        return cls(
            color=tuple(renumber[label] for label in labels),
            counts=tuple(sizes[label] for label in order),
        )

    @property
    def vertex_count(self) -> int:
        return len(self.color)

    @property
    def color_count(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class Graph:
    """
    A finite multigraph on vertices ``0..vertex_count-1``.

    Edges are stored as sorted ``(min, max)`` endpoint pairs in canonical
    order, so two graphs with the same labeled edge multiset compare equal.

    Attributes:
        vertex_count (int): Number of vertices.
        edges (tuple[tuple[int, int]]): Canonically ordered endpoint pairs.
        colors (tuple[int] | None): Optional colour labels (multipartite input).
        simple (bool): True when there are no loops and no repeated pairs.
    """

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...] = ()
    colors: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    simple: bool = field(init=False, compare=False)

    def __post_init__(self):
        n = _integer(self.vertex_count, "vertex_count")
        if n < 0:
            raise ParameterError(f"vertex_count must be nonnegative, got {n}")
        normalized = []
        for pair in self.edges:
            if len(pair) != 2:
                raise ParameterError(f"edge {pair!r} must have exactly two endpoints")
            u = _integer(pair[0], f"endpoint of edge {pair!r}")
            v = _integer(pair[1], f"endpoint of edge {pair!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(
                    f"edge {pair!r} has an endpoint outside 0..{n - 1}"
                )
            normalized.append((min(u, v), max(u, v)))
        normalized.sort()
        simple = all(u != v for u, v in normalized) and len(set(normalized)) == len(
            normalized
        )
        colors = self.colors
        if colors is not None:
            colors = tuple(_integer(c, "colour label") for c in colors)
            if len(colors) != n:
                raise ParameterError(
                    f"colors has {len(colors)} entries for {n} vertices"
                )
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "simple", simple)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> EdgeSubset:
        return (1 << len(self.edges)) - 1

    def degree(self, vertex: int) -> int:
        # a loop adds two to the degree
        return sum((u == vertex) + (v == vertex) for u, v in self.edges)

    def check_subset(self, subset: EdgeSubset) -> None:
        if subset < 0 or subset >> len(self.edges):
            raise ParameterError(
                f"edge subset {subset:#b} has bits beyond the {len(self.edges)} edges"
            )

    def coloring(self) -> Optional[ColoredVertexSet]:
        if self.colors is None:
            return None
        return ColoredVertexSet.from_labels(self.colors)

    def to_networkx(self) -> nx.MultiGraph:
        """Return the graph as a networkx MultiGraph keyed by edge index."""
        multigraph = nx.MultiGraph()
        multigraph.add_nodes_from(range(self.vertex_count))
        for index, (u, v) in enumerate(self.edges):
            multigraph.add_edge(u, v, key=index)
        return multigraph

    def __str__(self):
        return f"Graph(n={self.vertex_count}, edges={list(self.edges)})"


def require_simple(graph: Graph, operation: str) -> None:
    if not graph.simple:
        raise HypothesisError(f"{operation} requires a simple graph")


def require_connected_simple(graph: Graph, operation: str) -> None:
    require_simple(graph, operation)
    if not is_connected(graph):
        raise HypothesisError(f"{operation} requires a connected graph")


def _find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _rank(graph: Graph, subset: EdgeSubset) -> int:
    parent = list(range(graph.vertex_count))
    edges = graph.edges
    result = 0
    while subset:
        low = subset & -subset
        u, v = edges[low.bit_length() - 1]
        subset ^= low
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            result += 1
    return result


def rank(graph: Graph, subset: Optional[EdgeSubset] = None) -> int:
    """
    Size of a spanning forest of the spanning subgraph ``(V, subset)``.

    Args:
        graph (Graph): Host graph.
        subset (int, optional): Edge bitmask; defaults to every edge.

    Returns:
        int: ``|V|`` minus the number of components of ``(V, subset)``.
    """
    if subset is None:
        subset = graph.full_mask
    graph.check_subset(subset)
    return _rank(graph, subset)


def nullity(graph: Graph, subset: Optional[EdgeSubset] = None) -> int:
    """
    Cycle-space dimension ``|A| - rank(A)``; loops and parallel copies add one each.
    """
    if subset is None:
        subset = graph.full_mask
    graph.check_subset(subset)
    return subset.bit_count() - _rank(graph, subset)


def component_count(graph: Graph, subset: Optional[EdgeSubset] = None) -> int:
    return graph.vertex_count - rank(graph, subset)


def is_connected(graph: Graph) -> bool:
    if graph.vertex_count <= 1:
        return True
    return _rank(graph, graph.full_mask) == graph.vertex_count - 1


def is_two_connected(graph: Graph) -> bool:
    """
    Two-connectedness in the matroid-indecomposable sense.

    Loops are ignored. On two vertices a parallel pair counts as 2-connected
    while a single edge (a bridge) does not; from three vertices on the graph
    must be connected without a cut vertex.
    """
    proper = [(u, v) for u, v in graph.edges if u != v]
    if graph.vertex_count < 2:
        return False
    if graph.vertex_count == 2:
        return len(proper) >= 2
    if not is_connected(graph):
        return False
    underlying = nx.Graph()
    underlying.add_nodes_from(range(graph.vertex_count))
    underlying.add_edges_from(proper)
    return next(nx.articulation_points(underlying), None) is None


def girth(graph: Graph):
    """
    Length of a shortest cycle.

    Returns:
        int | INFINITY: 1 for a loop, 2 for a parallel pair, otherwise the BFS
        shortest cycle; INFINITY for a forest.
    """
    if any(u == v for u, v in graph.edges):
        return 1
    seen = set()
    for pair in graph.edges:
        if pair in seen:
            return 2
        seen.add(pair)

    adjacency = [[] for _ in range(graph.vertex_count)]
    for u, v in graph.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    best = INFINITY
    for root in range(graph.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if length < best:
                        best = length
    return best


def contract_with_map(
    graph: Graph, subset: EdgeSubset
) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Contract the edges of ``subset`` and report where surviving edges went.

    The edges of ``subset`` disappear, their endpoints are identified, and any
    other edge whose endpoints become identified turns into a loop. Classes are
    numbered in order of their smallest original vertex.

    Returns:
        tuple: The quotient multigraph and, for each of its edges, the index of
        the original edge it came from.
    """
    graph.check_subset(subset)
    parent = list(range(graph.vertex_count))
    for index in iter_bits(subset):
        u, v = graph.edges[index]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    label = {}
    vertex_label = []
    for vertex in range(graph.vertex_count):
        root = _find(parent, vertex)
        if root not in label:
            label[root] = len(label)
        vertex_label.append(label[root])

    surviving = []
    for index, (u, v) in enumerate(graph.edges):
        if subset >> index & 1:
            continue
        a, b = vertex_label[u], vertex_label[v]
        surviving.append(((min(a, b), max(a, b)), index))
    surviving.sort()
    quotient = Graph(len(label), tuple(pair for pair, _ in surviving))
    return quotient, tuple(index for _, index in surviving)


def contract(graph: Graph, subset: EdgeSubset) -> Graph:
    """Quotient multigraph ``G / A``; generally not simple."""
    return contract_with_map(graph, subset)[0]


def delete_edges(graph: Graph, subset: EdgeSubset) -> Graph:
    graph.check_subset(subset)
    kept = tuple(
        pair for index, pair in enumerate(graph.edges) if not subset >> index & 1
    )
    return Graph(graph.vertex_count, kept)


def induced_edge_mask(graph: Graph, vertex_mask: int) -> EdgeSubset:
    """Bitmask of the edges with both endpoints in ``vertex_mask``."""
    mask = 0
    for index, (u, v) in enumerate(graph.edges):
        if vertex_mask >> u & 1 and vertex_mask >> v & 1:
            mask |= 1 << index
    return mask


def induced_subgraph(
    graph: Graph, vertices: Iterable[int]
) -> Tuple[Graph, Tuple[int, ...], Tuple[int, ...]]:
    """
    The subgraph ``G|_W`` induced on ``vertices``.

    Args:
        graph (Graph): Host graph.
        vertices (Iterable[int]): The vertex set ``W``.

    Returns:
        tuple: ``(subgraph, vertex_map, edge_map)`` where ``vertex_map[i]`` is
        the original vertex of new vertex ``i`` and ``edge_map[j]`` the original
        index of new edge ``j``.
    """
    chosen = sorted(set(int(v) for v in vertices))
    for vertex in chosen:
        if not 0 <= vertex < graph.vertex_count:
            raise ParameterError(
                f"vertex {vertex} is outside 0..{graph.vertex_count - 1}"
            )
    relabel = {vertex: position for position, vertex in enumerate(chosen)}
    kept_edges = []
    edge_map = []
    for index, (u, v) in enumerate(graph.edges):
        if u in relabel and v in relabel:
            kept_edges.append((relabel[u], relabel[v]))
            edge_map.append(index)
    colors = None
    if graph.colors is not None:
        colors = tuple(graph.colors[vertex] for vertex in chosen)
    subgraph = Graph(len(chosen), tuple(kept_edges), colors=colors)
    return subgraph, tuple(chosen), tuple(edge_map)


def two_connected_induced_sets(graph: Graph) -> Iterator[Tuple[int, EdgeSubset]]:
    """
    Yield ``(vertex_mask, edge_mask)`` for every vertex set whose induced
    subgraph is 2-connected with positive nullity, skipping edge sets already
    produced by a smaller vertex mask.
    """
    require_simple(graph, "two_connected_induced_edge_sets")
    seen = set()
    for vertex_mask in range(1, 1 << graph.vertex_count):
        size = vertex_mask.bit_count()
        if size < 3:
            continue
        edge_mask = induced_edge_mask(graph, vertex_mask)
        # a connected graph on |W| vertices needs |W| edges to carry a cycle
        if edge_mask.bit_count() < size or edge_mask in seen:
            continue
        subgraph, _, _ = induced_subgraph(graph, iter_bits(vertex_mask))
        if is_two_connected(subgraph) and nullity(subgraph) >= 1:
            seen.add(edge_mask)
            yield vertex_mask, edge_mask


def two_connected_induced_edge_sets(graph: Graph) -> List[EdgeSubset]:
    """Edge sets of the 2-connected induced subgraphs of a simple graph."""
    return [edge_mask for _, edge_mask in two_connected_induced_sets(graph)]


def is_forest(graph: Graph) -> bool:
    return nullity(graph) == 0


def is_cycle_graph(graph: Graph) -> bool:
    if not graph.simple or graph.vertex_count < 3 or not is_connected(graph):
        return False
    return all(graph.degree(v) == 2 for v in range(graph.vertex_count))


def is_complete_graph(graph: Graph) -> bool:
    n = graph.vertex_count
    return graph.simple and graph.edge_count == n * (n - 1) // 2


def multipartite_coloring(graph: Graph) -> Optional[ColoredVertexSet]:
    """
    Recognise a complete multipartite graph.

    A simple graph is complete multipartite exactly when non-adjacency is an
    equivalence relation; its classes are the colours.

    Returns:
        ColoredVertexSet | None: The colouring, or None if ``graph`` is not
        complete multipartite.
    """
    n = graph.vertex_count
    if not graph.simple or n == 0:
        return None
    neighbours = [set() for _ in range(n)]
    for u, v in graph.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    labels = [-1] * n
    classes = []
    for vertex in range(n):
        if labels[vertex] >= 0:
            continue
        members = {w for w in range(n) if w not in neighbours[vertex]}
        for w in members:
            if labels[w] >= 0:
                return None
            labels[w] = len(classes)
        classes.append(members)
    if any(labels[u] == labels[v] for u, v in graph.edges):
        return None
    # every edge crosses classes, so the count pins down completeness
    expected = n * (n - 1) // 2 - sum(len(c) * (len(c) - 1) // 2 for c in classes)
    if graph.edge_count != expected:
        return None
    return ColoredVertexSet.from_labels(labels)


def verified_coloring(graph: Graph) -> Optional[ColoredVertexSet]:
    """
    Colour classes of a complete multipartite graph, honouring supplied labels.

    When ``graph.colors`` is set, the labels must describe exactly the classes
    that the edge structure implies; they are then used as given.

    Returns:
        ColoredVertexSet | None: The colouring, or None for an unlabeled graph
        that is not complete multipartite.

    Raises:
        HypothesisError: If the supplied colours disagree with the structure.
    """
    inferred = multipartite_coloring(graph)
    if graph.colors is None:
        return inferred
    supplied = graph.coloring()
    if inferred is None:
        raise HypothesisError(
            "colors were supplied but the graph is not complete multipartite"
        )
    if supplied != inferred:
        raise HypothesisError(
            f"colors {list(graph.colors)} do not match the colour classes "
            "implied by the edges"
        )
    return supplied
