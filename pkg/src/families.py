"""
Graph families and generators.

Canonical labeled constructions for the families the picture-space results
talk about (cycles, paths, complete and complete multipartite graphs, onion
graphs), the ``family:params`` spec parser used by the CLI, an exhaustive
generator of connected graphs up to isomorphism, and a seeded random
connected graph generator for property checks.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional

import numpy as np

from src.canonical import canonical_key
from src.errors import ParameterError
from src.graph import Graph

log = logging.getLogger(__name__)


def cycle(n: int) -> Graph:
    """The cycle C_n on vertices 0..n-1."""
    if n < 3:
        raise ParameterError(f"cycle requires at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """The path on ``n`` vertices (length n-1)."""
    if n < 1:
        raise ParameterError(f"path requires at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete requires at least 1 vertex, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_multipartite(*counts: int) -> Graph:
    """
    The complete multipartite graph K_{q_1,...,q_n}.

    Counts are sorted nonincreasing; the vertices of colour 0 come first, then
    colour 1, and so on. The colouring is attached to the graph.
    """
    if not counts:
        raise ParameterError("complete_multipartite requires at least one colour")
    if any(int(q) < 1 for q in counts):
        raise ParameterError(f"colour counts must be positive, got {counts}")
    ordered = sorted((int(q) for q in counts), reverse=True)
    colors = [c for c, q in enumerate(ordered) for _ in range(q)]
    edges = tuple(
        (u, v)
        for u, v in combinations(range(len(colors)), 2)
        if colors[u] != colors[v]
    )
    return Graph(len(colors), edges, colors=tuple(colors))


def validate_onion(lengths) -> List[int]:
    """Return the onion path lengths sorted ascending, or raise ParameterError."""
    lengths = sorted(int(a) for a in lengths)
    if len(lengths) < 2:
        raise ParameterError(f"onion requires at least two paths, got {lengths}")
    if lengths[0] < 1:
        raise ParameterError(f"onion path lengths must be positive, got {lengths}")
    if lengths.count(1) > 1:
        raise ParameterError(
            "onion allows at most one path of length 1 (two would be parallel edges)"
        )
    return lengths


def onion(*lengths: int) -> Graph:
    """
    The onion graph O(a_1, ..., a_k): k internally disjoint paths of the given
    lengths glued at two common endpoints (vertices 0 and 1).
    """
    lengths = validate_onion(lengths)
    edges = []
    next_vertex = 2
    for length in lengths:
        previous = 0
        for _ in range(length - 1):
            edges.append((previous, next_vertex))
            previous = next_vertex
            next_vertex += 1
        edges.append((previous, 1))
    return Graph(next_vertex, tuple(edges))


def _parse_ints(params: str) -> List[int]:
    try:
        return [int(token) for token in params.split(",") if token.strip()]
    except ValueError:
        raise ParameterError(f"expected comma-separated integers, got {params!r}")


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "multipartite": complete_multipartite,
    "onion": onion,
}


def parse_family_spec(spec: str) -> Graph:
    """
    Build a graph from a ``family:params`` spec such as ``cycle:7``,
    ``multipartite:3,2,2`` or ``onion:2,2,2``.
    """
    family, sep, params = spec.partition(":")
    family = family.strip().lower()
    if not sep or family not in FAMILIES:
        raise ParameterError(
            f"unknown generator spec {spec!r}; expected one of "
            + ", ".join(f"{name}:<params>" for name in FAMILIES)
        )
    values = _parse_ints(params)
    if family in ("cycle", "path", "complete") and len(values) != 1:
        raise ParameterError(f"{family} takes exactly one parameter, got {params!r}")
    return FAMILIES[family](*values)


def all_connected_graphs(
    max_vertices: int, max_edges: Optional[int] = None
) -> List[Graph]:
    """
    Every connected simple graph up to isomorphism within the bounds.

    Graphs are grown one edge at a time (either closing a new edge between
    existing vertices or attaching a new pendant vertex), which reaches every
    connected graph, and deduplicated by canonical key.

    Returns:
        list[Graph]: Sorted by vertex count, edge count, then canonical key.
    """
    if max_vertices < 1:
        return []
    seed = Graph(1, ())
    found = {canonical_key(seed): seed}
    frontier = [seed]
    while frontier:
        grown = []
        for graph in frontier:
            if max_edges is not None and graph.edge_count >= max_edges:
                continue
            present = set(graph.edges)
            candidates = [
                Graph(graph.vertex_count, graph.edges + (pair,))
                for pair in combinations(range(graph.vertex_count), 2)
                if pair not in present
            ]
            if graph.vertex_count < max_vertices:
                n = graph.vertex_count
                candidates.extend(
                    Graph(n + 1, graph.edges + ((u, n),)) for u in range(n)
                )
            for candidate in candidates:
                key = canonical_key(candidate)
                if key not in found:
                    found[key] = candidate
                    grown.append(candidate)
        frontier = grown
    log.info("✅ Generated %d connected graphs", len(found))
    return [
        found[key]
        for key in sorted(
            found, key=lambda k: (found[k].vertex_count, found[k].edge_count, k)
        )
    ]


def random_connected_graph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """
    A random connected simple graph with ``n`` vertices and ``m`` edges:
    a random recursive spanning tree on shuffled labels plus ``m - n + 1``
    extra edges drawn without replacement.
    """
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise ParameterError(f"no connected simple graph has n={n}, m={m}")
    labels = rng.permutation(n)
    edges = set()
    for position in range(1, n):
        parent = int(rng.integers(0, position))
        u, v = int(labels[parent]), int(labels[position])
        edges.add((min(u, v), max(u, v)))
    missing = [pair for pair in combinations(range(n), 2) if pair not in edges]
    extra = m - len(edges)
    if extra:
        picks = rng.choice(len(missing), size=extra, replace=False)
        edges.update(missing[int(i)] for i in picks)
    return Graph(n, tuple(edges))
