"""
Isomorphism-class keys for small multigraphs.

The key is only used to memoise the deletion-contraction Tutte engine and to
deduplicate exhaustively generated graphs, so it must be exact: two graphs get
the same key if and only if they are isomorphic (loops and edge multiplicities
included). It is computed by colour refinement followed by individualisation
of one vertex at a time, keeping the smallest adjacency certificate over all
leaves of the search. Interchangeable twin vertices are tried only once.
"""

from typing import List, Tuple

from src.graph import Graph

Cells = List[List[int]]


def _multiplicity_matrix(graph: Graph) -> List[List[int]]:
    n = graph.vertex_count
    matrix = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        if u == v:
            matrix[u][u] += 1
        else:
            matrix[u][v] += 1
            matrix[v][u] += 1
    return matrix


def _refine(matrix: List[List[int]], cells: Cells) -> Cells:
    while True:
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(sum(matrix[v][w] for w in other) for other in cells)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(matrix: List[List[int]], u: int, v: int) -> bool:
    if matrix[u][u] != matrix[v][v]:
        return False
    return all(
        matrix[u][w] == matrix[v][w] for w in range(len(matrix)) if w != u and w != v
    )


def _certificate(matrix: List[List[int]], order: List[int]) -> Tuple[int, ...]:
    return tuple(
        matrix[order[i]][order[j]] for i in range(len(order)) for j in range(i + 1)
    )


def canonical_key(graph: Graph) -> tuple:
    """
    Exact isomorphism-class key of a multigraph.

    Args:
        graph (Graph): Any multigraph, loops and parallel edges allowed.

    Returns:
        tuple: ``(vertex_count, certificate)``; equal exactly for isomorphic graphs.
    """
    n = graph.vertex_count
    if n == 0:
        return (0, ())
    matrix = _multiplicity_matrix(graph)
    invariants = {}
    for v in range(n):
        invariant = (matrix[v][v], sum(matrix[v]) - matrix[v][v])
        invariants.setdefault(invariant, []).append(v)
    cells = _refine(matrix, [invariants[key] for key in sorted(invariants)])

    best = None
    stack = [cells]
    while stack:
        current = stack.pop()
        target = next((i for i, cell in enumerate(current) if len(cell) > 1), None)
        if target is None:
            certificate = _certificate(matrix, [cell[0] for cell in current])
            if best is None or certificate < best:
                best = certificate
            continue
        tried = []
        for v in current[target]:
            if any(_twins(matrix, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in current[target] if w != v]
            split = current[:target] + [[v], rest] + current[target + 1 :]
            stack.append(_refine(matrix, split))
    return (n, best)
