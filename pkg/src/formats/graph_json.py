"""
Reading and writing graphs in the JSON exchange format.

A graph document looks like ``{"n": 4, "edges": [[0, 1], [1, 2]]}`` with
zero-based vertices; an optional ``"colors"`` list gives the colour class of
each vertex for multipartite-specific operations.
"""

import json
from pathlib import Path
from typing import Union

from src.errors import ParameterError
from src.graph import Graph


def graph_from_dict(payload: dict) -> Graph:
    """
    Build a Graph from a parsed JSON document.

    Args:
        payload (dict): Mapping with ``n``, ``edges`` and optionally ``colors``.

    Returns:
        Graph: The labeled graph.

    Raises:
        ParameterError: If a field is missing or malformed.
    """
    if not isinstance(payload, dict):
        raise ParameterError("graph JSON must be an object")
    if "n" not in payload or "edges" not in payload:
        raise ParameterError('graph JSON needs "n" and "edges" fields')
    n, edges = payload["n"], payload["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError(f'"n" must be an integer, got {n!r}')
    if not isinstance(edges, list) or not all(
        isinstance(edge, list) and len(edge) == 2 for edge in edges
    ):
        raise ParameterError('"edges" must be a list of [u, v] pairs')
    colors = payload.get("colors")
    if colors is not None and not isinstance(colors, list):
        raise ParameterError('"colors" must be a list with one entry per vertex')
    return Graph(
        n,
        tuple(tuple(edge) for edge in edges),
        colors=tuple(colors) if colors is not None else None,
    )


def parse_graph(text: str) -> Graph:
    """Parse an inline JSON graph document."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid graph JSON: {exc.msg} at position {exc.pos}")
    return graph_from_dict(payload)


def load_graph(path: Union[str, Path]) -> Graph:
    """
    Load a graph from a JSON file.

    Raises:
        ParameterError: If the file is missing or not a valid graph document.
    """
    path = Path(path)
    if not path.is_file():
        raise ParameterError(f"graph file not found: {path}")
    return parse_graph(path.read_text(encoding="utf-8"))


def graph_to_dict(graph: Graph) -> dict:
    payload = {"n": graph.vertex_count, "edges": [list(edge) for edge in graph.edges]}
    if graph.colors is not None:
        payload["colors"] = list(graph.colors)
    return payload
