import os
import sys

import numpy as np
import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.canonical import canonical_key
from src.errors import ParameterError
from src.families import (
    complete,
    complete_multipartite,
    cycle,
    onion,
    parse_family_spec,
    path,
    random_connected_graph,
)
from src.graph import is_connected, is_cycle_graph


def test_basic_families():
    assert cycle(5).edge_count == 5
    assert path(4).edge_count == 3
    assert path(1).edge_count == 0
    assert complete(5).edge_count == 10


def test_complete_multipartite_attaches_colors():
    graph = complete_multipartite(2, 3)
    assert graph.colors == (0, 0, 0, 1, 1)
    assert graph.edge_count == 6
    assert complete_multipartite(1, 1, 1) == complete(3)


def test_onion_sizes():
    graph = onion(1, 3, 3)
    assert graph.vertex_count == 6
    assert graph.edge_count == 7
    assert canonical_key(onion(2, 2, 2)) == canonical_key(complete_multipartite(3, 2))


def test_two_path_onion_is_a_cycle():
    assert is_cycle_graph(onion(3, 4))
    assert canonical_key(onion(3, 4)) == canonical_key(cycle(7))


@pytest.mark.parametrize(
    "call, message",
    [
        (lambda: cycle(2), "at least 3 vertices"),
        (lambda: onion(1, 1), "at most one path of length 1"),
        (lambda: onion(4), "at least two paths"),
        (lambda: complete_multipartite(2, 0), "positive"),
    ],
)
def test_invalid_family_parameters(call, message):
    with pytest.raises(ParameterError, match=message):
        call()


def test_parse_family_spec():
    assert parse_family_spec("cycle:7") == cycle(7)
    assert parse_family_spec("path:4") == path(4)
    multipartite = parse_family_spec("multipartite:3,2,2")
    assert multipartite.vertex_count == 7
    assert multipartite.colors is not None
    assert parse_family_spec("onion:2,2,2") == onion(2, 2, 2)


def test_parse_family_spec_errors():
    with pytest.raises(ParameterError, match="unknown generator spec"):
        parse_family_spec("petersen:10")
    with pytest.raises(ParameterError, match="exactly one parameter"):
        parse_family_spec("cycle:3,4")
    with pytest.raises(ParameterError, match="comma-separated integers"):
        parse_family_spec("cycle:x")


def test_random_connected_graph_is_seeded():
    first = random_connected_graph(8, 12, np.random.default_rng(7))
    second = random_connected_graph(8, 12, np.random.default_rng(7))
    assert first == second
    assert first.simple
    assert is_connected(first)
    assert first.edge_count == 12


def test_random_connected_graph_rejects_impossible_sizes():
    with pytest.raises(ParameterError, match="no connected simple graph"):
        random_connected_graph(4, 7, np.random.default_rng(0))
