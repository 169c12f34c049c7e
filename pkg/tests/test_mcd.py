import os
import sys

import numpy as np
import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.ears import is_partial_ear_decomposition
from src.errors import HypothesisError, ParameterError, SizeLimitError
from src.families import (
    all_connected_graphs,
    complete,
    complete_multipartite,
    cycle,
    onion,
    path,
    random_connected_graph,
)
from src.graph import (
    INFINITY,
    Graph,
    girth,
    indices_to_mask,
    is_forest,
    mask_to_indices,
)
from src.mcd import (
    applicable_methods,
    ear_sequence_for,
    girth_bound_check,
    irreducibility_range,
    mcd,
    mcd_bruteforce,
    mcd_ears,
    mcd_flats,
    mcd_onion_closed_form,
)


@pytest.fixture
def bowtie():
    return Graph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)))


@pytest.fixture(scope="module")
def small_graphs_with_cycles():
    return [g for g in all_connected_graphs(5) if not is_forest(g)]


@pytest.mark.parametrize("n", range(3, 10))
def test_cycles(n):
    assert mcd_bruteforce(cycle(n)).value == n
    assert mcd_flats(cycle(n)).value == n
    assert mcd_ears(cycle(n)).value == n


def test_forests_are_infinite():
    result = mcd(path(5))
    assert result.value is INFINITY
    assert not result.is_finite
    assert result.to_json()["mcd"] == "infinity"
    assert mcd_ears(path(3)).value is INFINITY
    assert mcd_flats(path(3)).edges is None


def test_k4_witness_is_the_whole_graph():
    k4 = complete(4)
    assert mcd_bruteforce(k4).value == 2
    assert mcd_bruteforce(k4).edges == k4.full_mask
    assert mcd_flats(k4).edges == k4.full_mask
    result = mcd(k4)
    assert result.value == 2
    assert result.cross_checked == ("brute", "flats", "ears")


def test_k23_sits_below_its_girth():
    k23 = complete_multipartite(3, 2)
    assert mcd(k23).value == 3
    assert girth(k23) == 4


def test_flats_witness_ties_go_to_smallest_mask(bowtie):
    result = mcd_flats(bowtie)
    assert result.value == 3
    assert mask_to_indices(result.edges) == [0, 1, 4]
    assert result.vertices == (0, 1, 2)
    assert result.to_json()["witness"] == {"edges": [0, 1, 4], "vertices": [0, 1, 2]}


def test_ear_witness_is_a_valid_decomposition():
    for graph in (onion(2, 2, 2), complete(4), onion(1, 3, 3), cycle(6)):
        result = mcd_ears(graph)
        assert is_partial_ear_decomposition(graph, list(result.ears.ears))
        assert result.value == -(-result.ears.total_edges // result.ears.count)


def test_three_methods_agree_on_small_graphs(small_graphs_with_cycles):
    for graph in small_graphs_with_cycles:
        values = {
            mcd_bruteforce(graph).value,
            mcd_flats(graph).value,
            mcd_ears(graph).value,
        }
        assert len(values) == 1
        assert values.pop() >= 2
    print(f"✅ Three mcd methods agree on {len(small_graphs_with_cycles)} graphs")


def test_three_methods_agree_on_random_graphs():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(5, 9))
        m = int(rng.integers(n, min(n * (n - 1) // 2, 14) + 1))
        graph = random_connected_graph(n, m, rng)
        brute = mcd_bruteforce(graph).value
        assert mcd_flats(graph).value == brute
        assert mcd_ears(graph).value == brute


def test_ear_witness_is_the_smallest_decomposable_minimiser(bowtie):
    result = mcd_ears(bowtie)
    assert result.value == 3
    assert mask_to_indices(result.edges) == [0, 1, 4]
    assert result.ears.ears == (indices_to_mask([0, 1, 4]),)


def test_combined_witness_comes_from_one_method(bowtie, small_graphs_with_cycles):
    combined = mcd(bowtie)
    assert mask_to_indices(combined.edges) == [0, 1, 4]
    assert combined.ears.union == combined.edges
    assert combined.vertices == (0, 1, 2)
    for graph in small_graphs_with_cycles:
        result = mcd(graph)
        assert result.ears.union == result.edges
        assert is_partial_ear_decomposition(graph, list(result.ears.ears))


def test_ear_sequence_for_a_target(bowtie):
    ears = ear_sequence_for(bowtie, bowtie.full_mask)
    assert len(ears) == 2
    assert is_partial_ear_decomposition(bowtie, list(ears))
    star = indices_to_mask([0, 1, 2, 3])
    assert ear_sequence_for(bowtie, star) is None



def test_onion_closed_form():
    assert mcd_onion_closed_form([2, 2, 2]) == 3
    assert mcd_onion_closed_form([3, 4]) == 7
    assert mcd_onion_closed_form([1, 3, 3]) == 4
    assert mcd_bruteforce(onion(1, 3, 3)).value == 4
    # many equal paths settle one above the path length
    assert mcd_onion_closed_form([2] * 5) == 3
    assert mcd_bruteforce(onion(2, 2, 2, 2, 2)).value == 3


def test_girth_bound():
    expected = {"mcd": 6, "girth": 6, "holds": True}
    assert girth_bound_check(cycle(6)).to_json() == expected
    bound = girth_bound_check(onion(2, 2, 2))
    assert (bound.mcd, bound.girth) == (3, 4)
    k4 = girth_bound_check(complete(4))
    assert (k4.mcd, k4.girth) == (2, 3)
    with pytest.raises(HypothesisError, match="with a cycle"):
        girth_bound_check(path(4))


def test_irreducibility_range():
    assert irreducibility_range(cycle(4), 6) == [
        (1, True),
        (2, True),
        (3, True),
        (4, False),
        (5, False),
        (6, False),
    ]
    assert irreducibility_range(complete(4), 4) == [
        (1, True),
        (2, False),
        (3, False),
        (4, False),
    ]
    assert all(ok for _, ok in irreducibility_range(path(4), 6))


def test_irreducibility_range_guards():
    with pytest.raises(SizeLimitError, match="d_max <= 10"):
        irreducibility_range(cycle(4), 11)
    with pytest.raises(SizeLimitError, match="at most 8 vertices"):
        irreducibility_range(cycle(9), 3)
    with pytest.raises(ParameterError, match="at least 1"):
        irreducibility_range(cycle(4), 0)


def test_method_selection_follows_edge_limit(monkeypatch):
    monkeypatch.setenv("GRAPHVAR_MAX_EDGES", "10")
    assert applicable_methods(complete(5)) == ["brute", "flats", "ears"]
    graph = complete_multipartite(4, 3)
    assert applicable_methods(graph) == ["flats"]
    result = mcd(graph)
    assert result.cross_checked == ("flats",)
    with pytest.raises(SizeLimitError, match="at most 10 edges"):
        mcd_bruteforce(graph)


def test_invalid_inputs():
    with pytest.raises(ParameterError, match="unknown mcd method"):
        mcd(cycle(3), "spectral")
    with pytest.raises(HypothesisError, match="connected"):
        mcd(Graph(4, ((0, 1), (2, 3))))
