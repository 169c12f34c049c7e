"""
Poincaré polynomial of the picture space and the irreducibility criteria.

The picture space of a connected graph G in dimension d has Poincaré
polynomial

    ([d] - 1)^(|V|-1) * [d+1] * T_G([2][d] / ([d] - 1), [d])

where [k] is the q-integer 1 + q + ... + q^(k-1). The denominators are cleared
term by term, so every intermediate value is an integer polynomial. The space
is irreducible exactly when this polynomial is monic of degree d|V|, which is
also equivalent to d * nul(A) < |A| for every nonempty edge set A.
"""

import logging
from typing import Optional

from src.config import edge_limit
from src.errors import InconsistencyError, ParameterError
from src.graph import (
    Graph,
    _rank,
    require_connected_simple,
    two_connected_induced_edge_sets,
)
from src.polynomials import QPolynomial, XYPolynomial, q_integer
from src.tutte import tutte_deletion_contraction

log = logging.getLogger(__name__)

SUBSET_SCAN_MAX_EDGES = 20


def _check_dimension(d: int) -> int:
    if int(d) < 1:
        raise ParameterError(f"dimension d must be at least 1, got {d}")
    return int(d)


def poincare_polynomial(
    graph: Graph, d: int, tutte: Optional[XYPolynomial] = None
) -> QPolynomial:
    """
    Poincaré polynomial of the d-dimensional picture space.

    Args:
        graph (Graph): A connected simple graph.
        d (int): Ambient dimension, at least 1.
        tutte (XYPolynomial, optional): Precomputed T_G, so sweeps over d only
            evaluate the Tutte polynomial once.

    Returns:
        QPolynomial: The polynomial, with nonnegative integer coefficients.

    Raises:
        HypothesisError: If the graph is not connected and simple.
        ParameterError: If d < 1.
        InconsistencyError: If the Tutte polynomial has x-degree above |V| - 1.
    """
    require_connected_simple(graph, "poincare_polynomial")
    d = _check_dimension(d)
    if tutte is None:
        tutte = tutte_deletion_contraction(graph)

    top = graph.vertex_count - 1
    if tutte.x_degree() > top:
        raise InconsistencyError(
            f"Tutte polynomial has x-degree {tutte.x_degree()} above rank {top}",
            details={"tutte": tutte.to_json(), "rank": top},
        )

    qd = q_integer(d)
    qd_minus_one = qd - 1
    numerator = q_integer(2) * qd
    total = QPolynomial()
    for (i, j), c in tutte.terms.items():
        total = total + (qd_minus_one ** (top - i)) * (numerator**i) * (qd**j) * c
    return total * q_integer(d + 1)


def is_irreducible_poincare(
    graph: Graph, d: int, polynomial: Optional[QPolynomial] = None
) -> bool:
    """
    True iff the Poincaré polynomial is monic of degree d|V|.

    An already computed ``polynomial`` for the same graph and d is reused.
    """
    if polynomial is None:
        polynomial = poincare_polynomial(graph, d)
    return (
        polynomial.degree == d * graph.vertex_count and polynomial.is_monic()
    )


def subset_irreducible(graph: Graph, d: int) -> bool:
    """
    Irreducibility from the edge-set inequality d * nul(A) < |A|.

    Small graphs scan every nonempty edge subset. Larger simple graphs only
    scan the edge sets of 2-connected induced subgraphs, where the minimum of
    |A| / nul(A) is always attained.

    Args:
        graph (Graph): A simple graph.
        d (int): Ambient dimension, at least 1.

    Returns:
        bool: Whether every edge set satisfies the inequality.
    """
    d = _check_dimension(d)
    if graph.edge_count <= edge_limit(SUBSET_SCAN_MAX_EDGES):
        candidates = range(1, 1 << graph.edge_count)
    else:
        log.info("🔍 Scanning 2-connected induced subgraphs instead of all subsets")
        candidates = two_connected_induced_edge_sets(graph)
    for subset in candidates:
        size = subset.bit_count()
        if d * (size - _rank(graph, subset)) >= size:
            return False
    return True
