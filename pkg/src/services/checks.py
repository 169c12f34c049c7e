"""
Check Suites Service

This module runs the exhaustive and randomised consistency checks behind
``graphvar check``. Every check maps a case function over a list of cases
(graphs, parameter tuples or seeds); the case function returns the failures
it found, and any graphvar error it raises is recorded as a failure too.

Cases are fanned out with joblib (``GRAPHVAR_N_JOBS`` workers), progress is
shown with tqdm on standard error when ``GRAPHVAR_PROGRESS`` is set, and the
outcome is summarised in a pandas DataFrame with one row per check.
"""

import logging
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from src.cellules import (
    BallBoxConfig,
    Exactness,
    MergeRule,
    apply_merge_rule,
    components_complete,
    components_cycle,
    components_multipartite,
    dimension_profile,
    enumerate_partitions,
    is_d_heavy,
    maximal_cellules_known,
    merge_to_indiscrete,
    random_rule_witness,
)
from src.config import get_settings
from src.ears import is_partial_ear_decomposition
from src.errors import GraphVarError, ParameterError
from src.families import (
    all_connected_graphs,
    complete_multipartite,
    cycle,
    onion,
    random_connected_graph,
)
from src.formats.graph_json import graph_to_dict
from src.graph import Graph, is_forest
from src.mcd import (
    girth_bound_check,
    irreducibility_range,
    mcd,
    mcd_bruteforce,
    mcd_flats,
    mcd_onion_closed_form,
)
from src.poincare import poincare_polynomial
from src.tutte import tutte_corank_nullity, tutte_deletion_contraction

log = logging.getLogger(__name__)

Failure = Dict[str, object]

RULE_SAMPLES = 1000
RANDOM_MCD_GRAPHS = 100
RANDOM_TUTTE_GRAPHS = 200
RANDOM_MAX_EDGES = 14


def _describe(case) -> object:
    if isinstance(case, Graph):
        return graph_to_dict(case)
    if isinstance(case, tuple):
        return [_describe(item) for item in case]
    if isinstance(case, MergeRule):
        return case.label
    return case


def _guarded(check: Callable[[object], List[Failure]], case) -> List[Failure]:
    try:
        return check(case)
    except GraphVarError as exc:
        return [{"case": _describe(case), "error": exc.to_json()}]


def _failure(case, **facts) -> Failure:
    return {"case": _describe(case), **facts}


# ---------------------------------------------------------------------------
# small-exhaustive
# ---------------------------------------------------------------------------


def _check_three_way_mcd(graph: Graph) -> List[Failure]:
    result = mcd(graph, "all")
    if set(result.cross_checked) != {"brute", "flats", "ears"}:
        return [_failure(graph, ran=list(result.cross_checked))]
    ears = result.ears
    if ears is not None and (
        ears.union != result.edges
        or not is_partial_ear_decomposition(graph, list(ears.ears))
    ):
        return [_failure(graph, **result.to_json(), expected="ears cover the witness")]
    return []


def _check_girth_and_floor(graph: Graph) -> List[Failure]:
    bound = girth_bound_check(graph)
    failures = []
    if bound.mcd < 2:
        failures.append(_failure(graph, mcd=bound.mcd, expected="mcd >= 2"))
    if graph.edge_count == graph.vertex_count and bound.mcd != bound.girth:
        failures.append(_failure(graph, **bound.to_json(), expected="mcd == girth"))
    return failures


def _check_monotone(graph: Graph) -> List[Failure]:
    base = mcd_flats(graph).value
    present = set(graph.edges)
    failures = []
    for u in range(graph.vertex_count):
        for v in range(u + 1, graph.vertex_count):
            if (u, v) in present:
                continue
            larger = Graph(graph.vertex_count, graph.edges + ((u, v),))
            value = mcd_flats(larger).value
            if value > base:
                failures.append(_failure(graph, added=[u, v], before=base, after=value))
    return failures


def _check_irreducibility(graph: Graph) -> List[Failure]:
    threshold = mcd_flats(graph).value
    return [
        _failure(graph, d=d, irreducible=verdict, mcd=repr(threshold))
        for d, verdict in irreducibility_range(graph, 8)
        if verdict != (d < threshold)
    ]


def _check_tutte_oracle(graph: Graph) -> List[Failure]:
    oracle = tutte_corank_nullity(graph)
    recurrence = tutte_deletion_contraction(graph)
    if oracle != recurrence:
        return [
            _failure(
                graph,
                corank_nullity=oracle.to_json(),
                recurrence=recurrence.to_json(),
            )
        ]
    return []


def random_suite_graph(seed: int) -> Graph:
    """Seeded connected graph with a cycle, 5 to 8 vertices and at most 14 edges."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(5, 9))
    m = int(rng.integers(n, min(n * (n - 1) // 2, RANDOM_MAX_EDGES) + 1))
    return random_connected_graph(n, m, rng)


def _check_random_mcd(seed: int) -> List[Failure]:
    return _check_three_way_mcd(random_suite_graph(seed))


def _check_random_tutte(seed: int) -> List[Failure]:
    return _check_tutte_oracle(random_suite_graph(seed))


def _check_degree_law(graph: Graph) -> List[Failure]:
    tutte = tutte_deletion_contraction(graph)
    failures = []
    for d in range(1, 6):
        polynomial = poincare_polynomial(graph, d, tutte=tutte)
        top, count = dimension_profile(graph, d)
        if (polynomial.degree, polynomial.leading_coefficient) != (top, count):
            failures.append(
                _failure(
                    graph,
                    d=d,
                    poincare=polynomial.to_json(),
                    max_dimension=top,
                    maximizers=count,
                )
            )
        if any(c < 0 for c in polynomial.coeffs):
            failures.append(_failure(graph, d=d, negative_coefficients=True))
    return failures


# ---------------------------------------------------------------------------
# multipartite
# ---------------------------------------------------------------------------


def integer_partitions(total: int, largest: int = None) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing tuples of positive integers summing to ``total``."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def covered_color_counts(max_vertices: int) -> List[Tuple[int, ...]]:
    """
    Colour counts of the complete multipartite graphs the merging argument
    covers: three or more colours, or two colours with counts at least 3 and 2.
    """
    found = []
    for total in range(2, max_vertices + 1):
        for counts in integer_partitions(total):
            bipartite_ok = len(counts) == 2 and counts[0] >= 3 and counts[1] >= 2
            if len(counts) >= 3 or bipartite_ok:
                found.append(counts)
    return found


def _check_heavy(counts: Tuple[int, ...]) -> List[Failure]:
    graph = complete_multipartite(*counts)
    return [_failure(counts, d=d) for d in (3, 4) if not is_d_heavy(graph, d)]


def _check_four_cycle_light(_) -> List[Failure]:
    if is_d_heavy(complete_multipartite(2, 2), 3):
        return [_failure("K_{2,2}", d=3, expected="not 3-heavy")]
    return []


def _check_rule_sample(case: Tuple[MergeRule, int, int]) -> List[Failure]:
    rule, d, seed = case
    rng = np.random.default_rng(seed)
    a, b = rule.guaranteed_gain
    failures = []
    for _ in range(RULE_SAMPLES):
        config, boxes = random_rule_witness(rule, rng)
        _, gain = apply_merge_rule(config, rule, boxes, d)
        if gain < a * d + b:
            failures.append(
                _failure(case, config=config.to_json(), boxes=boxes, delta=gain)
            )
    return failures


def _check_merge_sequences(case: Tuple[Tuple[int, ...], int]) -> List[Failure]:
    counts, d = case
    colors = complete_multipartite(*counts).coloring()
    configs = {}
    for partition in enumerate_partitions(colors.vertex_count):
        configs.setdefault(BallBoxConfig.from_partition(colors, partition), None)
    failures = []
    for config in configs:
        steps = merge_to_indiscrete(config, d)
        final = steps[-1].result if steps else config
        if final.box_count != 1 or any(step.delta < 0 for step in steps):
            failures.append(
                _failure(
                    case,
                    config=config.to_json(),
                    steps=[s.to_json() for s in steps],
                )
            )
    return failures


def _check_complete_components(n: int) -> List[Failure]:
    listed = components_complete(n, 3)
    brute = [
        partition
        for partition in enumerate_partitions(n)
        if not any(len(block) == 2 for block in partition.blocks)
    ]
    if listed != brute:
        return [_failure(n, listed=len(listed), brute_force=len(brute))]
    return []


def _check_cycle_matches_multipartite(_) -> List[Failure]:
    triangle = complete_multipartite(1, 1, 1)
    by_cycle = components_cycle(3, 3)
    by_colors = components_multipartite(triangle.coloring(), 3)
    if by_cycle != by_colors:
        return [
            _failure(
                "K_{1,1,1}",
                cycle=[p.to_json() for p in by_cycle],
                multipartite=[p.to_json() for p in by_colors],
            )
        ]
    return []


def _check_maximal_matches_components(counts: Tuple[int, ...]) -> List[Failure]:
    graph = complete_multipartite(*counts)
    known = maximal_cellules_known(graph, 3)
    expected = components_multipartite(graph.coloring(), 3)
    if known.exactness is not Exactness.EXACT or known.partitions != expected:
        return [
            _failure(
                counts,
                exactness=known.exactness.value,
                maximal=len(known.partitions),
                components=len(expected),
            )
        ]
    return []


# ---------------------------------------------------------------------------
# onion
# ---------------------------------------------------------------------------


def _check_cycle_law(n: int) -> List[Failure]:
    result = mcd(cycle(n), "all")
    if result.value != n or len(result.cross_checked) != 3:
        return [_failure(n, mcd=repr(result.value), ran=list(result.cross_checked))]
    return []


def _check_girth_gap(_) -> List[Failure]:
    failures = []
    bound = girth_bound_check(onion(2, 2, 2))
    if (bound.mcd, bound.girth) != (3, 4):
        failures.append(_failure("onion:2,2,2", **bound.to_json(), expected=[3, 4]))
    glued = mcd_bruteforce(onion(1, 3, 3)).value
    log.info("🔍 Two 4-cycles glued along an edge: mcd=%r", glued)
    if glued != 4:
        failures.append(_failure("onion:1,3,3", mcd=repr(glued), expected=4))
    return failures


def onion_parameter_sets(
    max_paths: int = 4, max_length: int = 4
) -> List[Tuple[int, ...]]:
    """Valid sorted onion parameters with 2..max_paths paths of length <= max_length."""
    found = []
    for k in range(2, max_paths + 1):
        for lengths in combinations_with_replacement(range(1, max_length + 1), k):
            if lengths.count(1) <= 1:
                found.append(lengths)
    return found


def _check_onion_closed_form(lengths: Tuple[int, ...]) -> List[Failure]:
    closed = mcd_onion_closed_form(lengths)
    brute = mcd_bruteforce(onion(*lengths)).value
    if closed != brute:
        return [_failure(lengths, closed_form=closed, brute_force=brute)]
    return []


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _non_forests(graphs: Sequence[Graph]) -> List[Graph]:
    return [graph for graph in graphs if not is_forest(graph)]


def _small_exhaustive() -> List[Tuple[str, Callable, list]]:
    up_to_six = all_connected_graphs(6)
    up_to_five = [graph for graph in up_to_six if graph.vertex_count <= 5]
    cyclic = _non_forests(up_to_six)
    return [
        ("three-way mcd agreement", _check_three_way_mcd, cyclic),
        ("mcd >= 2 and mcd <= girth", _check_girth_and_floor, cyclic),
        ("mcd monotone under edge addition", _check_monotone, cyclic),
        ("irreducibility criteria agree", _check_irreducibility, up_to_five),
        ("tutte engines agree", _check_tutte_oracle, all_connected_graphs(9, 8)),
        (
            "three-way mcd agreement on random graphs",
            _check_random_mcd,
            list(range(RANDOM_MCD_GRAPHS)),
        ),
        (
            "tutte engines agree on random graphs",
            _check_random_tutte,
            list(range(1000, 1000 + RANDOM_TUTTE_GRAPHS)),
        ),
        ("poincare degree law", _check_degree_law, up_to_five),
    ]


def _multipartite() -> List[Tuple[str, Callable, list]]:
    covered = covered_color_counts(8)
    rule_cases = [
        (rule, d, 1000 * index + d)
        for index, rule in enumerate(MergeRule)
        for d in (3, 4, 5)
    ]
    return [
        ("covered multipartite graphs are d-heavy", _check_heavy, covered),
        ("K_{2,2} is not 3-heavy", _check_four_cycle_light, [None]),
        ("merge rule gains", _check_rule_sample, rule_cases),
        (
            "merging reaches one box",
            _check_merge_sequences,
            [(counts, d) for counts in covered for d in (3, 4)],
        ),
        ("complete graph components", _check_complete_components, [4, 5]),
        ("triangle components agree", _check_cycle_matches_multipartite, [None]),
        (
            "maximal cellules match components",
            _check_maximal_matches_components,
            covered,
        ),
    ]


def _onion() -> List[Tuple[str, Callable, list]]:
    return [
        ("cycle law", _check_cycle_law, list(range(3, 10))),
        ("girth gap", _check_girth_gap, [None]),
        ("onion closed form", _check_onion_closed_form, onion_parameter_sets()),
    ]


SUITES = {
    "small-exhaustive": _small_exhaustive,
    "multipartite": _multipartite,
    "onion": _onion,
}


@dataclass
class CheckReport:
    """
    Outcome of one or more suites.

    Attributes:
        table (pd.DataFrame): One row per check with suite, check, cases,
            failures and status columns.
        failures (list[dict]): Every failure with its suite, check and witness.
    """

    table: pd.DataFrame
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": self.table.to_dict("records"),
            "failures": self.failures,
        }

    def to_text(self) -> str:
        lines = [self.table.to_string(index=False)]
        for failure in self.failures:
            lines.append(f"FAIL {failure}")
        return "\n".join(lines)


def run_checks(suite: str) -> CheckReport:
    """
    Run a named suite (``small-exhaustive``, ``multipartite``, ``onion`` or ``all``).

    Args:
        suite (str): Suite name.

    Returns:
        CheckReport: Summary table plus every failure.

    Raises:
        ParameterError: For an unknown suite name.
    """
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ParameterError(
            f"unknown suite {suite!r}; use {', '.join(SUITES)} or all"
        )
    settings = get_settings()
    rows, failures = [], []
    for name in names:
        for check, function, cases in SUITES[name]():
            started = time.perf_counter()
            results = Parallel(n_jobs=settings.n_jobs)(
                delayed(_guarded)(function, case)
                for case in tqdm(
                    cases, desc=check, disable=not settings.progress, file=sys.stderr
                )
            )
            found = [
                {"suite": name, "check": check, **failure}
                for case_failures in results
                for failure in case_failures
            ]
            failures.extend(found)
            rows.append(
                {
                    "suite": name,
                    "check": check,
                    "cases": len(cases),
                    "failures": len(found),
                    "status": "PASS" if not found else "FAIL",
                }
            )
            log.info(
                "%s %s/%s: %d cases in %.2fs",
                "✅" if not found else "⚠️",
                name,
                check,
                len(cases),
                time.perf_counter() - started,
            )
    table = pd.DataFrame(
        rows, columns=["suite", "check", "cases", "failures", "status"]
    )
    return CheckReport(table, failures)
