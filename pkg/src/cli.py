"""
Command-line front end.

Usage examples:

    graphvar mcd --gen cycle:7 --method all
    graphvar components --gen complete:4 -d 3
    graphvar irreducible --gen cycle:4 --d-max 6
    graphvar poincare --input graph.json -d 2 --format text
    graphvar check onion

Results go to standard output as JSON (default) or text. Errors go to
standard error as a single JSON object; the exit code is 1 for domain errors
and 2 for usage errors. Logging also goes to standard error.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from src.cellules import (
    SetPartition,
    cellule_dimension,
    cellule_order_relations,
    components_complete,
    components_cycle,
    components_multipartite,
    delta,
    dimension_profile,
    is_d_heavy,
    maximal_cellules_known,
)
from src.config import get_settings
from src.errors import GraphVarError, HypothesisError, ParameterError, UsageError
from src.families import parse_family_spec
from src.formats.graph_json import graph_to_dict, load_graph, parse_graph
from src.graph import (
    INFINITY,
    Graph,
    girth,
    is_cycle_graph,
    is_forest,
    mask_to_indices,
    verified_coloring,
)
from src.mcd import irreducibility_range, mcd
from src.poincare import is_irreducible_poincare, poincare_polynomial
from src.services.checks import SUITES, run_checks
from src.tutte import tutte_polynomial

log = logging.getLogger(__name__)

Result = Tuple[dict, str]


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _infinity_or(value):
    return "infinity" if value is INFINITY else value


def _require_d(args) -> int:
    if args.d is None:
        raise UsageError(f"{args.command} requires -d")
    return args.d


def _parse_partition(text: str, graph: Graph) -> SetPartition:
    try:
        labels = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(
            f"--partition must be a JSON list such as [0,0,1], got {text!r}"
        )
    if not isinstance(labels, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in labels
    ):
        raise UsageError("--partition must be a JSON list of block labels")
    if len(labels) != graph.vertex_count:
        raise ParameterError(
            f"--partition has {len(labels)} labels for {graph.vertex_count} vertices"
        )
    return SetPartition.from_labels(labels)


def _load_input(args) -> Graph:
    if args.input is not None:
        return load_graph(args.input)
    if args.graph is not None:
        return parse_graph(args.graph)
    if args.gen is not None:
        return parse_family_spec(args.gen)
    raise UsageError(f"{args.command} needs one of --input, --graph or --gen")


def _cmd_gen(args, graph: Graph) -> Result:
    payload = graph_to_dict(graph)
    return payload, json.dumps(payload)


def _cmd_mcd(args, graph: Graph) -> Result:
    result = mcd(graph, args.method)
    text = f"mcd = {_infinity_or(result.value)} ({result.method})"
    if result.edges is not None:
        witness = [list(graph.edges[i]) for i in mask_to_indices(result.edges)]
        text += f"\nwitness edges: {witness}"
    return result.to_json(), text


def _cmd_girth(args, graph: Graph) -> Result:
    value = _infinity_or(girth(graph))
    return {"girth": value}, f"girth = {value}"


def _cmd_tutte(args, graph: Graph) -> Result:
    polynomial = tutte_polynomial(graph, args.engine)
    payload = {
        "tutte": polynomial.to_json(),
        "spanning_trees": str(polynomial.evaluate(1, 1)),
    }
    return payload, f"T(x, y) = {polynomial}"


def _cmd_poincare(args, graph: Graph) -> Result:
    d = _require_d(args)
    polynomial = poincare_polynomial(graph, d)
    irreducible = is_irreducible_poincare(graph, d, polynomial)
    payload = {
        "d": d,
        "poincare": polynomial.to_json(),
        "degree": polynomial.degree,
        "leading_coefficient": str(polynomial.leading_coefficient),
        "irreducible": irreducible,
    }
    return payload, f"P(q) = {polynomial}\nirreducible: {irreducible}"


def _cmd_irreducible(args, graph: Graph) -> Result:
    if args.d_max is not None:
        verdicts = irreducibility_range(graph, args.d_max)
    else:
        verdicts = irreducibility_range(graph, _require_d(args))[-1:]
    payload = {"range": [{"d": d, "irreducible": ok} for d, ok in verdicts]}
    text = "\n".join(
        f"d={d}: {'irreducible' if ok else 'reducible'}" for d, ok in verdicts
    )
    return payload, text


def _cmd_cellule_dim(args, graph: Graph) -> Result:
    d = _require_d(args)
    if args.partition is None:
        top, count = dimension_profile(graph, d)
        payload = {"d": d, "max_dimension": top, "maximizers": count}
        return payload, f"max cellule dimension = {top} ({count} partitions)"
    partition = _parse_partition(args.partition, graph)
    payload = {
        "d": d,
        "partition": partition.to_json(),
        "delta": delta(graph, partition),
        "dimension": cellule_dimension(graph, partition, d),
    }
    return payload, f"dim cellule {partition} = {payload['dimension']}"


def _components(graph: Graph, d: int) -> Tuple[str, List[SetPartition]]:
    if graph.vertex_count == 0:
        raise ParameterError("components needs at least one vertex")
    coloring = verified_coloring(graph)
    if is_forest(graph):
        return "forest", [SetPartition.discrete(graph.vertex_count)]
    if is_cycle_graph(graph):
        return "cycle", components_cycle(graph.vertex_count, d)
    if coloring is not None:
        if coloring.vertex_count == coloring.color_count:
            return "complete", components_complete(graph.vertex_count, d)
        return "complete multipartite", components_multipartite(coloring, d)
    raise HypothesisError(
        "components are classified only for forests, cycles, complete and "
        "complete multipartite graphs"
    )


def _cmd_components(args, graph: Graph) -> Result:
    d = _require_d(args)
    family, found = _components(graph, d)
    payload = {
        "family": family,
        "d": d,
        "count": len(found),
        "components": [p.to_json() for p in found],
    }
    text = f"{family}, d={d}: {len(found)} components\n" + "\n".join(
        str(p) for p in found
    )
    return payload, text


def _cmd_order(args, graph: Graph) -> Result:
    d = _require_d(args)
    pi = _parse_partition(args.partition, graph) if args.partition else None
    relations = cellule_order_relations(graph, d, pi=pi)
    maximal = maximal_cellules_known(graph, d)
    payload = {
        "d": d,
        "relations": [relation.to_json() for relation in relations],
        "maximal": maximal.to_json(),
    }
    lines = [
        f"{r.pi} -> {r.sigma}: {r.status.value} {r.certificate}".rstrip()
        for r in relations
    ]
    lines.append(
        f"maximal ({maximal.exactness.value}): "
        + ", ".join(str(p) for p in maximal.partitions)
    )
    return payload, "\n".join(lines)


def _cmd_d_heavy(args, graph: Graph) -> Result:
    d = _require_d(args)
    heavy = is_d_heavy(graph, d)
    return {"d": d, "d_heavy": heavy}, f"{d}-heavy: {heavy}"


GRAPH_COMMANDS: Dict[str, Callable] = {
    "gen": _cmd_gen,
    "mcd": _cmd_mcd,
    "girth": _cmd_girth,
    "tutte": _cmd_tutte,
    "poincare": _cmd_poincare,
    "irreducible": _cmd_irreducible,
    "cellule-dim": _cmd_cellule_dim,
    "components": _cmd_components,
    "order": _cmd_order,
    "d-heavy": _cmd_d_heavy,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="graphvar",
        description="Combinatorial invariants of graph picture spaces.",
    )
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
    subparsers.required = True

    for name in GRAPH_COMMANDS:
        sub = subparsers.add_parser(name)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", help="path to a graph JSON file")
        source.add_argument("--graph", help="inline graph JSON")
        source.add_argument("--gen", help="generator spec such as cycle:7")
        sub.add_argument("-d", type=int, default=None, help="ambient dimension")
        sub.add_argument("--format", choices=["json", "text"], default="json")
        if name == "mcd":
            sub.add_argument(
                "--method", choices=["brute", "flats", "ears", "all"], default="all"
            )
        if name == "tutte":
            sub.add_argument(
                "--engine",
                choices=["deletion-contraction", "corank-nullity"],
                default="deletion-contraction",
            )
        if name == "irreducible":
            sub.add_argument("--d-max", type=int, default=None)
        if name in ("cellule-dim", "order"):
            sub.add_argument("--partition", help="block labels, e.g. [0,0,1]")

    check = subparsers.add_parser("check")
    check.add_argument("suite", choices=list(SUITES) + ["all"])
    check.add_argument("--format", choices=["json", "text"], default="json")
    return parser


def _emit_error(error: GraphVarError, stderr: TextIO) -> None:
    stderr.write(json.dumps(error.to_json()) + "\n")


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Execute one command.

    Args:
        argv (list[str], optional): Arguments without the program name.
        stdout (TextIO, optional): Result stream; defaults to sys.stdout.
        stderr (TextIO, optional): Error and log stream; defaults to sys.stderr.

    Returns:
        int: 0 on success, 1 on domain errors or failed checks, 2 on usage errors.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        settings = get_settings()
        logging.basicConfig(
            level=settings.log_level, stream=stderr, format="%(message)s", force=True
        )
        args = build_parser().parse_args(argv)
        if args.command == "check":
            report = run_checks(args.suite)
            output = (
                json.dumps(report.to_json(), indent=2)
                if args.format == "json"
                else report.to_text()
            )
            stdout.write(output + "\n")
            return 0 if report.passed else 1
        graph = _load_input(args)
        payload, text = GRAPH_COMMANDS[args.command](args, graph)
    except UsageError as error:
        _emit_error(error, stderr)
        return 2
    except GraphVarError as error:
        _emit_error(error, stderr)
        return 1
    except SystemExit as exit_request:
        # --help
        return int(exit_request.code or 0)
    rendered = json.dumps(payload, indent=2) if args.format == "json" else text
    stdout.write(rendered + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
