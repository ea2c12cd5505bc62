import sys
import os
import argparse
# Add project root to path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.utils.logger import logger, set_verbose
from src.utils.config import load_config, budget_from_config, survey_options_from_config
from src.graph.core import Graph
from src.harness.edgelist import parse_edge_list
from src.harness.graph6 import looks_like_graph6, read_graph6_lines

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def parse_graphs(text: str, input_format: str = "auto") -> list[Graph]:
    """
    graph6 (one graph per line) or a single edge list. "auto" tries graph6
    when the first line has only bytes 63..126 and no spaces.
    """
    if input_format == "g6" or (input_format == "auto" and looks_like_graph6(text)):
        return list(read_graph6_lines(text))
    return [parse_edge_list(text)]


def load_graph(args) -> Graph:
    graphs = parse_graphs(read_text(args.input), args.input_format)
    if not graphs:
        raise ValueError(f"No graph found in {args.input}")
    if len(graphs) > 1:
        logger.warning(f"{args.input} holds {len(graphs)} graphs; using the first")
    return graphs[0]


def emit(args, template_name: str, payload: dict):
    from src.reporting.renderer import render, render_json

    if args.format == "json":
        sys.stdout.write(render_json(payload))
    else:
        sys.stdout.write(render(template_name, payload))


def parse_ks(text: str) -> list[int]:
    try:
        ks = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--k expects a comma-separated list of integers, got {text!r}")
    if not ks or min(ks) < 2:
        raise argparse.ArgumentTypeError(f"every k must be at least 2, got {text!r}")
    return ks


def cmd_check(args) -> int:
    from src.conditions.checker import check_hamilton_condition, check_tree_condition
    from src.patterns.catalog import PatternFamily
    from src.reporting.renderer import condition_payload

    if args.theorem == 2 and args.k is None:
        logger.error("--k is required with --theorem 2")
        return EXIT_USAGE
    if args.theorem == 1 and args.k is not None:
        logger.error("--k only applies to --theorem 2")
        return EXIT_USAGE
    if args.k is not None and args.k < 2:
        logger.error(f"--k must be at least 2, got {args.k}")
        return EXIT_USAGE

    graph = load_graph(args)
    family = PatternFamily(args.family)
    if args.theorem == 1:
        report = check_hamilton_condition(graph, family)
    else:
        report = check_tree_condition(graph, args.k, family)
    emit(args, "condition.txt.j2", condition_payload(report))
    return EXIT_OK if report.satisfied else EXIT_NEGATIVE


def cmd_hamilton(args) -> int:
    from src.construct.certificates import HamiltonCycleCert, SmallVerdict
    from src.construct.hamilton import find_hamilton_cycle
    from src.reporting.renderer import hamilton_payload

    graph = load_graph(args)
    result = find_hamilton_cycle(graph)
    emit(args, "hamilton.txt.j2", hamilton_payload(result))
    if isinstance(result, HamiltonCycleCert) or (isinstance(result, SmallVerdict) and result.hamiltonian):
        return EXIT_OK
    return EXIT_NEGATIVE


def cmd_tree(args) -> int:
    from src.construct.certificates import KTreeCert
    from src.construct.trees import build_k_ended_tree
    from src.reporting.renderer import tree_payload

    if args.k < 2:
        logger.error(f"--k must be at least 2, got {args.k}")
        return EXIT_USAGE
    graph = load_graph(args)
    result = build_k_ended_tree(graph, args.k)
    emit(args, "tree.txt.j2", tree_payload(result, args.k))
    return EXIT_OK if isinstance(result, KTreeCert) else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    from src.oracle.exact import hamiltonian_exact, longest_path_exact, min_leaf_spanning_tree_exact

    budget = budget_from_config(load_config(args.config))
    graph = load_graph(args)
    payload = {"kind": args.kind, "sequence": None, "order": None, "leaf_count": None, "edges": None}
    if args.kind == "hamilton":
        cycle = hamiltonian_exact(graph, budget)
        payload["sequence"] = None if cycle is None else list(cycle)
        positive = cycle is not None
    elif args.kind == "minleaf":
        best = min_leaf_spanning_tree_exact(graph, budget)
        if best is not None:
            payload["leaf_count"], payload["edges"] = best[0], [list(e) for e in best[1]]
        positive = best is not None
    else:
        path = longest_path_exact(graph, budget)
        payload["sequence"], payload["order"] = list(path.vertices), path.order
        positive = True
    emit(args, "oracle.txt.j2", payload)
    return EXIT_OK if positive else EXIT_NEGATIVE


def cmd_survey(args) -> int:
    from src.harness.enumerate import MAX_ENUMERATION_N, all_labeled_graphs, random_connected_graphs
    from src.harness.survey import survey, write_survey_csv
    from src.reporting.renderer import survey_payload

    if args.format == "json" and not args.out:
        logger.error("survey --format json needs --out; without it stdout carries the CSV")
        return EXIT_USAGE

    config = load_config(args.config)
    options = survey_options_from_config(
        config,
        ks=args.k,
        workers=args.workers,
        connected_only=True if args.connected_only else None,
        dedupe=True if args.dedupe else None,
        progress=True if args.progress else None,
    )

    # Phase 1: Input
    logger.info("=== Phase 1: Input ===")
    if args.input:
        source = parse_graphs(read_text(args.input), args.input_format)
        logger.info(f"Loaded {len(source)} graphs from {args.input}")
    elif args.random:
        if args.n is None:
            logger.error("--random needs --n")
            return EXIT_USAGE
        source = random_connected_graphs(args.random, [args.n], seed=args.seed)
        logger.info(f"Sampling {args.random} random connected graphs on {args.n} vertices (seed {args.seed})")
    elif args.n is not None:
        if args.n > MAX_ENUMERATION_N:
            logger.error(f"Built-in enumeration stops at n = {MAX_ENUMERATION_N}; use --input with a graph6 file")
            return EXIT_USAGE
        source = all_labeled_graphs(args.n)
        logger.info(f"Enumerating all labeled graphs on {args.n} vertices")
    else:
        logger.error("survey needs --n or --input")
        return EXIT_USAGE

    # Phase 2: Survey
    logger.info("=== Phase 2: Survey ===")
    report = survey(source, options.ks, options)

    # Phase 3: Report
    logger.info("=== Phase 3: Report ===")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            write_survey_csv(report, f)
        logger.info(f"CSV written to {args.out}")
        emit(args, "survey.txt.j2", survey_payload(report, args.out))
    else:
        write_survey_csv(report, sys.stdout)

    if not report.passed:
        logger.error(f"Final Result: {len(report.counterexamples)} counterexamples.")
        return EXIT_NEGATIVE
    logger.info("Final Result: no counterexamples.")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="PatternOre: pattern-restricted Ore conditions, Hamilton cycles and k-ended trees")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--config", help="JSON config file (default: patternore_config.json at the project root)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, positional=True):
        if positional:
            p.add_argument("input", help="Graph file (graph6 or edge list), '-' for stdin")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--g6", dest="input_format", action="store_const", const="g6", help="Force graph6 input")
        group.add_argument("--edges", dest="input_format", action="store_const", const="edges", help="Force edge-list input")
        p.set_defaults(input_format="auto")
        p.add_argument("--format", choices=["text", "json"], default="text", help="Output format")

    check = sub.add_parser("check", help="Check the degree-sum hypothesis")
    check.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    check.add_argument("--k", type=int, help="Leaf bound (theorem 2 only)")
    check.add_argument("--family", choices=["five", "corollary"], default="five")
    add_input(check)
    check.set_defaults(handler=cmd_check)

    hamilton = sub.add_parser("hamilton", help="Construct a Hamilton cycle or a violation witness")
    add_input(hamilton)
    hamilton.set_defaults(handler=cmd_hamilton)

    tree = sub.add_parser("tree", help="Construct a k-ended spanning tree or a violation witness")
    tree.add_argument("--k", type=int, required=True)
    add_input(tree)
    tree.set_defaults(handler=cmd_tree)

    oracle = sub.add_parser("oracle", help="Exact brute-force answers for small graphs")
    oracle.add_argument("kind", choices=["hamilton", "minleaf", "longestpath"])
    add_input(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    surv = sub.add_parser("survey", help="Validate the theorems over a graph corpus and write CSV")
    surv.add_argument("--n", type=int, help="Enumerate all labeled graphs on n <= 6 vertices")
    surv.add_argument("--input", help="graph6 corpus file ('-' for stdin)")
    surv.add_argument("--random", type=int, help="Sample this many random connected graphs on --n vertices")
    surv.add_argument("--seed", type=int, default=0)
    surv.add_argument("--k", type=parse_ks, help="Comma-separated leaf bounds, e.g. 2,3,4")
    surv.add_argument("--connected-only", action="store_true")
    surv.add_argument("--dedupe", action="store_true", help="Count isomorphism classes (n <= 8)")
    surv.add_argument("--workers", type=int, help="Worker processes")
    surv.add_argument("--progress", action="store_true", help="Show a progress bar")
    surv.add_argument("--out", help="CSV output path (default: stdout)")
    add_input(surv, positional=False)
    surv.set_defaults(handler=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    set_verbose(args.verbose)

    try:
        return args.handler(args)
    except (OSError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
