import csv
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Optional, TextIO

from tqdm import tqdm

from src.conditions.checker import ClassicalKind, check_classical, check_hamilton_condition, check_tree_condition
from src.construct.certificates import (
    HamiltonCycleCert,
    KTreeCert,
    SmallVerdict,
    verify_cycle,
    verify_tree,
    verify_witness,
)
from src.construct.engine import EngineStats
from src.construct.hamilton import find_hamilton_cycle
from src.construct.trees import build_k_ended_tree
from src.graph.core import Graph
from src.harness.enumerate import MAX_CANONICAL_N, canonical_form
from src.harness.graph6 import parse_graph6, write_graph6
from src.oracle.exact import BudgetExceeded, hamiltonian_exact, min_leaf_spanning_tree_exact
from src.patterns.catalog import PatternFamily
from src.utils.config import SurveyOptions
from src.utils.logger import logger


@dataclass
class SurveyRow:
    graph_id: str
    n: int
    connected: bool
    verdicts: dict = field(default_factory=dict)
    hamiltonian: Optional[bool] = None
    min_leaf_count: Optional[int] = None
    cycle_outcome: str = ""
    tree_outcomes: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    engine_iterations: int = 0
    skipped: Optional[str] = None

    @property
    def failed_flags(self) -> list[str]:
        return [name for name, ok in self.flags.items() if not ok]


@dataclass
class SurveyReport:
    ks: tuple
    rows: list = field(default_factory=list)
    combination_counts: Counter = field(default_factory=Counter)
    satisfied_counts: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)
    thm1_not_ore: list = field(default_factory=list)
    isomorphism_classes: dict = field(default_factory=dict)
    skipped: int = 0
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verdict_columns(ks) -> list[str]:
    columns = ["DIRAC", "ORE", "THM1_FIVE", "THM1_COROLLARY"]
    for k in ks:
        columns += [f"ORE_TREE_k{k}", f"THM2_FIVE_k{k}", f"THM2_COROLLARY_k{k}"]
    return columns


def flag_columns(ks) -> list[str]:
    columns = ["THM1_SOUND", "THM1_CONSTRUCTIVE", "RESTRICTION", "COROLLARY_AGREES", "CONSTRUCT_VALID"]
    for k in ks:
        columns += [f"THM2_SOUND_k{k}", f"THM2_CONSTRUCTIVE_k{k}"]
    return columns


def _cycle_outcome(G: Graph, result) -> tuple[str, bool, bool]:
    """(label, certificate produced, output verified)"""
    if isinstance(result, SmallVerdict):
        if result.certificate is None:
            return "SMALL_NONE", False, True
        return "CYCLE", True, verify_cycle(G, result.certificate)
    if isinstance(result, HamiltonCycleCert):
        return "CYCLE", True, verify_cycle(G, result)
    return result.kind.value, False, verify_witness(G, result)


def evaluate_graph(G: Graph, ks, budget) -> SurveyRow:
    row = SurveyRow(graph_id=write_graph6(G), n=G.n, connected=G.is_connected())

    thm1 = check_hamilton_condition(G, PatternFamily.FIVE)
    thm1_cor = check_hamilton_condition(G, PatternFamily.COROLLARY)
    ore = check_classical(G, ClassicalKind.ORE)
    row.verdicts.update({
        "DIRAC": check_classical(G, ClassicalKind.DIRAC).satisfied,
        "ORE": ore.satisfied,
        "THM1_FIVE": thm1.satisfied,
        "THM1_COROLLARY": thm1_cor.satisfied,
    })

    stats = EngineStats()
    cycle_result = find_hamilton_cycle(G, stats)
    row.cycle_outcome, has_cycle, cycle_valid = _cycle_outcome(G, cycle_result)

    corollary_agrees = (thm1.satisfied == thm1_cor.satisfied
                        and thm1.violation_pairs() == thm1_cor.violation_pairs())
    construct_valid = cycle_valid
    tree_flags = {}
    tree_reports = []
    for k in ks:
        five = check_tree_condition(G, k, PatternFamily.FIVE)
        cor = check_tree_condition(G, k, PatternFamily.COROLLARY)
        row.verdicts[f"ORE_TREE_k{k}"] = check_classical(G, ClassicalKind.ORE_TREE, k).satisfied
        row.verdicts[f"THM2_FIVE_k{k}"] = five.satisfied
        row.verdicts[f"THM2_COROLLARY_k{k}"] = cor.satisfied
        corollary_agrees = corollary_agrees and five.satisfied == cor.satisfied
        tree_reports.append((k, five))

        tree = build_k_ended_tree(G, k, stats)
        if isinstance(tree, KTreeCert):
            row.tree_outcomes[k] = str(tree.leaf_count)
            construct_valid = construct_valid and verify_tree(G, tree)
            built_within_k = tree.leaf_count <= k
        else:
            row.tree_outcomes[k] = tree.kind.value
            construct_valid = construct_valid and verify_witness(G, tree)
            built_within_k = False
        tree_flags[f"THM2_CONSTRUCTIVE_k{k}"] = not five.satisfied or built_within_k

    row.engine_iterations = stats.iterations

    try:
        row.hamiltonian = hamiltonian_exact(G, budget) is not None
        best = min_leaf_spanning_tree_exact(G, budget)
        row.min_leaf_count = None if best is None else best[0]
    except BudgetExceeded as e:
        logger.warning(f"Skipping oracle for {row.graph_id}: {e}")
        row.skipped = str(e)
        return row

    construct_valid = construct_valid and (not has_cycle or row.hamiltonian)
    row.flags.update({
        "THM1_SOUND": not thm1.satisfied or row.hamiltonian,
        "THM1_CONSTRUCTIVE": not thm1.satisfied or has_cycle,
        "RESTRICTION": thm1.violation_pairs() <= ore.violation_pairs(),
        "COROLLARY_AGREES": corollary_agrees,
        "CONSTRUCT_VALID": construct_valid,
    })
    for k, five in tree_reports:
        within = row.min_leaf_count is not None and row.min_leaf_count <= k
        row.flags[f"THM2_SOUND_k{k}"] = not five.satisfied or within
        row.flags[f"THM2_CONSTRUCTIVE_k{k}"] = tree_flags[f"THM2_CONSTRUCTIVE_k{k}"]
    return row


def _evaluate_job(job) -> SurveyRow:
    G, ks, budget = job
    return evaluate_graph(G, ks, budget)


def survey(source: Iterable[Graph], ks=(2, 3, 4), options: Optional[SurveyOptions] = None) -> SurveyReport:
    """
    Evaluates every checker, constructor and oracle on each graph and
    collects consistency failures. Row order follows source order.
    """
    options = options or SurveyOptions(ks=tuple(ks))
    ks = tuple(ks)
    report = SurveyReport(ks=ks)
    started = time.perf_counter()

    graphs = (G for G in source if not options.connected_only or G.is_connected())
    jobs = ((G, ks, options.budget) for G in graphs)

    if options.workers > 1:
        with Pool(options.workers) as pool:
            rows = pool.imap(_evaluate_job, jobs, chunksize=64)
            for row in tqdm(rows, desc="Survey", disable=not options.progress):
                _collect(report, row)
    else:
        for job in tqdm(jobs, desc="Survey", disable=not options.progress):
            _collect(report, _evaluate_job(job))

    if options.dedupe:
        report.isomorphism_classes = _class_counts(report)
    report.elapsed_seconds = time.perf_counter() - started
    logger.info(f"Survey finished: {len(report.rows)} rows, {len(report.counterexamples)} counterexamples, "
                f"{report.skipped} skipped in {report.elapsed_seconds:.1f}s")
    return report


def _collect(report: SurveyReport, row: SurveyRow):
    report.rows.append(row)
    if row.skipped:
        report.skipped += 1
        return
    for name, ok in row.verdicts.items():
        if ok:
            report.satisfied_counts[name] += 1
    key = ",".join(f"{name}={int(row.verdicts[name])}" for name in ("DIRAC", "ORE", "THM1_FIVE")) + \
        f",HAMILTONIAN={int(bool(row.hamiltonian))}"
    report.combination_counts[key] += 1
    if row.verdicts["THM1_FIVE"] and not row.verdicts["ORE"]:
        report.thm1_not_ore.append(row.graph_id)
    if row.failed_flags:
        logger.error(f"Counterexample {row.graph_id}: {', '.join(row.failed_flags)}")
        report.counterexamples.append((row.graph_id, row.failed_flags))


def _class_counts(report: SurveyReport) -> dict:
    classes, thm1, thm1_not_ore = set(), set(), set()
    not_ore_ids = set(report.thm1_not_ore)
    for row in report.rows:
        if row.n > MAX_CANONICAL_N:
            continue
        form = canonical_form(parse_graph6(row.graph_id))
        classes.add(form)
        if row.verdicts.get("THM1_FIVE"):
            thm1.add(form)
        if row.graph_id in not_ore_ids:
            thm1_not_ore.add(form)
    return {"classes": len(classes), "thm1_classes": len(thm1), "thm1_not_ore_classes": len(thm1_not_ore)}


def csv_header(ks) -> list[str]:
    return (["graph6", "n", "connected"] + verdict_columns(ks) + ["hamiltonian", "min_leaf_count", "cycle_outcome"]
            + [f"tree_k{k}" for k in ks] + flag_columns(ks) + ["skipped"])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_survey_csv(report: SurveyReport, stream: TextIO):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(csv_header(report.ks))
    for row in report.rows:
        writer.writerow(
            [row.graph_id, row.n, _cell(row.connected)]
            + [_cell(row.verdicts.get(name)) for name in verdict_columns(report.ks)]
            + [_cell(row.hamiltonian), _cell(row.min_leaf_count), row.cycle_outcome]
            + [row.tree_outcomes.get(k, "") for k in report.ks]
            + [_cell(row.flags.get(name)) for name in flag_columns(report.ks)]
            + [row.skipped or ""]
        )
