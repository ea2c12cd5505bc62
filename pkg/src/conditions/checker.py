from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from src.graph.core import Graph, Pair, degree_sum, nonadjacent_pairs
from src.patterns.catalog import PatternFamily, PatternOccurrence, first_occurrences
from src.utils.logger import logger


class Precondition(Enum):
    TOO_FEW_VERTICES = "TOO_FEW_VERTICES"
    NO_DEGREE_TWO_VERTEX = "NO_DEGREE_TWO_VERTEX"
    DISCONNECTED = "DISCONNECTED"


class ClassicalKind(Enum):
    DIRAC = "dirac"
    ORE = "ore"
    ORE_TREE = "ore_tree"


@dataclass(frozen=True)
class Violation:
    pair: Pair
    degree_sum: int
    occurrence: Optional[PatternOccurrence] = None


@dataclass(frozen=True)
class ConditionReport:
    name: str
    threshold: int
    vacuous: bool
    violations: tuple[Violation, ...] = ()
    precondition_failures: tuple[Precondition, ...] = ()
    checked_pairs: int = 0

    @property
    def satisfied(self) -> bool:
        return not self.violations and not self.precondition_failures

    def violation_pairs(self) -> set[Pair]:
        return {v.pair for v in self.violations}


def tree_threshold(n: int, k: int) -> int:
    return n - k + 1


def _require_k(k: int):
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def _pattern_violations(G: Graph, family: PatternFamily, threshold: int) -> tuple[list[Violation], int]:
    backing = first_occurrences(G, family)
    violations = []
    for pair in sorted(backing):
        total = degree_sum(G, *pair)
        if total < threshold:
            violations.append(Violation(pair=pair, degree_sum=total, occurrence=backing[pair]))
    return violations, len(backing)


def check_hamilton_condition(G: Graph, family: PatternFamily = PatternFamily.FIVE) -> ConditionReport:
    """
    Pattern-restricted Ore condition for Hamilton cycles: every constrained
    pair needs d(x) + d(y) >= n, plus n >= 4 and a vertex of degree >= 2.
    """
    threshold = G.n
    failures = []
    if G.n < 4:
        failures.append(Precondition.TOO_FEW_VERTICES)
    if G.max_degree() <= 1:
        failures.append(Precondition.NO_DEGREE_TWO_VERTEX)

    violations, checked = _pattern_violations(G, family, threshold)
    report = ConditionReport(
        name=f"theorem1/{family.value}",
        threshold=threshold,
        vacuous=checked == 0,
        violations=tuple(violations),
        precondition_failures=tuple(failures),
        checked_pairs=checked,
    )
    logger.debug(f"{report.name}: {len(violations)} violations over {checked} constrained pairs")
    return report


def check_tree_condition(G: Graph, k: int, family: PatternFamily = PatternFamily.FIVE) -> ConditionReport:
    """
    Pattern-restricted Ore condition for k-ended spanning trees:
    every constrained pair needs d(x) + d(y) >= n - k + 1 and G connected.
    """
    _require_k(k)
    threshold = tree_threshold(G.n, k)
    failures = [] if G.is_connected() else [Precondition.DISCONNECTED]

    violations, checked = _pattern_violations(G, family, threshold)
    report = ConditionReport(
        name=f"theorem2/{family.value}/k={k}",
        threshold=threshold,
        vacuous=checked == 0,
        violations=tuple(violations),
        precondition_failures=tuple(failures),
        checked_pairs=checked,
    )
    logger.debug(f"{report.name}: {len(violations)} violations over {checked} constrained pairs")
    return report


def check_classical(G: Graph, kind: ClassicalKind, k: Optional[int] = None) -> ConditionReport:
    """
    Baselines: Dirac (2*delta >= n), Ore (all nonadjacent pairs >= n) and
    the Ore-type tree condition (all nonadjacent pairs >= n - k + 1, G connected).
    Dirac reports each low-degree vertex v as pair (v, v) with sum 2*d(v).
    """
    n = G.n
    failures = []

    if kind == ClassicalKind.DIRAC:
        threshold = n
        violations = [
            Violation(pair=(v, v), degree_sum=2 * G.degree(v))
            for v in G.vertices()
            if 2 * G.degree(v) < threshold
        ]
        checked = n
    else:
        if kind == ClassicalKind.ORE_TREE:
            if k is None:
                raise ValueError("ORE_TREE needs k")
            _require_k(k)
            threshold = tree_threshold(n, k)
            if not G.is_connected():
                failures.append(Precondition.DISCONNECTED)
        else:
            threshold = n
        pairs = nonadjacent_pairs(G)
        violations = [
            Violation(pair=pair, degree_sum=degree_sum(G, *pair))
            for pair in pairs
            if degree_sum(G, *pair) < threshold
        ]
        checked = len(pairs)

    name = kind.value if kind != ClassicalKind.ORE_TREE else f"{kind.value}/k={k}"
    return ConditionReport(
        name=name,
        threshold=threshold,
        vacuous=checked == 0,
        violations=tuple(violations),
        precondition_failures=tuple(failures),
        checked_pairs=checked,
    )
