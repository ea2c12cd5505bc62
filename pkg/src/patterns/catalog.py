from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

import networkx as nx

from src.graph.core import Graph, GraphError, Pair, VertexSubset, build_graph, induced_subgraph


class PatternId(Enum):
    K12_UNION_K1 = "K_{1,2} ∪ K_1"
    K3_UNION_K1 = "K_3 ∪ K_1"
    K13 = "K_{1,3}"
    K13_PLUS_E = "K_{1,3}+e"
    P4 = "P_4"

    @property
    def display_name(self) -> str:
        return self.value


# Each sorted degree sequence determines its 4-vertex graph up to isomorphism.
DEGREE_SEQUENCES = {
    (0, 1, 1, 2): PatternId.K12_UNION_K1,
    (0, 2, 2, 2): PatternId.K3_UNION_K1,
    (1, 1, 1, 3): PatternId.K13,
    (1, 1, 2, 2): PatternId.P4,
    (1, 2, 2, 3): PatternId.K13_PLUS_E,
}

REFERENCE_EDGES = {
    PatternId.K12_UNION_K1: [(0, 1), (1, 2)],
    PatternId.K3_UNION_K1: [(0, 1), (1, 2), (0, 2)],
    PatternId.K13: [(0, 1), (0, 2), (0, 3)],
    PatternId.K13_PLUS_E: [(0, 1), (0, 2), (0, 3), (2, 3)],
    PatternId.P4: [(0, 1), (1, 2), (2, 3)],
}


def reference_graph(pattern: PatternId) -> Graph:
    return build_graph(4, REFERENCE_EDGES[pattern])


def classify_quadruple(H: Graph) -> Optional[PatternId]:
    """
    Classifies a 4-vertex graph by its sorted degree sequence.
    Returns None when H is none of the five patterns.
    """
    if H.n != 4:
        raise GraphError(f"classify_quadruple needs 4 vertices, got {H.n}")
    return DEGREE_SEQUENCES.get(tuple(sorted(H.degrees())))


def classify_by_isomorphism(H: Graph) -> Optional[PatternId]:
    """Reference classifier: explicit isomorphism test against each pattern."""
    if H.n != 4:
        raise GraphError(f"classify_by_isomorphism needs 4 vertices, got {H.n}")
    h = H.to_networkx()
    for pattern in PatternId:
        if nx.is_isomorphic(h, reference_graph(pattern).to_networkx()):
            return pattern
    return None


def plus_edge_patterns(pattern: PatternId) -> frozenset:
    """
    Patterns obtainable from `pattern` by adding one missing edge.
    """
    base = REFERENCE_EDGES[pattern]
    found = set()
    for pair in combinations(range(4), 2):
        if pair in base:
            continue
        result = classify_quadruple(build_graph(4, base + [pair]))
        if result is not None:
            found.add(result)
    return frozenset(found)


class PatternFamily(Enum):
    FIVE = "five"
    COROLLARY = "corollary"

    @property
    def members(self) -> frozenset:
        return _FAMILY_MEMBERS[self]


_FAMILY_MEMBERS = {
    PatternFamily.FIVE: frozenset(PatternId),
    # K_{1,2} ∪ K_1, (K_{1,2} ∪ K_1) + e, K_{1,3} + e
    PatternFamily.COROLLARY: frozenset(
        {PatternId.K12_UNION_K1, PatternId.K13_PLUS_E} | plus_edge_patterns(PatternId.K12_UNION_K1)
    ),
}


@dataclass(frozen=True)
class PatternOccurrence:
    subset: VertexSubset
    pattern: PatternId
    nonadjacent_pairs: tuple[Pair, ...]


def _subset_degrees(G: Graph, subset: VertexSubset) -> list[int]:
    mask = 0
    for v in subset:
        mask |= 1 << v
    return [(G.neighbor_mask(v) & mask).bit_count() for v in subset]


def occurrence_at(G: Graph, subset: VertexSubset) -> Optional[PatternOccurrence]:
    """Occurrence for one 4-subset, or None if it induces no pattern."""
    pattern = DEGREE_SEQUENCES.get(tuple(sorted(_subset_degrees(G, subset))))
    if pattern is None:
        return None
    pairs = tuple((u, v) for u, v in combinations(subset, 2) if not G.has_edge(u, v))
    return PatternOccurrence(subset=subset, pattern=pattern, nonadjacent_pairs=pairs)


def pattern_occurrences(G: Graph, family: PatternFamily = PatternFamily.FIVE) -> list[PatternOccurrence]:
    """
    One occurrence per 4-subset inducing a pattern of `family`, in
    lexicographic subset order.
    """
    members = family.members
    found = []
    for subset in combinations(range(G.n), 4):
        occurrence = occurrence_at(G, subset)
        if occurrence is not None and occurrence.pattern in members:
            found.append(occurrence)
    return found


def first_occurrences(G: Graph, family: PatternFamily = PatternFamily.FIVE) -> dict[Pair, PatternOccurrence]:
    """Constrained pair -> first occurrence (lexicographic) containing it."""
    backing = {}
    for occurrence in pattern_occurrences(G, family):
        for pair in occurrence.nonadjacent_pairs:
            backing.setdefault(pair, occurrence)
    return backing


def constrained_pairs(G: Graph, family: PatternFamily = PatternFamily.FIVE) -> set[Pair]:
    return set(first_occurrences(G, family))


def occurrence_matches(G: Graph, occurrence: PatternOccurrence) -> bool:
    """Re-checks a stored occurrence against G."""
    if len(occurrence.subset) != 4:
        return False
    try:
        H, _ = induced_subgraph(G, occurrence.subset)
    except GraphError:
        return False
    if classify_quadruple(H) is not occurrence.pattern:
        return False
    expected = {(u, v) for u, v in combinations(occurrence.subset, 2) if not G.has_edge(u, v)}
    return expected == set(occurrence.nonadjacent_pairs)
