from src.patterns.catalog import (
    PatternFamily,
    PatternId,
    PatternOccurrence,
    classify_by_isomorphism,
    classify_quadruple,
    constrained_pairs,
    first_occurrences,
    occurrence_at,
    occurrence_matches,
    pattern_occurrences,
    plus_edge_patterns,
    reference_graph,
)
