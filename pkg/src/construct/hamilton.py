from typing import Optional, Union

from src.conditions.checker import Precondition
from src.construct.certificates import (
    HamiltonCycleCert,
    InternalInvariantBreach,
    SmallVerdict,
    ViolationWitness,
    WitnessKind,
)
from src.construct.engine import ClosedCycle, EngineStats, PathState, run_path_engine
from src.graph.core import Graph, connected_components, degree_sum, induced_subgraph
from src.patterns.catalog import PatternId, classify_quadruple
from src.utils.logger import logger

HamiltonResult = Union[HamiltonCycleCert, ViolationWitness, SmallVerdict]

# Shapes of {x_1, x_{i-1}, x_i, x_p} when x_1 has a second neighbour
ROTATION_PATTERNS = frozenset({
    PatternId.K12_UNION_K1,
    PatternId.K13,
    PatternId.K3_UNION_K1,
    PatternId.K13_PLUS_E,
})


def small_verdict(G: Graph) -> SmallVerdict:
    """
    n <= 3: a vertex is a cycle of order 1, an edge a cycle of order 2,
    and three vertices need a triangle.
    """
    if G.n > 3:
        raise ValueError(f"small_verdict handles n <= 3, got {G.n}")
    seq = tuple(range(G.n))
    if G.n == 0:
        closed = False
    elif G.n == 1:
        closed = True
    else:
        closed = G.edge_count == G.n * (G.n - 1) // 2
    return SmallVerdict(n=G.n, certificate=HamiltonCycleCert(seq) if closed else None)


def _pattern_witness(G: Graph, subset, pair, threshold: int, expected, kind=WitnessKind.PATTERN_PAIR) -> ViolationWitness:
    subset = tuple(sorted(subset))
    H, _ = induced_subgraph(G, subset)
    pattern = classify_quadruple(H)
    if pattern not in expected:
        raise InternalInvariantBreach(f"Subset {subset} induces {pattern}, expected one of {sorted(p.name for p in expected)}")
    pair = tuple(sorted(pair))
    total = degree_sum(G, *pair)
    if total >= threshold:
        raise InternalInvariantBreach(f"Pair {pair} has degree sum {total} >= threshold {threshold}")
    return ViolationWitness(
        kind=kind,
        threshold=threshold,
        subset=subset,
        pattern=pattern,
        pair=pair,
        degree_sum=total,
    )


def extract_witness(G: Graph, path: PathState, threshold: Optional[int] = None) -> ViolationWitness:
    """
    Turns a stuck maximal path into a pattern/pair witness.

    Requires: P maximal, x_1 x_p not an edge, no crossing chord, p >= 3.
    With d(x_1) >= 2 the witness is {x_1, x_{i-1}, x_i, x_p} for the first
    chord x_1 x_i; otherwise both ends are leaves and the witness is
    {x_1, x_2, x_3, x_p}, or a claw at x_2 when p = 3.
    """
    if threshold is None:
        threshold = G.n
    seq = path.vertices
    p = len(seq)
    if p < 3 or G.has_edge(seq[0], seq[-1]):
        raise InternalInvariantBreach(f"Path {seq} is not a stuck path")

    if G.degree(seq[0]) < 2 and G.degree(seq[-1]) >= 2:
        seq = seq[::-1]
    x1, xp = seq[0], seq[-1]

    if G.degree(x1) >= 2:
        for i in range(3, p + 1):
            if G.has_edge(x1, seq[i - 1]):
                break
        else:
            raise InternalInvariantBreach(f"x_1={x1} has no chord on {seq}")
        logger.debug(f"Witness from chord x_1 x_{i} on path of order {p}")
        return _pattern_witness(G, (x1, seq[i - 2], seq[i - 1], xp), (x1, xp), threshold, ROTATION_PATTERNS)

    if p >= 5:
        return _pattern_witness(G, (x1, seq[1], seq[2], xp), (x1, xp), threshold, {PatternId.K12_UNION_K1})
    if p == 4:
        return _pattern_witness(G, seq, (x1, xp), threshold, {PatternId.P4})

    x2 = seq[1]
    outside = G.neighbor_mask(x2) & ~path.mask()
    if not outside:
        raise InternalInvariantBreach(f"Middle vertex {x2} of {seq} has no outside neighbour")
    y = (outside & -outside).bit_length() - 1
    return _pattern_witness(G, (x2, y, x1, xp), (x1, xp), threshold, {PatternId.K13})


def disconnected_witness(G: Graph, threshold: int) -> ViolationWitness:
    """
    Q = x v y inside the component of some v with d(v) >= 2, plus a vertex
    z from another component; the pair (v, z) is nonadjacent.
    """
    blocks = connected_components(G)
    centre = next((v for v in G.vertices() if G.degree(v) >= 2), None)
    if centre is None:
        return ViolationWitness(
            kind=WitnessKind.PRECONDITION,
            threshold=threshold,
            label=Precondition.NO_DEGREE_TWO_VERTEX,
        )
    x, y = G.neighbors(centre)[:2]
    home = next(block for block in blocks if centre in block)
    z = min(v for v in G.vertices() if v not in home)
    return _pattern_witness(
        G,
        (x, centre, y, z),
        (centre, z),
        threshold,
        {PatternId.K12_UNION_K1, PatternId.K3_UNION_K1},
        kind=WitnessKind.DISCONNECTED_PATTERN,
    )


def find_hamilton_cycle(G: Graph, stats: Optional[EngineStats] = None) -> HamiltonResult:
    """
    Returns a Hamilton cycle certificate, or a witness that the
    pattern-restricted degree condition fails. Whenever the condition
    holds the result is a certificate.
    """
    if G.n <= 3:
        return small_verdict(G)
    if not G.is_connected():
        return disconnected_witness(G, threshold=G.n)

    outcome = run_path_engine(G, start=0, stats=stats)
    if isinstance(outcome, ClosedCycle):
        if len(outcome.sequence) != G.n:
            raise InternalInvariantBreach(f"Closed cycle {outcome.sequence} does not span a connected graph")
        return HamiltonCycleCert(outcome.sequence)
    logger.debug(f"Engine stuck on path {outcome.path.vertices}")
    return extract_witness(G, outcome.path, threshold=G.n)
