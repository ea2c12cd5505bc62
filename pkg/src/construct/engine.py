from dataclasses import dataclass, field
from typing import Optional, Union

from src.construct.certificates import InternalInvariantBreach, NoAttachment
from src.graph.core import Graph, subset_mask
from src.utils.logger import logger


@dataclass(frozen=True)
class PathState:
    """A path x_1 ... x_p, oriented from x_1 to x_p."""
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> "PathState":
        return PathState(self.vertices[::-1])

    def mask(self) -> int:
        return subset_mask(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return [(min(a, b), max(a, b)) for a, b in zip(self.vertices, self.vertices[1:])]


@dataclass(frozen=True)
class ClosedCycle:
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class LongerPath:
    path: PathState


@dataclass(frozen=True)
class Stuck:
    path: PathState


RotationOutcome = Union[ClosedCycle, LongerPath, Stuck]


@dataclass
class EngineStats:
    iterations: int = 0
    closures: int = 0
    rotations: int = 0
    absorptions: int = 0
    # adjacency tests made while searching for crossing chords
    chord_checks: int = 0


def path_problems(G: Graph, path: PathState) -> list[str]:
    seq = path.vertices
    problems = []
    if len(set(seq)) != len(seq):
        problems.append("path repeats a vertex")
    if any(not 0 <= v < G.n for v in seq):
        problems.append("path leaves the vertex range")
        return problems
    for a, b in zip(seq, seq[1:]):
        if not G.has_edge(a, b):
            problems.append(f"consecutive vertices {a},{b} not adjacent")
    return problems


def is_maximal(G: Graph, path: PathState) -> bool:
    if not path.vertices:
        return G.n == 0
    on = path.mask()
    return not (G.neighbor_mask(path.first) & ~on) and not (G.neighbor_mask(path.last) & ~on)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def extend_to_maximal(G: Graph, path: PathState) -> PathState:
    """
    Greedily extends the tail, then the head, always with the smallest
    unused neighbour.
    """
    seq = list(path.vertices)
    on = subset_mask(seq)

    free = G.neighbor_mask(seq[-1]) & ~on
    while free:
        v = _lowest(free)
        seq.append(v)
        on |= 1 << v
        free = G.neighbor_mask(v) & ~on

    head = []
    free = G.neighbor_mask(seq[0]) & ~on
    while free:
        v = _lowest(free)
        head.append(v)
        on |= 1 << v
        free = G.neighbor_mask(v) & ~on

    return PathState(tuple(reversed(head)) + tuple(seq))


def grow_maximal_path(G: Graph, start: int = 0) -> PathState:
    if not 0 <= start < G.n:
        raise ValueError(f"Start vertex {start} out of range for n={G.n}")
    return extend_to_maximal(G, PathState((start,)))


def absorb_into_cycle(G: Graph, cycle: tuple[int, ...]) -> PathState:
    """
    Opens the cycle next to y_1 and appends y_2, where y_1 y_2 is the
    lexicographically smallest edge leaving the cycle.
    """
    on = subset_mask(cycle)
    for y1 in sorted(cycle):
        outside = G.neighbor_mask(y1) & ~on
        if outside:
            y2 = _lowest(outside)
            j = cycle.index(y1)
            logger.debug(f"Absorbing {y2} through edge {y1}-{y2}")
            return PathState(cycle[j + 1:] + cycle[:j + 1] + (y2,))
    raise NoAttachment(f"No edge leaves the cycle {cycle}")


def find_crossing_chord(G: Graph, path: PathState, stats: Optional[EngineStats] = None) -> Optional[int]:
    """
    Smallest 1-based i >= 3 with x_1 x_i and x_{i-1} x_p both edges.
    """
    seq = path.vertices
    x1, xp = seq[0], seq[-1]
    for i in range(3, len(seq)):
        if stats is not None:
            stats.chord_checks += 1
        if G.has_edge(x1, seq[i - 1]) and G.has_edge(seq[i - 2], xp):
            return i
    return None


def try_rotate_or_close(G: Graph, path: PathState, stats: Optional[EngineStats] = None) -> RotationOutcome:
    seq = path.vertices
    p = len(seq)

    if p <= 2 or G.has_edge(seq[0], seq[-1]):
        cycle = seq
        if stats is not None:
            stats.closures += 1
    else:
        i = find_crossing_chord(G, path, stats)
        if i is None:
            return Stuck(path)
        # x_1 ... x_{i-1} x_p x_{p-1} ... x_i x_1
        cycle = seq[:i - 1] + seq[i - 1:][::-1]
        logger.debug(f"Rotating at i={i}: {cycle}")
        if stats is not None:
            stats.rotations += 1

    if len(cycle) == G.n:
        return ClosedCycle(cycle)
    try:
        longer = absorb_into_cycle(G, cycle)
    except NoAttachment:
        return ClosedCycle(cycle)
    if stats is not None:
        stats.absorptions += 1
    return LongerPath(longer)


def run_path_engine(G: Graph, start: int = 0, stats: Optional[EngineStats] = None) -> Union[ClosedCycle, Stuck]:
    """
    Grows a maximal path and applies closures, rotations and absorptions
    until a cycle spans the component of `start` or no move applies.
    Path order strictly increases between iterations.
    """
    path = grow_maximal_path(G, start)
    iterations = 0
    while True:
        iterations += 1
        if stats is not None:
            stats.iterations += 1
        if iterations > G.n:
            raise InternalInvariantBreach(f"Engine exceeded {G.n} iterations")
        outcome = try_rotate_or_close(G, path, stats)
        if isinstance(outcome, LongerPath):
            path = extend_to_maximal(G, outcome.path)
            continue
        return outcome
