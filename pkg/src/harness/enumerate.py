import random
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional

from src.graph.core import Graph, build_graph
from src.harness.graph6 import pair_order, write_graph6

MAX_ENUMERATION_N = 6
MAX_CANONICAL_N = 8
CANONICAL_CACHE_SIZE = 4096


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """
    Every labeled simple graph on n vertices, once, in edge-bitmask order
    (bit k of the mask is the k-th pair in graph6 column order).
    """
    if n < 0 or n > MAX_ENUMERATION_N:
        raise ValueError(f"Labeled enumeration is limited to 0 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = list(pair_order(n))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, rows)


@lru_cache(maxsize=CANONICAL_CACHE_SIZE)
def canonical_form(G: Graph) -> bytes:
    """
    graph6 bytes of the relabeling whose upper-triangle bitstring is
    lexicographically smallest; equal forms iff isomorphic graphs.
    """
    n = G.n
    if n > MAX_CANONICAL_N:
        raise ValueError(f"canonical_form is limited to n <= {MAX_CANONICAL_N}, got {n}")
    pairs = list(pair_order(n))
    best_value, best_perm = None, tuple(range(n))
    for perm in permutations(range(n)):
        value = 0
        for u, v in pairs:
            value = value << 1 | G.has_edge(perm[u], perm[v])
        if best_value is None or value < best_value:
            best_value, best_perm = value, perm
    relabeled = build_graph(n, [(u, v) for u, v in pairs if G.has_edge(best_perm[u], best_perm[v])])
    return write_graph6(relabeled).encode("ascii")


def random_connected_graph(n: int, p: float, rng: Optional[random.Random] = None) -> Graph:
    """Random spanning tree on shuffled labels plus each other pair with probability p."""
    rng = rng or random.Random()
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_connected_graphs(count: int, n_values, seed: int = 0) -> Iterator[Graph]:
    rng = random.Random(seed)
    n_values = list(n_values)
    for _ in range(count):
        yield random_connected_graph(rng.choice(n_values), rng.uniform(0.1, 0.9), rng)
