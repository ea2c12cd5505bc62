from itertools import combinations
from typing import Iterable

import networkx as nx

# Sorted, strictly increasing vertex ids
VertexSubset = tuple[int, ...]
Pair = tuple[int, int]


class GraphError(ValueError):
    pass


class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is kept as one bitset (int) per vertex, so pair queries are
    O(1) and neighbourhood intersections are a single `&`.
    """

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise GraphError(f"Expected {n} adjacency rows, got {len(rows)}")
        self._n = n
        self._rows = rows

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._rows[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return mask_to_list(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[Pair]:
        return [(u, v) for u in range(self._n) for v in mask_to_list(self._rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_connected(self) -> bool:
        # the null graph has no spanning tree, so it does not count as connected
        return self._n > 0 and len(connected_components(self)) == 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self.edges())
        return g

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __reduce__(self):
        return Graph, (self._n, self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, edges: Iterable[Pair]) -> Graph:
    """
    Builds a graph from an edge list. Duplicates collapse; loops and
    out-of-range ids raise GraphError.
    """
    if n < 0:
        raise GraphError(f"Vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"Loop at vertex {u} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def from_networkx(g: nx.Graph) -> Graph:
    """Relabels nodes to 0..n-1 in sorted node order."""
    index = {node: i for i, node in enumerate(sorted(g.nodes()))}
    return build_graph(len(index), ((index[u], index[v]) for u, v in g.edges()))


def make_subset(G: Graph, ids: Iterable[int]) -> VertexSubset:
    subset = tuple(sorted(set(ids)))
    validate_subset(G, subset)
    return subset


def validate_subset(G: Graph, subset: VertexSubset):
    for i, v in enumerate(subset):
        if not 0 <= v < G.n:
            raise GraphError(f"Vertex {v} out of range for n={G.n}")
        if i and subset[i - 1] >= v:
            raise GraphError(f"Subset {subset} is not strictly increasing")


def subset_mask(subset: Iterable[int]) -> int:
    mask = 0
    for v in subset:
        mask |= 1 << v
    return mask


def induced_subgraph(G: Graph, subset: VertexSubset) -> tuple[Graph, dict[int, int]]:
    """
    Returns the subgraph induced on `subset` and the old->new id map.
    """
    validate_subset(G, subset)
    index = {old: new for new, old in enumerate(subset)}
    rows = []
    for old in subset:
        row = 0
        for other in subset:
            if G.has_edge(old, other):
                row |= 1 << index[other]
        rows.append(row)
    return Graph(len(subset), rows), index


def connected_components(G: Graph) -> list[list[int]]:
    """Blocks ordered by smallest vertex; each block sorted."""
    seen = 0
    blocks = []
    for start in range(G.n):
        if seen >> start & 1:
            continue
        block = 1 << start
        frontier = block
        while frontier:
            reach = 0
            for v in mask_to_list(frontier):
                reach |= G.neighbor_mask(v)
            frontier = reach & ~block
            block |= frontier
        seen |= block
        blocks.append(mask_to_list(block))
    return blocks


def nonadjacent_pairs(G: Graph) -> list[Pair]:
    return [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)]


def degree_sum(G: Graph, x: int, y: int) -> int:
    return G.degree(x) + G.degree(y)
