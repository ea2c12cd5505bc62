from itertools import combinations

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.graph.core import Graph, build_graph, from_networkx

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int, centre: int = 0) -> Graph:
    others = [v for v in range(leaves + 1) if v != centre]
    return build_graph(leaves + 1, [(centre, v) for v in others])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def petersen_graph() -> Graph:
    return from_networkx(nx.petersen_graph())


TWO_K2 = build_graph(4, [(0, 1), (2, 3)])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """Random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(min_value=0, max_value=v - 1)), v) for v in range(1, n)}
    others = [pair for pair in combinations(range(n), 2) if pair not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True)))
    return build_graph(n, sorted(edges))


def relabel(G: Graph, perm) -> Graph:
    """Vertex v becomes perm[v]."""
    return build_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
