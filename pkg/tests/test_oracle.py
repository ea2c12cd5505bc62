from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from src.construct.certificates import HamiltonCycleCert, KTreeCert, verify_cycle, verify_tree
from src.construct.engine import path_problems
from src.graph.core import build_graph
from src.oracle.exact import (
    BudgetExceeded,
    hamiltonian_exact,
    hamiltonian_path_exact,
    longest_path_exact,
    min_leaf_spanning_tree_exact,
)
from src.utils.config import OracleBudget
from strategies import TWO_K2, complete_graph, connected_graphs, cycle_graph, graphs, path_graph, petersen_graph, star_graph

ORACLE_SETTINGS = settings(max_examples=60, deadline=None)


def complete_bipartite(a: int, b: int):
    return build_graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def brute_force_hamiltonian(G) -> bool:
    if G.n <= 1:
        return G.n == 1
    if G.n == 2:
        return G.has_edge(0, 1)
    for rest in permutations(range(1, G.n)):
        seq = (0,) + rest
        if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
            return True
    return False


def brute_force_longest_path(G) -> int:
    for r in range(G.n, 0, -1):
        for seq in permutations(range(G.n), r):
            if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                return r
    return 0


def brute_force_min_leaves(G) -> int:
    g = G.to_networkx()
    best = None
    for subset in combinations(G.edges(), G.n - 1):
        tree = nx.Graph(subset)
        tree.add_nodes_from(range(G.n))
        if nx.is_tree(tree):
            leaves = sum(1 for _, d in tree.degree() if d == 1)
            best = leaves if best is None else min(best, leaves)
    assert nx.is_connected(g) == (best is not None)
    return best


class TestHamiltonianExact:
    def test_five_cycle(self):
        G = cycle_graph(5)
        cycle = hamiltonian_exact(G)
        assert cycle is not None
        assert verify_cycle(G, HamiltonCycleCert(cycle))

    def test_petersen(self):
        assert hamiltonian_exact(petersen_graph()) is None

    def test_unbalanced_bipartite(self):
        assert hamiltonian_exact(complete_bipartite(2, 3)) is None

    @pytest.mark.parametrize(
        "G, expected",
        [
            (build_graph(0, []), None),
            (build_graph(1, []), (0,)),
            (build_graph(2, [(0, 1)]), (0, 1)),
            (build_graph(2, []), None),
            (path_graph(3), None),
        ],
    )
    def test_degenerate_orders(self, G, expected):
        assert hamiltonian_exact(G) == expected

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded) as info:
            hamiltonian_exact(build_graph(13, []))
        assert info.value.limit == 12
        assert info.value.n == 13

    def test_custom_budget(self):
        with pytest.raises(BudgetExceeded):
            hamiltonian_exact(cycle_graph(5), OracleBudget(hamiltonian=4))

    @ORACLE_SETTINGS
    @given(graphs(max_n=7))
    def test_matches_brute_force(self, G):
        cycle = hamiltonian_exact(G)
        assert (cycle is not None) == brute_force_hamiltonian(G)
        if cycle is not None:
            assert verify_cycle(G, HamiltonCycleCert(cycle))


class TestPaths:
    def test_hamilton_path_in_path_graph(self):
        path = hamiltonian_path_exact(path_graph(4))
        assert path in {(0, 1, 2, 3), (3, 2, 1, 0)}

    def test_no_hamilton_path_in_claw(self):
        assert hamiltonian_path_exact(star_graph(3)) is None

    def test_longest_path_in_claw(self):
        assert longest_path_exact(star_graph(3)).order == 3

    def test_longest_path_in_six_cycle(self):
        assert longest_path_exact(cycle_graph(6)).order == 6

    def test_longest_path_in_edgeless_graph(self):
        assert longest_path_exact(build_graph(3, [])).order == 1

    def test_longest_path_in_null_graph(self):
        assert longest_path_exact(build_graph(0, [])).order == 0

    @ORACLE_SETTINGS
    @given(graphs(min_n=1, max_n=6))
    def test_longest_path_matches_brute_force(self, G):
        path = longest_path_exact(G)
        assert path_problems(G, path) == []
        assert path.order == brute_force_longest_path(G)


class TestMinLeafTree:
    def test_claw(self):
        leaves, edges = min_leaf_spanning_tree_exact(star_graph(3))
        assert leaves == 3
        assert set(edges) == {(0, 1), (0, 2), (0, 3)}

    def test_six_cycle(self):
        assert min_leaf_spanning_tree_exact(cycle_graph(6))[0] == 2

    def test_petersen_is_traceable(self):
        leaves, edges = min_leaf_spanning_tree_exact(petersen_graph())
        assert leaves == 2
        assert verify_tree(petersen_graph(), KTreeCert(edges=edges, leaf_count=2, vertex_count=10))

    def test_k24_needs_three_leaves(self):
        G = complete_bipartite(2, 4)
        leaves, edges = min_leaf_spanning_tree_exact(G)
        assert leaves == 3
        assert verify_tree(G, KTreeCert(edges=edges, leaf_count=3, vertex_count=6))

    def test_disconnected(self):
        assert min_leaf_spanning_tree_exact(TWO_K2) is None

    def test_single_vertex(self):
        assert min_leaf_spanning_tree_exact(build_graph(1, [])) == (0, ())

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            min_leaf_spanning_tree_exact(cycle_graph(11))

    @ORACLE_SETTINGS
    @given(connected_graphs(min_n=2, max_n=6))
    def test_matches_brute_force(self, G):
        leaves, edges = min_leaf_spanning_tree_exact(G)
        assert leaves == brute_force_min_leaves(G)
        assert verify_tree(G, KTreeCert(edges=edges, leaf_count=leaves, vertex_count=G.n))

    @ORACLE_SETTINGS
    @given(connected_graphs(min_n=3, max_n=8))
    def test_hamiltonian_graphs_have_two_leaves(self, G):
        if hamiltonian_exact(G) is not None:
            assert min_leaf_spanning_tree_exact(G)[0] == 2

    def test_complete_graph(self):
        assert min_leaf_spanning_tree_exact(complete_graph(5))[0] == 2
