from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.conditions.checker import Precondition, check_hamilton_condition, check_tree_condition
from src.construct.certificates import (
    HamiltonCycleCert,
    InternalInvariantBreach,
    KTreeCert,
    NoAttachment,
    SmallVerdict,
    ViolationWitness,
    WitnessKind,
    cycle_problems,
    tree_problems,
    verify_cycle,
    verify_tree,
    verify_witness,
    witness_problems,
)
from src.construct.engine import (
    ClosedCycle,
    EngineStats,
    LongerPath,
    PathState,
    Stuck,
    absorb_into_cycle,
    grow_maximal_path,
    is_maximal,
    path_problems,
    run_path_engine,
    try_rotate_or_close,
)
from src.construct.hamilton import extract_witness, find_hamilton_cycle, small_verdict
from src.construct.trees import build_k_ended_tree, path_to_spanning_tree
from src.graph.core import GraphError, build_graph
from src.harness.enumerate import all_labeled_graphs, random_connected_graphs
from src.oracle.exact import hamiltonian_exact, min_leaf_spanning_tree_exact
from src.patterns.catalog import PatternId
from strategies import (
    PROPERTY_SETTINGS,
    TWO_K2,
    complete_graph,
    connected_graphs,
    cycle_graph,
    graphs,
    path_graph,
    petersen_graph,
    relabel,
    star_graph,
)


def assert_valid_cycle_result(G, result):
    if isinstance(result, SmallVerdict):
        assert G.n <= 3
        if result.certificate is not None:
            assert verify_cycle(G, result.certificate)
    elif isinstance(result, HamiltonCycleCert):
        assert cycle_problems(G, result) == []
    else:
        assert witness_problems(G, result) == []


def assert_valid_tree_result(G, result, k):
    if isinstance(result, KTreeCert):
        assert tree_problems(G, result) == []
    else:
        assert witness_problems(G, result) == []
        assert result.threshold == G.n - k + 1


def is_cycle_certificate(result) -> bool:
    if isinstance(result, SmallVerdict):
        return result.hamiltonian
    return isinstance(result, HamiltonCycleCert)


class TestGrowMaximalPath:
    def test_six_cycle_is_covered(self):
        path = grow_maximal_path(cycle_graph(6), 0)
        assert sorted(path.vertices) == list(range(6))

    def test_star_from_a_leaf(self):
        path = grow_maximal_path(star_graph(3), 1)
        assert path.vertices == (1, 0, 2)

    def test_single_vertex(self):
        assert grow_maximal_path(build_graph(1, []), 0).vertices == (0,)

    def test_start_out_of_range(self):
        with pytest.raises(ValueError):
            grow_maximal_path(cycle_graph(4), 4)

    @PROPERTY_SETTINGS
    @given(graphs(min_n=1, max_n=9), st.data())
    def test_result_is_a_maximal_path(self, G, data):
        start = data.draw(st.integers(min_value=0, max_value=G.n - 1))
        path = grow_maximal_path(G, start)
        assert start in path.vertices
        assert path_problems(G, path) == []
        assert is_maximal(G, path)


class TestRotateOrClose:
    def test_six_cycle_closes(self):
        outcome = try_rotate_or_close(cycle_graph(6), PathState(tuple(range(6))))
        assert outcome == ClosedCycle(tuple(range(6)))

    def test_crossing_chord_rotation(self):
        G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 4)])
        stats = EngineStats()
        outcome = try_rotate_or_close(G, PathState((0, 1, 2, 3, 4)), stats)
        assert outcome == ClosedCycle((0, 1, 4, 3, 2))
        assert stats.rotations == 1

    def test_star_path_through_centre_is_stuck(self):
        G = star_graph(3, centre=1)
        path = PathState((0, 1, 2))
        assert try_rotate_or_close(G, path) == Stuck(path)

    def test_closure_then_absorption(self):
        G = build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        outcome = try_rotate_or_close(G, PathState((0, 1, 2)))
        assert isinstance(outcome, LongerPath)
        assert outcome.path.order == 4
        assert path_problems(G, outcome.path) == []


class TestAbsorb:
    def test_triangle_inside_k4(self):
        path = absorb_into_cycle(complete_graph(4), (0, 1, 2))
        assert path.vertices == (1, 2, 0, 3)

    def test_four_cycle_with_pendant(self):
        G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        path = absorb_into_cycle(G, (0, 1, 2, 3))
        assert path.vertices == (1, 2, 3, 0, 4)
        assert path_problems(G, path) == []

    def test_cycle_spanning_its_component(self):
        with pytest.raises(NoAttachment):
            absorb_into_cycle(TWO_K2, (0, 1))


class TestFindHamiltonCycle:
    def test_complete_graph(self):
        assert find_hamilton_cycle(complete_graph(4)) == HamiltonCycleCert((0, 1, 2, 3))

    def test_single_edge_is_a_cycle_of_order_two(self):
        result = find_hamilton_cycle(build_graph(2, [(0, 1)]))
        assert result.hamiltonian
        assert result.certificate.sequence == (0, 1)

    @pytest.mark.parametrize(
        "G, expected",
        [
            (build_graph(0, []), False),
            (build_graph(1, []), True),
            (build_graph(2, []), False),
            (path_graph(3), False),
            (complete_graph(3), True),
        ],
    )
    def test_small_graphs(self, G, expected):
        verdict = small_verdict(G)
        assert verdict.hamiltonian is expected
        assert find_hamilton_cycle(G) == verdict

    def test_petersen_gives_a_witness(self):
        G = petersen_graph()
        result = find_hamilton_cycle(G)
        assert isinstance(result, ViolationWitness)
        assert result.kind is WitnessKind.PATTERN_PAIR
        assert result.degree_sum == 6
        assert result.threshold == 10
        assert verify_witness(G, result)

    def test_two_disjoint_edges(self):
        result = find_hamilton_cycle(TWO_K2)
        assert result.kind is WitnessKind.PRECONDITION
        assert result.label is Precondition.NO_DEGREE_TWO_VERTEX

    def test_disconnected_pattern(self):
        G = build_graph(4, [(0, 1), (1, 2)])
        result = find_hamilton_cycle(G)
        assert result.kind is WitnessKind.DISCONNECTED_PATTERN
        assert result.subset == (0, 1, 2, 3)
        assert result.pattern is PatternId.K12_UNION_K1
        assert result.pair == (1, 3)
        assert result.degree_sum == 2
        assert verify_witness(G, result)

    def test_star(self):
        result = find_hamilton_cycle(star_graph(3))
        assert result.pattern is PatternId.K13
        assert result.subset == (0, 1, 2, 3)
        assert result.pair == (1, 2)
        assert result.degree_sum == 2

    @PROPERTY_SETTINGS
    @given(graphs(max_n=9))
    def test_output_always_verifies(self, G):
        assert_valid_cycle_result(G, find_hamilton_cycle(G))

    @PROPERTY_SETTINGS
    @given(connected_graphs(min_n=4, max_n=10))
    def test_condition_forces_a_certificate(self, G):
        result = find_hamilton_cycle(G)
        if check_hamilton_condition(G).satisfied:
            assert isinstance(result, HamiltonCycleCert)
            assert verify_cycle(G, result)

    @PROPERTY_SETTINGS
    @given(connected_graphs(min_n=4, max_n=8), st.data())
    def test_relabeling_keeps_the_outcome_category(self, G, data):
        perm = data.draw(st.permutations(list(range(G.n))))
        H = relabel(G, perm)
        assert check_hamilton_condition(G).satisfied == check_hamilton_condition(H).satisfied
        if check_hamilton_condition(H).satisfied:
            assert isinstance(find_hamilton_cycle(H), HamiltonCycleCert)

    @PROPERTY_SETTINGS
    @given(connected_graphs(max_n=10))
    def test_engine_terminates_within_n_iterations(self, G):
        stats = EngineStats()
        run_path_engine(G, 0, stats)
        assert stats.iterations <= G.n
        assert stats.chord_checks <= G.n * G.n


class TestExtractWitness:
    def test_star_middle_vertex_claw(self):
        witness = extract_witness(star_graph(3), PathState((2, 0, 1)))
        assert witness.pattern is PatternId.K13
        assert witness.pair == (1, 2)
        assert witness.degree_sum == 2
        assert witness.threshold == 4

    def test_path_graph_gives_p4(self):
        witness = extract_witness(path_graph(4), PathState((0, 1, 2, 3)))
        assert witness.pattern is PatternId.P4
        assert witness.pair == (0, 3)
        assert witness.degree_sum == 2

    def test_long_path_with_leaf_ends(self):
        witness = extract_witness(path_graph(6), PathState(tuple(range(6))))
        assert witness.pattern is PatternId.K12_UNION_K1
        assert witness.subset == (0, 1, 2, 5)

    def test_chord_at_first_vertex(self):
        # 0-1-2-3-4 with chord 0-2; 4 is a leaf
        G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)])
        witness = extract_witness(G, PathState((0, 1, 2, 3, 4)))
        assert witness.subset == (0, 1, 2, 4)
        assert witness.pattern is PatternId.K3_UNION_K1
        assert witness.pair == (0, 4)
        assert witness.degree_sum == 3

    def test_leaf_first_end_is_reversed(self):
        G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2)])
        witness = extract_witness(G, PathState((0, 1, 2, 3, 4)))
        assert witness.pair == (0, 4)
        assert verify_witness(G, witness)

    def test_closed_path_rejected(self):
        with pytest.raises(InternalInvariantBreach):
            extract_witness(complete_graph(4), PathState((0, 1, 2)))

    def test_petersen_stuck_path(self):
        G = petersen_graph()
        outcome = run_path_engine(G)
        assert isinstance(outcome, Stuck)
        witness = extract_witness(G, outcome.path)
        assert witness.degree_sum == 6
        assert verify_witness(G, witness)


class TestPathToSpanningTree:
    def test_star_from_leaf_centre_leaf(self):
        G = star_graph(5)
        tree = path_to_spanning_tree(G, PathState((1, 0, 2)))
        assert tree.leaf_count == 5
        assert set(tree.edges) == {(0, v) for v in range(1, 6)}

    def test_four_cycle_from_three_vertices(self):
        tree = path_to_spanning_tree(cycle_graph(4), PathState((0, 1, 2)))
        assert tree.edges == ((0, 1), (0, 3), (1, 2))
        assert tree.leaf_count == 2

    def test_hamilton_path_gives_two_leaves(self):
        tree = path_to_spanning_tree(cycle_graph(6), PathState(tuple(range(6))))
        assert tree.leaf_count == 2

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            path_to_spanning_tree(TWO_K2, PathState((0, 1)))

    @PROPERTY_SETTINGS
    @given(connected_graphs(max_n=10))
    def test_leaf_bound(self, G):
        path = grow_maximal_path(G, 0)
        tree = path_to_spanning_tree(G, path)
        assert verify_tree(G, tree)
        assert set(path.edges()) <= set(tree.edges)
        if G.n >= 2:
            assert tree.leaf_count <= G.n - path.order + 2

    @pytest.mark.slow
    def test_leaf_bound_on_random_connected_graphs(self):
        for G in random_connected_graphs(1000, range(1, 11), seed=8):
            path = grow_maximal_path(G, 0)
            tree = path_to_spanning_tree(G, path)
            assert verify_tree(G, tree)
            if G.n >= 2:
                assert tree.leaf_count <= G.n - path.order + 2


class TestBuildKEndedTree:
    def test_star_with_five_leaves_and_k5(self):
        tree = build_k_ended_tree(star_graph(5), 5)
        assert isinstance(tree, KTreeCert)
        assert tree.leaf_count == 5

    def test_star_with_five_leaves_and_k2(self):
        witness = build_k_ended_tree(star_graph(5), 2)
        assert witness.pattern is PatternId.K13
        assert witness.threshold == 5
        assert verify_witness(star_graph(5), witness)

    def test_path_graph(self):
        tree = build_k_ended_tree(path_graph(4), 2)
        assert tree.edges == ((0, 1), (1, 2), (2, 3))
        assert tree.leaf_count == 2

    def test_six_cycle(self):
        tree = build_k_ended_tree(cycle_graph(6), 2)
        assert tree.leaf_count == 2
        assert verify_tree(cycle_graph(6), tree, k=2)

    def test_single_vertex(self):
        tree = build_k_ended_tree(build_graph(1, []), 2)
        assert tree == KTreeCert(edges=(), leaf_count=0, vertex_count=1)

    def test_disconnected(self):
        witness = build_k_ended_tree(TWO_K2, 3)
        assert witness.kind is WitnessKind.PRECONDITION
        assert witness.label is Precondition.DISCONNECTED

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError):
            build_k_ended_tree(cycle_graph(4), 1)

    @PROPERTY_SETTINGS
    @given(connected_graphs(max_n=10), st.integers(min_value=2, max_value=5))
    def test_condition_forces_a_k_ended_tree(self, G, k):
        result = build_k_ended_tree(G, k)
        assert_valid_tree_result(G, result, k)
        if check_tree_condition(G, k).satisfied:
            assert isinstance(result, KTreeCert)
            assert result.leaf_count <= k


class TestCertificateChecks:
    def test_cycle_with_missing_edge(self):
        assert cycle_problems(cycle_graph(4), HamiltonCycleCert((0, 2, 1, 3)))

    def test_cycle_with_repeated_vertex(self):
        assert not verify_cycle(cycle_graph(4), HamiltonCycleCert((0, 1, 2, 2)))

    def test_tree_with_wrong_leaf_count(self):
        cert = KTreeCert(edges=((0, 1), (1, 2), (2, 3)), leaf_count=3, vertex_count=4)
        assert tree_problems(path_graph(4), cert)

    def test_tree_over_k(self):
        cert = KTreeCert(edges=((0, 1), (0, 2), (0, 3)), leaf_count=3, vertex_count=4)
        assert verify_tree(star_graph(3), cert)
        assert not verify_tree(star_graph(3), cert, k=2)

    def test_witness_meeting_threshold_is_rejected(self):
        witness = ViolationWitness(
            kind=WitnessKind.PATTERN_PAIR,
            threshold=3,
            subset=(0, 1, 2, 3),
            pattern=PatternId.P4,
            pair=(0, 3),
            degree_sum=2,
        )
        assert verify_witness(path_graph(4), witness)
        assert not verify_witness(path_graph(4), replace(witness, threshold=2))


class TestExhaustive:
    @staticmethod
    def _check(G):
        cycle = find_hamilton_cycle(G)
        assert_valid_cycle_result(G, cycle)
        has_cycle = hamiltonian_exact(G) is not None
        if is_cycle_certificate(cycle):
            assert has_cycle
        if check_hamilton_condition(G).satisfied:
            assert isinstance(cycle, HamiltonCycleCert)
            assert has_cycle
        best = min_leaf_spanning_tree_exact(G)
        for k in (2, 3, 4):
            tree = build_k_ended_tree(G, k)
            assert_valid_tree_result(G, tree, k)
            if isinstance(tree, KTreeCert):
                assert best is not None and best[0] <= tree.leaf_count
            if check_tree_condition(G, k).satisfied:
                assert isinstance(tree, KTreeCert) and tree.leaf_count <= k
                assert best[0] <= k

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_all_labeled_graphs(self, n):
        for G in all_labeled_graphs(n):
            self._check(G)

    @pytest.mark.slow
    def test_all_labeled_graphs_n6(self):
        for G in all_labeled_graphs(6):
            self._check(G)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_witness_pairs_are_reported_violations(self, n):
        for G in all_labeled_graphs(n):
            cycle = find_hamilton_cycle(G)
            if isinstance(cycle, ViolationWitness) and cycle.kind is WitnessKind.PATTERN_PAIR:
                assert cycle.pair in check_hamilton_condition(G).violation_pairs()
            for k in (2, 3, 4):
                tree = build_k_ended_tree(G, k)
                if isinstance(tree, ViolationWitness) and tree.kind is WitnessKind.PATTERN_PAIR:
                    assert tree.pair in check_tree_condition(G, k).violation_pairs()
