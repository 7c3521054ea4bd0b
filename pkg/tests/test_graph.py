import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degensplit.graph import (
    Decomposition,
    Graph,
    GraphFormatError,
    PartitionError,
    components_and_forbidden_clique_check,
    load_colouring,
    load_graph,
    max_back_degree,
    peel_degeneracy,
    reverse_bfs_order,
    serialize_colouring,
    serialize_graph,
    verify_decomposition,
)
from degensplit.oracles import gen_random_max_degree

from conftest import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    prism_graph,
    star_graph,
)


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph(4, [(2, 0), (3, 1), (0, 3), (0, 1)])
        assert g.adj[0] == [1, 2, 3]
        for u in range(4):
            for v in g.adj[u]:
                assert u in g.adj[v]

    def test_induced_subgraph(self):
        g = prism_graph()
        sub, old = g.induced([0, 1, 2])
        assert old == [0, 1, 2]
        assert sub.m == 3  # the triangle survives


class TestFileFormat:
    def test_triangle_round_trip(self):
        text = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n"
        g = load_graph(text)
        assert g.n == 3 and g.m == 3
        assert load_graph(serialize_graph(g)) == g

    def test_edgeless(self):
        g = load_graph("p 2 0\n")
        assert g.n == 2 and g.m == 0

    def test_duplicate_edge_line(self):
        with pytest.raises(GraphFormatError, match="line 3.*duplicate"):
            load_graph("p 2 2\ne 1 2\ne 1 2\n")

    def test_self_loop_line(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            load_graph("p 2 1\ne 1 1\n")

    def test_unordered_endpoints_rejected(self):
        with pytest.raises(GraphFormatError, match="u < v"):
            load_graph("p 2 1\ne 2 1\n")

    def test_wrong_edge_count(self):
        with pytest.raises(GraphFormatError, match="expected 2 edges"):
            load_graph("p 3 2\ne 1 2\n")

    def test_comments_ignored(self):
        g = load_graph("c hello\np 2 1\nc again\ne 1 2\n")
        assert g.m == 1

    def test_colouring_round_trip(self):
        text = serialize_colouring(3, [1, 2, 3, 1])
        k, colours = load_colouring(text)
        assert k == 3 and colours == [1, 2, 3, 1]

    def test_colouring_missing_vertex(self):
        with pytest.raises(GraphFormatError, match="missing colour"):
            load_colouring("k 2\nv 1 1\nv 3 2\n")

    @given(st.integers(0, 400))
    @settings(max_examples=40, deadline=None)
    def test_serialization_round_trips(self, seed):
        g = gen_random_max_degree(1 + seed % 13, 4, seed)
        assert load_graph(serialize_graph(g)) == g


class TestReverseBfs:
    def test_path_from_end(self):
        g = path_graph(3)
        order = reverse_bfs_order(g, 0)
        assert order.sequence == (2, 1, 0)

    def test_star_from_centre(self):
        g = star_graph(3)
        order = reverse_bfs_order(g, 0)
        assert order.sequence == (3, 2, 1, 0)
        # leaves keep their single neighbour later; the centre sees all three
        assert order.back_degree_bound == 3

    def test_c5_scan(self):
        # the start vertex has degree 2 = the component maximum, so the scan
        # measures 2 (both its neighbours appear earlier in the reversed order)
        g = cycle_graph(5)
        order = reverse_bfs_order(g, 0)
        assert order.back_degree_bound == 2

    def test_everyone_has_a_later_neighbour(self):
        g = petersen_graph()
        order = reverse_bfs_order(g, 0)
        seq = order.sequence
        pos = {v: i for i, v in enumerate(seq)}
        for v in seq[:-1]:
            assert any(pos[w] > pos[v] for w in g.adj[v])

    def test_degree_deficient_start_bound(self):
        # start of degree <= k-1 in a max-degree-k component gives back-degree <= k-1
        g = Graph(5, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
        assert g.degree(0) == 1
        order = reverse_bfs_order(g, 0)
        assert order.back_degree_bound <= g.max_degree() - 1

    def test_out_of_range_start(self):
        with pytest.raises(ValueError):
            reverse_bfs_order(path_graph(2), 5)


class TestPeel:
    def test_tree_is_one_degenerate(self):
        g = Graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert peel_degeneracy(g)[0] == 1

    def test_complete_graph(self):
        assert peel_degeneracy(complete_graph(4))[0] == 3

    def test_cycle(self):
        assert peel_degeneracy(cycle_graph(5))[0] == 2

    def test_empty_graph_convention(self):
        assert peel_degeneracy(Graph(0))[0] == 0

    def test_reversed_removal_is_degenerate_order(self):
        g = petersen_graph()
        degeneracy, order = peel_degeneracy(g)
        assert max_back_degree(g, tuple(reversed(order.sequence))) == degeneracy


class TestVerifyDecomposition:
    def test_prism_white_vertices(self):
        g = prism_graph()
        d = Decomposition(frozenset({0, 4}), frozenset({1, 2, 3, 5}), 3)
        assert verify_decomposition(g, 3, d)

    def test_k4_all_small_independent_sets_fail(self):
        g = complete_graph(4)
        for a in [frozenset()] + [frozenset({v}) for v in range(4)]:
            d = Decomposition(a, frozenset(range(4)) - a, 3)
            assert not verify_decomposition(g, 3, d)

    def test_k33_side_split(self):
        g = complete_bipartite(3, 3)
        d = Decomposition(frozenset({0, 1, 2}), frozenset({3, 4, 5}), 3)
        assert verify_decomposition(g, 3, d)

    def test_non_partition_raises(self):
        g = path_graph(3)
        with pytest.raises(PartitionError):
            verify_decomposition(g, 3, Decomposition(frozenset({0}), frozenset({0, 1, 2}), 3))
        with pytest.raises(PartitionError):
            verify_decomposition(g, 3, Decomposition(frozenset({0}), frozenset({2}), 3))

    def test_k_below_two_rejected(self):
        g = path_graph(2)
        with pytest.raises(ValueError):
            verify_decomposition(g, 1, Decomposition(frozenset({0}), frozenset({1}), 1))


class TestForbiddenCliqueScan:
    def test_k4_with_path(self):
        g = disjoint_union(complete_graph(4), path_graph(3))
        comps, offenders = components_and_forbidden_clique_check(g, 3)
        assert len(comps) == 2 and offenders == [0]

    def test_petersen_clean(self):
        _, offenders = components_and_forbidden_clique_check(petersen_graph(), 3)
        assert offenders == []

    def test_k5_for_k4(self):
        _, offenders = components_and_forbidden_clique_check(complete_graph(5), 4)
        assert offenders == [0]
