import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degensplit.cubic import (
    apply_first_rule,
    decompose_subcubic,
    examined_ball,
    is_nb_colouring,
    reduce_to_empty,
    undo_and_extend,
)
from degensplit.graph import (
    ForbiddenCliqueError,
    Graph,
    verify_decomposition,
)
from degensplit.oracles import brute_decompose, gen_random_subcubic

from conftest import (
    claw_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diamond_graph,
    disjoint_union,
    h1_graph,
    h2_graph,
    h3_graph,
    path_graph,
    petersen_graph,
    prism_graph,
)


def _decompose_and_verify(g):
    d = decompose_subcubic(g)
    assert verify_decomposition(g, 3, d)
    return d


def _petersen_socket():
    """Petersen minus one edge: its two degree-2 endpoints accept new edges
    while everything stays triangle-free and twin-free."""
    g = petersen_graph()
    edges = [e for e in g.edges() if e != (0, 1)]
    return edges, 0, 1


def _triangle_between_sockets():
    """A triangle (10, 11, 12) whose three outside neighbours are pairwise
    distinct, non-adjacent, and embedded so no earlier rule fires at 10."""
    edges, p, q = _petersen_socket()
    edges += [(10, 11), (11, 12), (10, 12), (10, 13), (11, p), (12, q)]
    sock2, p2, q2 = _petersen_socket()
    offset = 14
    edges += [(u + offset, v + offset) for u, v in sock2]
    edges += [(13, p2 + offset), (13, q2 + offset)]
    return Graph(24, edges)


class TestRuleSelection:
    def test_rule1_low_degree_pivot(self):
        g = path_graph(3)
        g_next, rec = apply_first_rule(g, 1)
        assert rec.rule_id == 1
        assert [v for v, _ in rec.removed] == [1]
        assert g_next.m == 0

    def test_rule2_nearby_low_degree(self):
        # pivot has degree 3 but a degree-1 vertex sits at distance 2
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (3, 5)])
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 2
        assert rec.role_labels["v"] in (4, 5)

    def test_rule3_diamond(self):
        # diamond with its two tips extended by paths long enough to keep
        # rules 1-2 quiet near the pivot
        edges, p, q = _petersen_socket()
        base = 10
        # diamond on base..base+3: axis (base, base+1), tips (base+2, base+3)
        edges += [(base, base + 1), (base, base + 2), (base, base + 3),
                  (base + 1, base + 2), (base + 1, base + 3)]
        edges += [(base + 2, p), (base + 3, q)]
        g = Graph(14, edges)
        _, rec = apply_first_rule(g, base)
        assert rec.rule_id == 3
        assert {rec.role_labels["v"], rec.role_labels["w"]} == {base, base + 1}
        _decompose_and_verify(g)

    def test_rule4_false_twins_in_k33(self):
        g = complete_bipartite(3, 3)
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 4
        assert rec.role_labels["u1"] == 0 and rec.role_labels["u2"] == 1

    def test_rule5_prism_component(self):
        g = prism_graph()
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 5
        assert len(rec.removed) == 6

    def test_rule6_triangle_with_remote_outside(self):
        g = _triangle_between_sockets()
        _, rec = apply_first_rule(g, 10)
        assert rec.rule_id == 6
        assert len(rec.added_edges) == 1
        _decompose_and_verify(g)

    def test_rule8_h2_component(self):
        g = h2_graph()
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 8
        assert rec.role_labels["pattern"] == "H2"
        assert len(rec.removed) == 8

    def test_rule8_h3_component(self):
        g = h3_graph()
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 8
        assert rec.role_labels["pattern"] == "H3"

    def test_rule8_h1_embedded(self):
        edges = list(h1_graph().edges())
        sock, p, q = _petersen_socket()
        offset = 7
        edges += [(u + offset, v + offset) for u, v in sock]
        # the third neighbour of the H1 anchor bridges into the socket
        edges += [(0, 17), (17, p + offset), (17, q + offset)]
        g = Graph(18, edges)
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 8
        assert rec.role_labels["pattern"] == "H1"
        assert len(rec.removed) == 7  # the anchor's third neighbour survives
        _decompose_and_verify(g)

    def test_rule9_petersen(self):
        # Petersen: girth 5, 3-regular, no special patterns -> claw surgery
        g = petersen_graph()
        _, rec = apply_first_rule(g, 0)
        assert rec.rule_id == 9
        assert len(rec.added_edges) == 3
        assert len(set(rec.added_edges)) == 3

    def test_examined_ball_is_small(self):
        g = petersen_graph()
        assert len(examined_ball(g, 0)) <= 121


class TestReduce:
    def test_empty_graph(self):
        assert reduce_to_empty(Graph(0)) == []

    def test_triangle_three_rule1_records(self):
        recs = reduce_to_empty(cycle_graph(3))
        assert [r.rule_id for r in recs] == [1, 1, 1]

    def test_k4_rejected(self):
        with pytest.raises(ForbiddenCliqueError):
            reduce_to_empty(complete_graph(4))

    def test_progress_and_closure(self):
        g = petersen_graph()
        from degensplit.cubic import _Work, _apply_first

        work = _Work(g)
        cursor = 0
        previous = work.live_count
        while work.live_count:
            while not work.alive[cursor]:
                cursor += 1
            _apply_first(work, cursor)
            assert work.live_count < previous
            previous = work.live_count
            assert all(len(work.adj[v]) <= 3 for v in range(g.n) if work.alive[v])

    def test_max_degree_rejected(self):
        with pytest.raises(ValueError, match="maximum degree"):
            reduce_to_empty(complete_graph(5))

    def test_undo_reconstructs_graph_exactly(self):
        from degensplit.cubic import _undo_structure, _Work

        for g in [petersen_graph(), _triangle_between_sockets(),
                  gen_random_subcubic(40, seed=5, connected=True)]:
            records = reduce_to_empty(g)
            work = _Work(g)
            for rec in records:
                for v, _ in rec.removed:
                    work.remove_vertex(v)
                for a, b in rec.added_edges:
                    work.add_edge(a, b)
            assert work.live_count == 0
            for rec in reversed(records):
                _undo_structure(work, rec)
            assert work.to_graph() == g


class TestUndo:
    def test_rule1_undo_both_neighbours_forest(self):
        g = path_graph(3)
        recs = reduce_to_empty(g)
        # rebuild by replaying everything except the first-applied record,
        # then undo it publicly with a crafted colouring
        last = recs[0]
        removed_ids = {v for v, _ in last.removed}
        survivors = [v for v in range(3) if v not in removed_ids]
        # prior graph: the one right after `last` was applied, padded with
        # isolated vertices for everything `last` removed
        prior_edges = [e for e in g.edges() if not set(e) & removed_ids]
        g_prior = Graph(3, prior_edges)
        colour = {v: 2 for v in survivors}
        extended = undo_and_extend(last, g_prior, colour)
        assert is_nb_colouring(g, extended)
        # both neighbours wear 2, so the restored vertex takes colour 1
        restored = next(iter(removed_ids))
        assert extended[restored] == 1

    def test_rule5_undo_prism_colouring(self):
        g = prism_graph()
        recs = reduce_to_empty(g)
        assert recs[0].rule_id == 5
        colour = undo_and_extend(recs[0], Graph(6), {})
        assert is_nb_colouring(g, colour)
        ones = [v for v, c in colour.items() if c == 1]
        assert len(ones) == 2  # one vertex per triangle

    def test_rule6_undo_all_two_case(self):
        g = _triangle_between_sockets()
        recs = reduce_to_empty(g)
        rec6 = next(r for r in recs if r.rule_id == 6)
        # replay forward up to (and including) rule 6 to get the prior graph
        from degensplit.cubic import _Work

        work = _Work(g)
        for r in recs:
            for v, _ in r.removed:
                work.remove_vertex(v)
            for a, b in r.added_edges:
                work.add_edge(a, b)
            if r is rec6:
                break
        g_prior = work.to_graph()
        roles = rec6.role_labels
        outs = [roles["x_out"], roles["y_out"], roles["u_out"]]
        # find a valid colouring of the live part with all three outs coloured 2
        live = [v for v in range(g.n) if work.alive[v]]
        colour = _search_nb_colouring(g_prior, live, {o: 2 for o in outs})
        assert colour is not None, "no extendable colouring with the target pattern"
        extended = undo_and_extend(rec6, g_prior, colour)
        sub_edges = [e for e in g.edges() if all(v in extended for v in e)]
        assert is_nb_colouring(Graph(g.n, sub_edges), extended, partial=True)
        assert extended[roles["u"]] == 1
        assert extended[roles["x"]] == 2 and extended[roles["y"]] == 2

    def test_colour_safety_after_every_undo(self):
        from degensplit.cubic import _extend_colour, _undo_structure, _Work

        for g in [petersen_graph(), _triangle_between_sockets(),
                  gen_random_subcubic(30, seed=9, connected=True)]:
            records = reduce_to_empty(g)
            work = _Work(g)
            for rec in records:
                for v, _ in rec.removed:
                    work.remove_vertex(v)
                for a, b in rec.added_edges:
                    work.add_edge(a, b)
            colour: dict[int, int] = {}
            for rec in reversed(records):
                _undo_structure(work, rec)
                _extend_colour(work, rec, colour)
                assert is_nb_colouring(work.to_graph(), colour, partial=True)

    def test_undo_rejects_invalid_colouring(self):
        g = path_graph(3)
        recs = reduce_to_empty(g)
        last = recs[0]
        removed_ids = {v for v, _ in last.removed}
        prior_edges = [e for e in g.edges() if not set(e) & removed_ids]
        g_prior = Graph(3, prior_edges)
        bad = {v: 1 for v in range(3) if v not in removed_ids}  # adjacent 1s
        if len(bad) >= 2 and g_prior.m >= 1:
            with pytest.raises(ValueError):
                undo_and_extend(last, g_prior, bad)


def _search_nb_colouring(g_prior, live, forced):
    """Exhaustive search for a valid partial colouring matching ``forced``."""
    import itertools

    sub_edges = [e for e in g_prior.edges()]
    for bits in itertools.product((1, 2), repeat=len(live)):
        colour = dict(zip(live, bits))
        if any(colour[v] != c for v, c in forced.items()):
            continue
        if is_nb_colouring(Graph(g_prior.n, sub_edges), colour, partial=True):
            return colour
    return None


class TestDecompose:
    def test_k4_error(self):
        with pytest.raises(ForbiddenCliqueError):
            decompose_subcubic(complete_graph(4))

    def test_k4_inside_larger_graph(self):
        g = disjoint_union(complete_graph(4), petersen_graph())
        with pytest.raises(ForbiddenCliqueError) as err:
            decompose_subcubic(g)
        assert err.value.component_indices == [0]

    def test_prism(self, prism):
        d = _decompose_and_verify(prism)
        assert len(d.a_set) == 2

    def test_fixtures(self):
        for g in [claw_graph(), diamond_graph(), prism_graph(), h1_graph(),
                  h2_graph(), h3_graph(), petersen_graph(), complete_bipartite(3, 3),
                  cycle_graph(5), path_graph(1), Graph(0)]:
            _decompose_and_verify(g)

    def test_petersen_matches_oracle(self, petersen):
        d = _decompose_and_verify(petersen)
        assert brute_decompose(petersen, 3) is not None
        assert d.k == 3

    def test_disconnected_input(self):
        g = disjoint_union(prism_graph(), cycle_graph(5), path_graph(4))
        _decompose_and_verify(g)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_random_agrees_with_oracle(self, seed):
        g = gen_random_subcubic(4 + seed % 6, seed, connected=True)
        try:
            d = decompose_subcubic(g)
        except ForbiddenCliqueError:
            assert brute_decompose(g, 3) is None
        else:
            assert verify_decomposition(g, 3, d)
            assert brute_decompose(g, 3) is not None
