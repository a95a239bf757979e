import pytest

from zsmagic import (
    Graph,
    GroupSpec,
    Labeling,
    NonexistenceError,
    OBSTRUCTION_ODD_DEGREES_ORDER_2_MOD_4,
    OBSTRUCTION_ODD_REGULAR_ONE_INVOLUTION,
    ParameterError,
    bipartite_blowup_exists,
    blowup_even_label,
    blowup_label,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    eulerian_bipartite_label,
    lex_product,
    obstruction_check,
    parse_group_spec,
    path_graph,
    verify_labeling,
)
from zsmagic.graphs import blowup_even_magic_constant, weights


class TestGraphModel:
    def test_simple_validation(self):
        with pytest.raises(ParameterError):
            Graph(3, [(0, 0)])
        with pytest.raises(ParameterError):
            Graph(3, [(0, 5)])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_degree_flags(self):
        assert complete_graph(4).is_regular
        assert complete_graph(4).regular_degree == 3
        assert complete_graph(4).all_degrees_odd
        assert cycle_graph(5).all_degrees_even
        assert not path_graph(3).is_regular

    def test_bipartition_recomputed_when_inconsistent(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], bipartition=({0, 1}, {2, 3}))
        v1, v2 = g.bipartition()
        assert set(v1) in ({0, 2}, {1, 3})

    def test_valid_supplied_bipartition_kept(self):
        g = Graph(4, [(0, 2), (1, 3)], bipartition=({0, 1}, {2, 3}))
        assert g.bipartition() == ((0, 1), (2, 3))

    def test_odd_cycle_not_bipartite(self):
        assert cycle_graph(5).bipartition() is None

    def test_balanced_bipartition_swaps_components(self):
        # two paths of length 2: default coloring gives sides of sizes 4 and 2
        g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        v1, v2 = g.balanced_bipartition()
        assert len(v1) == len(v2) == 3


class TestLexProduct:
    def test_k2_blowup_is_k22(self):
        assert lex_product(complete_graph(2), empty_graph(2)) == complete_bipartite_graph(2, 2)

    def test_k4_blowup_is_complete_four_partite(self):
        g = lex_product(complete_graph(4), empty_graph(3))
        for u in range(4):
            for v in range(3):
                for x in range(4):
                    for y in range(3):
                        a, b = u * 3 + v, x * 3 + y
                        if a != b:
                            assert (b in g.adj[a]) == (u != x)

    def test_identity_blowup(self):
        assert lex_product(cycle_graph(3), empty_graph(1)) == cycle_graph(3)

    def test_degree_law(self):
        g, h = path_graph(3), cycle_graph(4)
        prod = lex_product(g, h)
        for u in range(g.n):
            for v in range(h.n):
                assert prod.degrees[u * h.n + v] == h.n * g.degrees[u] + h.degrees[v]


class TestVerifyLabeling:
    def test_flagship_magic(self):
        spec = parse_group_spec("Z2xZ2xZ3")
        g = lex_product(complete_graph(4), empty_graph(3))
        verdict = verify_labeling(g, blowup_label(complete_graph(4), 3, spec))
        assert verdict.is_magic and verdict.mu == (0, 0, 0)

    def test_cycle_labeling_around_c4(self):
        spec = GroupSpec((4,))
        around = verify_labeling(cycle_graph(4), Labeling(spec, ((0,), (1,), (2,), (3,))))
        assert around.status == "not-magic" and around.witness == (0, 1)
        swapped = verify_labeling(cycle_graph(4), Labeling(spec, ((0,), (1,), (3,), (2,))))
        assert swapped.is_magic and swapped.mu == (3,)

    def test_path_not_magic(self):
        verdict = verify_labeling(path_graph(3), Labeling(GroupSpec((3,)), ((0,), (1,), (2,))))
        assert verdict.status == "not-magic"
        assert verdict.witness == (0, 1)

    def test_empty_neighborhood_weighs_identity(self):
        lab = Labeling(GroupSpec((3,)), ((1,), (2,), (0,)))
        assert weights(empty_graph(3), lab) == [(0,), (0,), (0,)]
        assert verify_labeling(empty_graph(3), lab).is_magic

    def test_size_mismatch(self):
        with pytest.raises(ParameterError):
            verify_labeling(path_graph(3), Labeling(GroupSpec((4,)), ((0,), (1,), (2,), (3,))))

    def test_labeling_must_be_bijection(self):
        with pytest.raises(ParameterError):
            Labeling(GroupSpec((3,)), ((0,), (0,), (1,)))


class TestBlowupLabel:
    def test_c3_by_z9(self):
        base = cycle_graph(3)
        lab = blowup_label(base, 3, GroupSpec((9,)))
        verdict = verify_labeling(lex_product(base, empty_graph(3)), lab)
        assert verdict.is_magic and verdict.mu == (0,)

    def test_non_regular_base_still_magic(self):
        base = path_graph(4)
        lab = blowup_label(base, 3, GroupSpec((2, 2, 3)))
        verdict = verify_labeling(lex_product(base, empty_graph(3)), lab)
        assert verdict.is_magic and verdict.mu == (0, 0, 0)

    def test_group_not_admissible(self):
        with pytest.raises(NonexistenceError):
            blowup_label(complete_graph(4), 3, parse_group_spec("Z12"))

    def test_order_mismatch(self):
        with pytest.raises(ParameterError):
            blowup_label(complete_graph(4), 3, GroupSpec((9,)))

    def test_small_fiber_rejected(self):
        with pytest.raises(ParameterError):
            blowup_label(complete_graph(4), 2, GroupSpec((2, 2, 2)))


class TestBlowupEvenLabel:
    @pytest.mark.parametrize(
        "base,n2,spec_text",
        [
            (complete_graph(2), 2, "Z4"),
            (cycle_graph(4), 2, "Z8"),
            (complete_graph(3), 2, "Z6"),
            (cycle_graph(4), 4, "Z2xZ8"),
        ],
    )
    def test_constant_weight(self, base, n2, spec_text):
        spec = parse_group_spec(spec_text)
        lab = blowup_even_label(base, n2, spec)
        verdict = verify_labeling(lex_product(base, empty_graph(n2)), lab)
        assert verdict.is_magic
        assert verdict.mu == blowup_even_magic_constant(base, n2, spec)

    def test_irregular_base_rejected(self):
        with pytest.raises(ParameterError):
            blowup_even_label(path_graph(3), 2, GroupSpec((6,)))


class TestEulerianBipartiteLabel:
    @pytest.mark.parametrize("spec_text", ["Z2xZ9", "Z2xZ3xZ3", "Z18", "Z3xZ6"])
    def test_c6_order_18(self, spec_text):
        spec = parse_group_spec(spec_text)
        lab = eulerian_bipartite_label(cycle_graph(6), 3, spec)
        verdict = verify_labeling(lex_product(cycle_graph(6), empty_graph(3)), lab)
        assert verdict.is_magic and verdict.mu == spec.identity()

    def test_wrong_base_order(self):
        with pytest.raises(ParameterError, match="2 mod 4"):
            eulerian_bipartite_label(cycle_graph(4), 3, parse_group_spec("Z12"))

    def test_odd_degree_base_rejected(self):
        with pytest.raises(ParameterError, match="even"):
            eulerian_bipartite_label(complete_bipartite_graph(3, 3), 3, parse_group_spec("Z18"))

    def test_even_fiber_rejected(self):
        with pytest.raises(ParameterError):
            eulerian_bipartite_label(cycle_graph(6), 4, parse_group_spec("Z2xZ3xZ4"))


class TestObstructions:
    def test_k33_z6(self):
        verdict = obstruction_check(complete_bipartite_graph(3, 3), parse_group_spec("Z6"))
        assert verdict.status == "impossible"
        assert verdict.obstruction == OBSTRUCTION_ODD_DEGREES_ORDER_2_MOD_4

    def test_blown_up_k4_z12(self):
        g = lex_product(complete_graph(4), empty_graph(3))
        verdict = obstruction_check(g, parse_group_spec("Z12"))
        assert verdict.status == "impossible"
        assert verdict.obstruction == OBSTRUCTION_ODD_REGULAR_ONE_INVOLUTION

    def test_c4_unknown(self):
        assert obstruction_check(cycle_graph(4), GroupSpec((4,))).status == "unknown"

    def test_order_mismatch(self):
        with pytest.raises(ParameterError):
            obstruction_check(cycle_graph(4), GroupSpec((5,)))


class TestBipartiteBlowupExists:
    def test_c6_odd_fiber(self):
        assert bipartite_blowup_exists(cycle_graph(6), 3) is True

    def test_k33_odd_fiber(self):
        assert bipartite_blowup_exists(complete_bipartite_graph(3, 3), 3) is False

    def test_k33_even_fiber(self):
        assert bipartite_blowup_exists(complete_bipartite_graph(3, 3), 2) is True

    def test_witnesses_back_the_predicate(self):
        # even fiber: pair construction on K33; odd fiber: Eulerian route on C6
        lab = blowup_even_label(complete_bipartite_graph(3, 3), 2, parse_group_spec("Z12"))
        g = lex_product(complete_bipartite_graph(3, 3), empty_graph(2))
        assert verify_labeling(g, lab).is_magic
        lab = eulerian_bipartite_label(cycle_graph(6), 3, parse_group_spec("Z2xZ9"))
        g = lex_product(cycle_graph(6), empty_graph(3))
        assert verify_labeling(g, lab).is_magic

    def test_preconditions(self):
        with pytest.raises(ParameterError):
            bipartite_blowup_exists(path_graph(4), 2)
        with pytest.raises(ParameterError):
            bipartite_blowup_exists(cycle_graph(4), 2)
        with pytest.raises(ParameterError):
            bipartite_blowup_exists(cycle_graph(6), 1)
