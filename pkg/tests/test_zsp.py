import pytest
from conftest import group_specs
from hypothesis import given, settings

from zsmagic import (
    DivisibilityError,
    GroupSpec,
    ImpossibilityError,
    NonexistenceError,
    ParameterError,
    base_tables,
    in_class_g,
    involution_count,
    involution_quadruples,
    involutions,
    triple_bijection,
    triple_bijection_by_search,
    verify_triple_bijection,
    verify_zsp,
    zsp,
    zsp_even,
    zsp_odd,
)
from zsmagic.groups import abelian_groups_up_to
from zsmagic.zsp import RESIDUE_TRIPLES_2_2_8


class TestSeedTables:
    def test_all_three_pass_invariants(self):
        tables = base_tables()
        assert set(tables) == {(2, 2, 2), (2, 2, 4), (2, 2, 8)}
        for factors, tb in tables.items():
            assert verify_triple_bijection(tb).ok, factors

    def test_sample_columns_2_2_2(self):
        tb = base_tables()[(2, 2, 2)]
        assert tb.phi_of((0, 0, 0)) == (0, 0, 1)
        assert tb.psi_of((0, 0, 0)) == (0, 0, 1)
        assert tb.phi_of((0, 0, 1)) == (1, 1, 1)
        assert tb.psi_of((0, 0, 1)) == (1, 1, 0)
        assert tb.phi_of((1, 1, 1)) == (1, 0, 1)
        assert tb.psi_of((1, 1, 1)) == (0, 1, 0)

    def test_sample_columns_2_2_4(self):
        tb = base_tables()[(2, 2, 4)]
        assert tb.phi_of((0, 1, 0)) == (1, 1, 2)
        assert tb.psi_of((0, 1, 0)) == (1, 0, 2)
        assert tb.phi_of((0, 0, 3)) == (0, 0, 0)
        assert tb.psi_of((0, 0, 3)) == (0, 0, 1)
        assert tb.phi_of((1, 0, 2)) == (1, 1, 3)
        assert tb.psi_of((1, 0, 2)) == (0, 1, 3)

    def test_residue_triples(self):
        assert RESIDUE_TRIPLES_2_2_8 == (
            (2, 3, 3),
            (7, 2, 7),
            (5, 6, 5),
            (6, 1, 1),
            (1, 5, 2),
            (3, 7, 6),
        )
        tb = base_tables()[(2, 2, 8)]
        for a, b, c in RESIDUE_TRIPLES_2_2_8:
            assert tb.phi_of((0, 0, a)) == (0, 0, b)
            assert tb.psi_of((0, 0, a)) == (0, 0, c)
            assert tb.phi_of((0, 1, a)) == (1, 0, b)
            assert tb.psi_of((0, 1, a)) == (1, 1, c)
            assert tb.phi_of((1, 0, a)) == (1, 1, b)
            assert tb.psi_of((1, 0, a)) == (0, 1, c)
            assert tb.phi_of((1, 1, a)) == (0, 1, b)
            assert tb.psi_of((1, 1, a)) == (1, 0, c)


class TestInvolutionQuadruples:
    def test_klein_four_single_block(self):
        part = involution_quadruples(GroupSpec((2, 2)))
        assert part.blocks == (((0, 0), (0, 1), (1, 0), (1, 1)),)

    def test_rank_three_prefix_structure(self):
        part = involution_quadruples(GroupSpec((2, 2, 2)))
        assert len(part.blocks) == 2
        prefixes = [{e[0] for e in blk} for blk in part.blocks]
        assert sorted(map(tuple, prefixes)) == [(0,), (1,)]

    def test_rank_four(self):
        spec = GroupSpec((2, 2, 2, 2))
        part = involution_quadruples(spec)
        assert len(part.blocks) == 4
        universe = involutions(spec).with_identity().elements
        assert verify_zsp(spec, part, 4, universe=universe).ok

    def test_single_involution_rejected(self):
        with pytest.raises(ParameterError):
            involution_quadruples(GroupSpec((4,)))

    @given(group_specs(max_order=64))
    @settings(max_examples=40)
    def test_partitions_closure_into_zero_sum_quadruples(self, spec):
        rank = sum(1 for f in spec.factors if f % 2 == 0)
        if rank < 2:
            return
        part = involution_quadruples(spec)
        assert len(part.blocks) == 2 ** (rank - 2)
        universe = involutions(spec).with_identity().elements
        assert verify_zsp(spec, part, 4, universe=universe).ok


class TestTripleBijection:
    def test_seed_example(self):
        tb = triple_bijection(GroupSpec((2, 2, 2)))
        assert tb.phi_of((0, 0, 1)) == (1, 1, 1)
        assert tb.psi_of((0, 0, 1)) == (1, 1, 0)

    def test_odd_closed_form(self):
        tb = triple_bijection(GroupSpec((5,)))
        assert tb.phi_of((1,)) == (1,)
        assert tb.psi_of((1,)) == (3,)

    def test_klein_four_by_search(self):
        tb = triple_bijection(GroupSpec((2, 2)))
        assert verify_triple_bijection(tb).ok

    def test_single_involution_refused(self):
        for factors in ((2,), (4,), (6,), (12,)):
            with pytest.raises(NonexistenceError):
                triple_bijection(GroupSpec(factors))

    def test_mixed_presentation(self):
        for factors in ((6, 2), (12, 2), (2, 18), (6, 6)):
            spec = GroupSpec(factors)
            assert verify_triple_bijection(triple_bijection(spec)).ok, factors

    def test_ladder_consistency_with_search(self):
        # where both the structured route and plain search apply, both verify
        for factors in ((2, 2, 3), (2, 2, 2), (2, 4)):
            spec = GroupSpec(factors)
            assert verify_triple_bijection(triple_bijection(spec)).ok
            assert verify_triple_bijection(triple_bijection_by_search(spec)).ok

    def test_search_cap(self):
        with pytest.raises(ParameterError):
            triple_bijection_by_search(GroupSpec((2, 2)), max_order=2)

    def test_works_for_every_admissible_group_up_to_48(self):
        for spec in abelian_groups_up_to(48):
            if in_class_g(spec):
                assert verify_triple_bijection(triple_bijection(spec)).ok, spec


class TestVerifyZsp:
    def test_accepts_z9_triples(self):
        spec = GroupSpec((9,))
        blocks = [[(0,), (1,), (8,)], [(2,), (3,), (4,)], [(5,), (6,), (7,)]]
        assert verify_zsp(spec, blocks, 3).ok

    def test_rejects_bad_sum_and_reports_block(self):
        spec = GroupSpec((9,))
        blocks = [[(0,), (1,), (2,)], [(3,), (4,), (5,)], [(6,), (7,), (8,)]]
        check = verify_zsp(spec, blocks, 3)
        assert not check.ok
        assert check.block_index == 0
        assert "sums to 3" in check.reason

    def test_rejects_pairs(self):
        check = verify_zsp(GroupSpec((4,)), [[(0,), (1,)], [(2,), (3,)]], 2)
        assert not check.ok
        assert check.block_index == 0

    def test_rejects_bad_size(self):
        check = verify_zsp(GroupSpec((9,)), [[(0,), (1,)], [(2,)]], 3)
        assert not check.ok

    def test_rejects_missing_cover(self):
        spec = GroupSpec((3, 3))
        part = zsp(spec, 3)
        check = verify_zsp(spec, part.blocks[:-1], 3)
        assert not check.ok
        assert "cover" in check.reason

    def test_rejects_duplicates(self):
        spec = GroupSpec((9,))
        blocks = [[(0,), (1,), (8,)], [(1,), (3,), (5,)], [(2,), (6,), (7,)]]
        assert not verify_zsp(spec, blocks, 3).ok


class TestZspEven:
    def test_klein_four_whole_group(self):
        part = zsp_even(GroupSpec((2, 2)), 4)
        assert part.blocks == (((0, 0), (0, 1), (1, 0), (1, 1)),)

    def test_z2z2z3_blocks_of_six(self):
        spec = GroupSpec((2, 2, 3))
        part = zsp_even(spec, 6)
        assert len(part.blocks) == 2
        assert verify_zsp(spec, part, 6).ok

    def test_single_involution_refused(self):
        with pytest.raises(NonexistenceError):
            zsp_even(GroupSpec((8,)), 4)

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            zsp_even(GroupSpec((2, 2, 3)), 3)
        with pytest.raises(DivisibilityError):
            zsp_even(GroupSpec((2, 2)), 8)


class TestZspOdd:
    def test_z9(self):
        spec = GroupSpec((9,))
        part = zsp_odd(spec, 3)
        assert verify_zsp(spec, part, 3).ok

    def test_z2z2z3_lifting(self):
        spec = GroupSpec((2, 2, 3))
        part = zsp_odd(spec, 3)
        assert len(part.blocks) == 4
        assert verify_zsp(spec, part, 3).ok

    def test_z6_refused(self):
        with pytest.raises(NonexistenceError):
            zsp_odd(GroupSpec((6,)), 3)

    def test_mixed_presentation_lifting(self):
        spec = GroupSpec((6, 6))
        part = zsp_odd(spec, 3)
        assert verify_zsp(spec, part, 3).ok


class TestZspDispatcher:
    def test_quadruples_in_z2z2z3(self):
        spec = GroupSpec((2, 2, 3))
        part = zsp(spec, 4)
        assert len(part.blocks) == 3
        assert verify_zsp(spec, part, 4).ok

    def test_whole_group_z7(self):
        part = zsp(GroupSpec((7,)), 7)
        assert part.blocks == (((0,), (1,), (2,), (3,), (4,), (5,), (6,)),)

    def test_m_two_always_impossible(self):
        with pytest.raises(ImpossibilityError):
            zsp(GroupSpec((4,)), 2)
        with pytest.raises(ImpossibilityError):
            zsp(GroupSpec((9,)), 2)

    def test_divisibility(self):
        with pytest.raises(DivisibilityError):
            zsp(GroupSpec((9,)), 6)

    def test_m_one_rejected(self):
        with pytest.raises(ParameterError):
            zsp(GroupSpec((9,)), 1)

    def test_single_involution_refused(self):
        with pytest.raises(NonexistenceError):
            zsp(GroupSpec((12,)), 3)

    def test_all_groups_to_32_all_divisors(self):
        for spec in abelian_groups_up_to(32):
            if not in_class_g(spec):
                continue
            for m in range(3, spec.order + 1):
                if spec.order % m == 0:
                    assert verify_zsp(spec, zsp(spec, m), m).ok, (spec, m)
