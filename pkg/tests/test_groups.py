import pytest
from conftest import elements_of, group_specs
from hypothesis import given, settings
from hypothesis import strategies as st

from zsmagic import (
    ArityError,
    GroupSpec,
    GroupSpecError,
    ParameterError,
    abelian_isomorphism_classes,
    canonical_factors,
    format_element,
    in_class_g,
    involution_count,
    involutions,
    is_isomorphic,
    parse_element,
    parse_group_spec,
    prime_power_refinement,
    quotient,
    subgroup_closure,
    sum_all,
    sum_all_literal,
    two_part_split,
    two_torsion_rank,
)
from zsmagic.groups import abelian_groups_up_to


class TestSpecGrammar:
    def test_parse_basic(self):
        assert parse_group_spec("Z2xZ2xZ4").factors == (2, 2, 4)
        assert parse_group_spec("z6").factors == (6,)
        assert parse_group_spec("Z2xz3").factors == (2, 3)

    def test_parse_errors_name_token(self):
        with pytest.raises(GroupSpecError, match="Q8"):
            parse_group_spec("Z2xQ8")
        with pytest.raises(GroupSpecError, match="Z1"):
            parse_group_spec("Z1xZ4")
        with pytest.raises(GroupSpecError):
            parse_group_spec("")

    def test_roundtrip(self):
        assert str(parse_group_spec("Z2xZ9")) == "Z2xZ9"

    def test_factor_validation(self):
        with pytest.raises(GroupSpecError):
            GroupSpec((1, 4))


class TestArithmetic:
    def test_add_z4(self):
        z4 = GroupSpec((4,))
        assert z4.add((3,), (2,)) == (1,)

    def test_neg_z2z4(self):
        assert GroupSpec((2, 4)).neg((1, 3)) == (1, 1)

    def test_scale_kills_two_torsion(self):
        assert GroupSpec((2, 2, 8)).scale(2, (1, 1, 3)) == (0, 0, 6)

    def test_negative_scale(self):
        z5 = GroupSpec((5,))
        assert z5.scale(-2, (1,)) == (3,)

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            GroupSpec((2, 2)).add((1,), (0, 1))

    @given(group_specs(max_order=48))
    @settings(max_examples=60)
    def test_group_laws(self, spec):
        a = spec.element_at(min(3, spec.order - 1))
        b = spec.element_at(spec.order - 1)
        assert spec.add(a, spec.neg(a)) == spec.identity()
        assert spec.add(a, b) == spec.add(b, a)
        assert spec.scale(3, a) == spec.add(a, spec.add(a, a))


class TestEnumeration:
    def test_z2z2_order(self):
        assert GroupSpec((2, 2)).elements() == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_element_at_z6(self):
        assert GroupSpec((6,)).element_at(5) == (5,)

    def test_index_of_mixed_radix(self):
        assert GroupSpec((2, 4)).index_of((1, 2)) == 6

    def test_order_bound(self):
        with pytest.raises(ParameterError):
            GroupSpec((2,) * 21).elements()
        assert len(GroupSpec((2, 2)).elements(max_order=4)) == 4

    @given(group_specs())
    @settings(max_examples=40)
    def test_index_inverse(self, spec):
        for i in (0, spec.order // 2, spec.order - 1):
            assert spec.index_of(spec.element_at(i)) == i

    def test_sorting_matches_index_order(self):
        spec = GroupSpec((3, 4))
        elems = spec.elements()
        assert sorted(elems) == elems


class TestInvolutions:
    def test_z4(self):
        assert involutions(GroupSpec((4,))).elements == ((2,),)

    def test_z2z2z3(self):
        assert involutions(GroupSpec((2, 2, 3))).elements == (
            (0, 1, 0),
            (1, 0, 0),
            (1, 1, 0),
        )

    def test_z9_empty(self):
        assert involutions(GroupSpec((9,))).elements == ()

    def test_closure_flag(self):
        iset = involutions(GroupSpec((2, 2)))
        assert not iset.includes_identity
        closed = iset.with_identity()
        assert closed.includes_identity
        assert len(closed.elements) == 4

    @given(group_specs(max_order=64))
    @settings(max_examples=50)
    def test_count_matches_rank(self, spec):
        elems = involutions(spec).elements
        assert len(elems) == 2 ** two_torsion_rank(spec) - 1 == involution_count(spec)
        for e in elems:
            assert spec.scale(2, e) == spec.identity()
            assert e != spec.identity()


class TestSumAll:
    def test_z4(self):
        assert sum_all(GroupSpec((4,))) == (2,)

    def test_z5(self):
        assert sum_all(GroupSpec((5,))) == (0,)

    def test_z2z2(self):
        assert sum_all(GroupSpec((2, 2))) == (0, 0)

    def test_closed_form_matches_literal_fold_up_to_256(self):
        for spec in abelian_groups_up_to(256):
            assert sum_all(spec) == sum_all_literal(spec), spec


class TestClassG:
    def test_examples(self):
        assert in_class_g(GroupSpec((7,)))
        assert not in_class_g(GroupSpec((6,)))
        assert in_class_g(GroupSpec((2, 2, 4)))

    def test_z2z2z4_has_seven_involutions(self):
        assert involution_count(GroupSpec((2, 2, 4))) == 7


class TestCanonicalForm:
    def test_idempotent(self):
        spec = GroupSpec((6, 10))
        canon = GroupSpec(canonical_factors(spec))
        assert canonical_factors(canon) == canonical_factors(spec)

    def test_z6_is_z2xz3(self):
        assert is_isomorphic(GroupSpec((6,)), GroupSpec((2, 3)))
        assert canonical_factors(GroupSpec((6,))) == (2, 3)

    def test_non_isomorphic(self):
        assert not is_isomorphic(GroupSpec((4,)), GroupSpec((2, 2)))

    @given(group_specs(max_order=64))
    @settings(max_examples=50)
    def test_presentation_invariance(self, spec):
        canon = GroupSpec(canonical_factors(spec))
        assert canon.order == spec.order
        assert involution_count(canon) == involution_count(spec)
        assert in_class_g(canon) == in_class_g(spec)
        assert (sum_all(spec) == spec.identity()) == (sum_all(canon) == canon.identity())


class TestQuotient:
    def test_order_two_quotient(self):
        spec = GroupSpec((2, 2, 4))
        dec = quotient(spec, [(1, 0, 0), (0, 1, 0), (0, 0, 2)])
        assert len(dec.subgroup) == 8
        assert len(dec.representatives) == spec.order // len(dec.subgroup) == 2
        assert dec.quotient_spec.order == 2

    def test_z8_mod_2(self):
        dec = quotient(GroupSpec((8,)), [(2,)])
        assert dec.representatives == ((0,), (1,))
        assert canonical_factors(dec.quotient_spec) == (2,)

    def test_z2z2z16_quotient_is_cyclic_of_order_8(self):
        dec = quotient(GroupSpec((2, 2, 16)), [(1, 0, 0), (0, 1, 0), (0, 0, 8)])
        assert dec.quotient_spec.order == 8
        assert canonical_factors(dec.quotient_spec) == (8,)

    def test_cosets_partition_and_bijection(self):
        spec = GroupSpec((2, 8))
        dec = quotient(spec, [(0, 4), (1, 0)])
        seen = {}
        for e in spec.elements():
            rep = dec.representative_of(e)
            seen.setdefault(rep, 0)
            seen[rep] += 1
        assert set(seen) == set(dec.representatives)
        assert all(count == len(dec.subgroup) for count in seen.values())

    def test_representative_override(self):
        spec = GroupSpec((2, 2, 4))
        sub = [(1, 0, 0), (0, 1, 0), (0, 0, 2)]
        c, d = (0, 0, 1), (0, 1, 1)
        dec = quotient(spec, sub, representatives=[(0, 0, 0), c])
        assert dec.representatives == ((0, 0, 0), c)
        with pytest.raises(ParameterError):
            quotient(spec, sub, representatives=[c, (0, 0, 3)])
        with pytest.raises(ParameterError):
            quotient(spec, sub, representatives=[(0, 0, 0), (0, 1, 0)])

    def test_trivial_subgroup(self):
        spec = GroupSpec((4,))
        dec = quotient(spec, [])
        assert len(dec.subgroup) == 1
        assert dec.quotient_spec.order == 4
        assert canonical_factors(dec.quotient_spec) == (4,)

    def test_subgroup_closure(self):
        assert subgroup_closure(GroupSpec((8,)), [(2,)]) == ((0,), (2,), (4,), (6,))


class TestSplits:
    @given(group_specs(max_order=64, max_factor=12))
    @settings(max_examples=40)
    def test_refinement_roundtrip(self, spec):
        ref = prime_power_refinement(spec)
        assert ref.refined.order == spec.order
        for i in (0, spec.order - 1, spec.order // 3):
            e = spec.element_at(i)
            assert ref.from_refined(ref.to_refined(e)) == e

    def test_two_part_split_z18(self):
        split = two_part_split(GroupSpec((18,)))
        assert split.two_spec.factors == (2,)
        assert split.odd_spec.order == 9
        e = (7,)
        two, odd = split.split(e)
        assert split.merge(two, odd) == e

    def test_split_is_homomorphic(self):
        spec = GroupSpec((3, 6))
        split = two_part_split(spec)
        a, b = (1, 5), (2, 3)
        ta, oa = split.split(a)
        tb, ob = split.split(b)
        assert split.merge(
            split.two_spec.add(ta, tb), split.odd_spec.add(oa, ob)
        ) == spec.add(a, b)


class TestIsomorphismClasses:
    def test_order_16(self):
        classes = abelian_isomorphism_classes(16)
        assert len(classes) == 5
        assert GroupSpec((2, 2, 2, 2)) in classes
        assert GroupSpec((16,)) in classes

    def test_order_12(self):
        classes = abelian_isomorphism_classes(12)
        assert sorted(c.factors for c in classes) == [(2, 2, 3), (4, 3)]

    def test_counts_well_known(self):
        # number of Abelian groups of order 2^k is the partition count p(k)
        assert len(abelian_isomorphism_classes(32)) == 7
        assert len(abelian_isomorphism_classes(36)) == 4


class TestElementText:
    def test_single_factor_bare(self):
        assert format_element((5,)) == "5"
        assert parse_element("5") == (5,)

    def test_tuple(self):
        assert format_element((1, 0, 2)) == "(1,0,2)"
        assert parse_element("(1,0,2)") == (1, 0, 2)

    @given(group_specs(), st.data())
    @settings(max_examples=40)
    def test_roundtrip(self, spec, data):
        e = data.draw(elements_of(spec))
        assert spec.reduce(parse_element(format_element(e))) == e
