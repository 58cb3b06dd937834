"""Cycle types, permutations, the cycle-index isotypic computation, cohomology tables."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from equitwist.graded import GradedDims
from equitwist.subset_algebra import SubsetAlgebra
from equitwist.symgroup import (
    CycleType,
    Permutation,
    brute_force_isotypic,
    brute_force_tensor_isotypic,
    cohomology_table,
    isotypic_dims,
    linearization_count,
    partitions,
)

# number of partitions of 1..12
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


class TestPartitionsAndClasses:
    def test_partition_counts(self):
        for n, expected in enumerate(PARTITION_COUNTS, start=1):
            assert len(list(partitions(n))) == expected

    def test_class_sizes_sum_to_group_order(self):
        for n in range(1, 13):
            assert sum(ct.class_size() for ct in CycleType.all_of(n)) == math.factorial(n)

    def test_specific_class_sizes(self):
        assert CycleType((2, 1, 1)).class_size() == 6
        assert CycleType((2, 2)).class_size() == 3
        assert CycleType((4,)).class_size() == 6

    def test_validation(self):
        with pytest.raises(ValueError):
            CycleType((1, 2))
        with pytest.raises(ValueError):
            CycleType((0,))

    def test_json_round_trip(self):
        ct = CycleType((3, 1, 1))
        assert CycleType.from_json(ct.to_json()) == ct


class TestPermutation:
    def test_cycle_type_and_sign(self):
        sigma = Permutation([1, 2, 0, 4, 3])  # a 3-cycle and a 2-cycle
        assert sigma.cycle_type() == CycleType((3, 2))
        assert sigma.sign() == -1
        assert Permutation.identity(4).sign() == 1

    @given(st.integers(2, 6), st.data())
    @settings(max_examples=60)
    def test_sign_multiplicative(self, n, data):
        s = Permutation(data.draw(st.permutations(range(n))))
        t = Permutation(data.draw(st.permutations(range(n))))
        assert (s * t).sign() == s.sign() * t.sign()

    @given(st.integers(2, 6), st.data())
    @settings(max_examples=30)
    def test_inverse(self, n, data):
        s = Permutation(data.draw(st.permutations(range(n))))
        assert s * s.inverse() == Permutation.identity(n)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])


SPHERE = GradedDims({0: 1, 2: 1})


class TestIsotypicDims:
    def test_trivial_n3(self):
        assert isotypic_dims(SPHERE, 3, "trivial") == GradedDims({0: 1, 2: 1, 4: 1, 6: 1})

    def test_sign_n2(self):
        # (1/2)[(1+t^2)^2 - (1+t^4)] = t^2
        assert isotypic_dims(SPHERE, 2, "sign") == GradedDims({2: 1})

    def test_sign_vanishes_from_n3_on(self):
        for n in range(3, 9):
            assert isotypic_dims(SPHERE, n, "sign") == GradedDims.zero()

    def test_one_dimensional_input(self):
        one = GradedDims({0: 1})
        for n in (1, 2, 5):
            assert isotypic_dims(one, n, "trivial") == one
        assert isotypic_dims(one, 3, "sign") == GradedDims.zero()

    def test_rejects_odd_degrees_and_bad_n(self):
        with pytest.raises(ValueError):
            isotypic_dims(GradedDims({1: 1}), 2, "trivial")
        with pytest.raises(ValueError):
            isotypic_dims(SPHERE, 0, "trivial")

    def test_agrees_with_subset_projector(self):
        for n in range(1, 7):
            alg = SubsetAlgebra(n)
            for character in ("trivial", "sign"):
                assert isotypic_dims(SPHERE, n, character) == brute_force_isotypic(alg, character)

    @given(
        st.dictionaries(
            st.integers(0, 3).map(lambda d: 2 * d), st.integers(1, 2), min_size=1, max_size=3
        ),
        st.integers(1, 4),
        st.sampled_from(["trivial", "sign"]),
    )
    @settings(max_examples=25, deadline=None)
    def test_agrees_with_tensor_projector(self, entries, n, character):
        v = GradedDims(entries)
        assert isotypic_dims(v, n, character) == brute_force_tensor_isotypic(v, n, character)

    def test_scales_to_twelve(self):
        # partition iteration, not permutation enumeration: n = 12 is cheap
        top = isotypic_dims(SPHERE, 12, "trivial")
        assert top == GradedDims({2 * k: 1 for k in range(13)})
        assert isotypic_dims(SPHERE, 12, "sign") == GradedDims.zero()

    def test_character_pieces_bounded_by_total(self):
        for n in range(1, 9):
            total = GradedDims.from_hilbert(SPHERE.hilbert() ** n)
            triv = isotypic_dims(SPHERE, n, "trivial")
            sign = isotypic_dims(SPHERE, n, "sign")
            for d in total.degrees():
                assert triv.dim(d) <= total.dim(d)
                assert sign.dim(d) <= total.dim(d)
                if n >= 2:  # distinct irreducibles only from n = 2 on
                    assert triv.dim(d) + sign.dim(d) <= total.dim(d)


class TestKoszulVariant:
    def test_single_odd_line_square(self):
        # one odd generator: the swap acts by -1, so the square is all sign-isotypic
        v = GradedDims({1: 1})
        assert isotypic_dims(v, 2, "trivial", koszul=True) == GradedDims.zero()
        assert isotypic_dims(v, 2, "sign", koszul=True) == GradedDims({2: 1})

    def test_even_input_is_unchanged(self):
        for n in (2, 3, 4):
            for character in ("trivial", "sign"):
                assert isotypic_dims(SPHERE, n, character, koszul=True) == isotypic_dims(
                    SPHERE, n, character
                )

    def test_odd_sphere_endo(self):
        # spherical on an odd-dimensional ambient space: endo k + k[-3]
        v = GradedDims({0: 1, 3: 1})
        triv = isotypic_dims(v, 2, "trivial", koszul=True)
        sign = isotypic_dims(v, 2, "sign", koszul=True)
        # degree 6 tensor square of the odd line lands in the sign piece
        assert triv == GradedDims({0: 1, 3: 1})
        assert sign == GradedDims({3: 1, 6: 1})


class TestBruteForceOracles:
    def test_subset_oracle_values(self):
        alg = SubsetAlgebra(2)
        assert brute_force_isotypic(alg, "trivial") == GradedDims({0: 1, 2: 1, 4: 1})
        assert brute_force_isotypic(alg, "sign") == GradedDims({2: 1})

    def test_n1_characters_coincide(self):
        alg = SubsetAlgebra(1)
        assert brute_force_isotypic(alg, "trivial") == brute_force_isotypic(alg, "sign")

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_isotypic(SubsetAlgebra(9), "trivial")

    def test_tensor_oracle_rejects_odd(self):
        with pytest.raises(ValueError):
            brute_force_tensor_isotypic(GradedDims({1: 1}), 2, "trivial")


class TestCohomologyTables:
    def test_cyclic_rows(self):
        for n in range(1, 13):
            t = cohomology_table("cyclic", n)
            assert t.h1_order == n
            assert t.h2_order == 1
        assert cohomology_table("cyclic", 5).h1_name == "Z/5"
        assert cohomology_table("cyclic", 5).h2_name == "0"

    def test_symmetric_rows(self):
        for n in range(2, 13):
            t = cohomology_table("symmetric", n)
            assert t.h1_order == 2
            assert t.h2_order == (1 if n <= 3 else 2)
        assert cohomology_table("symmetric", 4).h2_name == "Z/2"
        assert cohomology_table("symmetric", 3).h2_name == "0"

    def test_trivial_group_row(self):
        t = cohomology_table("symmetric", 1)
        assert t.h1_order == 1 and t.h2_order == 1

    def test_linearization_counts(self):
        assert linearization_count(cohomology_table("symmetric", 4), True) == 2
        assert linearization_count(cohomology_table("cyclic", 5), True) == 5
        assert linearization_count(cohomology_table("symmetric", 5), False) == 0

    def test_two_linearizations_for_simple_invariant_objects(self):
        for n in range(2, 13):
            assert linearization_count(cohomology_table("symmetric", n), True) == 2

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            cohomology_table("alternating", 4)
