"""The square-zero subset algebra and its isotypic pieces."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from equitwist.graded import GradedDims, HilbertSeries
from equitwist.subset_algebra import (
    MAX_SUBSET_N,
    SubsetAlgebra,
    element_eq,
    invariant_subalgebra,
    is_zero_element,
)
from equitwist.symgroup import Permutation, isotypic_dims


class TestAlgebraStructure:
    def test_dimension_and_hilbert(self):
        for n in range(1, 9):
            alg = SubsetAlgebra(n)
            assert alg.dimension == 2**n
            assert alg.hilbert() == HilbertSeries({0: 1, 2: 1}) ** n
            assert alg.graded_dims().total() == 2**n

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            SubsetAlgebra(0)
        with pytest.raises(ValueError):
            SubsetAlgebra(MAX_SUBSET_N + 1)

    def test_product_rule(self):
        alg = SubsetAlgebra(3)
        h0, h1 = alg.generator(0), alg.generator(1)
        assert alg.multiply(h0, h1) == {0b011: 1}
        assert is_zero_element(alg.multiply(h0, h0))

    def test_associative_exhaustive_small(self):
        for n in (2, 3, 4):
            alg = SubsetAlgebra(n)
            basis = [{m: 1} for m in alg.basis()]
            for a, b, c in itertools.product(basis, repeat=3):
                left = alg.multiply(alg.multiply(a, b), c)
                right = alg.multiply(a, alg.multiply(b, c))
                assert element_eq(left, right)

    def test_associative_randomized_larger(self):
        rng = random.Random(11)
        for n in (5, 8):
            alg = SubsetAlgebra(n)
            for _ in range(50):
                elems = [
                    {rng.randrange(alg.dimension): rng.randint(-3, 3) for _ in range(3)}
                    for _ in range(3)
                ]
                a, b, c = elems
                assert element_eq(
                    alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c))
                )

    def test_commutative_and_graded(self):
        alg = SubsetAlgebra(4)
        rng = random.Random(5)
        for _ in range(100):
            m1, m2 = rng.randrange(16), rng.randrange(16)
            prod = alg.multiply({m1: 1}, {m2: 1})
            assert element_eq(prod, alg.multiply({m2: 1}, {m1: 1}))
            if prod:
                (mask,) = prod
                assert alg.degree(mask) == alg.degree(m1) + alg.degree(m2)

    @given(st.integers(2, 6), st.data())
    @settings(max_examples=40)
    def test_permutations_act_by_algebra_maps(self, n, data):
        alg = SubsetAlgebra(n)
        images = data.draw(st.permutations(range(n)))
        sigma = Permutation(images)
        m1 = data.draw(st.integers(0, alg.dimension - 1))
        m2 = data.draw(st.integers(0, alg.dimension - 1))
        a, b = {m1: 2}, {m2: -1}
        assert element_eq(
            alg.act(sigma, alg.multiply(a, b)), alg.multiply(alg.act(sigma, a), alg.act(sigma, b))
        )

    def test_h_powers(self):
        for n in range(1, 9):
            alg = SubsetAlgebra(n)
            h = alg.h()
            top = alg.power(h, n)
            assert element_eq(top, {alg.top_mask: math.factorial(n)})
            assert is_zero_element(alg.power(h, n + 1))


class TestInvariantSubalgebra:
    def test_trivial_n2(self):
        piece = invariant_subalgebra(SubsetAlgebra(2), "trivial")
        assert piece.dims == GradedDims({0: 1, 2: 1, 4: 1})
        assert piece.generator == {0b01: 1, 0b10: 1}
        assert piece.nilpotency_order == 3

    def test_sign_n2(self):
        # frozen from the transposition-kernel oracle: the line h_0 - h_1
        piece = invariant_subalgebra(SubsetAlgebra(2), "sign")
        assert piece.dims == GradedDims({2: 1})
        (vec,) = piece.basis
        normal = {m: c / vec[0b01] for m, c in vec.items()}
        assert normal == {0b01: 1, 0b10: -1}

    def test_sign_n3_is_zero(self):
        piece = invariant_subalgebra(SubsetAlgebra(3), "sign")
        assert piece.dims == GradedDims.zero()
        assert piece.basis == ()

    def test_n1_sign_equals_trivial(self):
        triv = invariant_subalgebra(SubsetAlgebra(1), "trivial")
        sign = invariant_subalgebra(SubsetAlgebra(1), "sign")
        assert triv.dims == sign.dims == GradedDims({0: 1, 2: 1})

    def test_trivial_dims_match_cycle_index(self):
        series = GradedDims({0: 1, 2: 1})
        for n in range(1, 9):
            piece = invariant_subalgebra(SubsetAlgebra(n), "trivial")
            assert piece.dims == isotypic_dims(series, n, "trivial")
            assert piece.dims == GradedDims({2 * k: 1 for k in range(n + 1)})

    def test_character_sum_bounded_by_total(self):
        # the two characters coincide at n = 1, so the sum bound starts at n = 2
        for n in range(2, 9):
            alg = SubsetAlgebra(n)
            triv = invariant_subalgebra(alg, "trivial").dims
            sign = invariant_subalgebra(alg, "sign").dims
            total = alg.graded_dims()
            for d in total.degrees():
                assert triv.dim(d) + sign.dim(d) <= total.dim(d)
        one = SubsetAlgebra(1)
        for piece in ("trivial", "sign"):
            dims = invariant_subalgebra(one, piece).dims
            for d in one.graded_dims().degrees():
                assert dims.dim(d) <= one.graded_dims().dim(d)

    def test_rejects_unknown_character(self):
        with pytest.raises(ValueError):
            invariant_subalgebra(SubsetAlgebra(2), "standard")
