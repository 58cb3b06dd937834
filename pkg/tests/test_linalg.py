"""Exact rational elimination helpers."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from equitwist.linalg import (
    identity,
    is_multiple_of,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    transpose,
)


def test_rank_hand_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([]) == 0


def test_rref_pivots():
    rows, pivots = rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == [0, 2]
    assert rows[0][:3] == [1, 2, 0]


def test_nullspace_hand_example():
    # x + 2y - z = 0 has a 2-dimensional kernel
    basis = nullspace([[1, 2, -1]])
    assert len(basis) == 2
    for vec in basis:
        assert sum(c * x for c, x in zip([1, 2, -1], vec)) == 0


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=4
    )
)


@given(matrices)
@settings(max_examples=60)
def test_nullspace_vectors_annihilate(m):
    for vec in nullspace(m):
        assert all(x == 0 for x in mat_vec(m, vec))


@given(matrices)
@settings(max_examples=60)
def test_rank_plus_nullity(m):
    assert rank(m) + len(nullspace(m)) == len(m[0])


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    assert transpose(a) == [[1, 3], [2, 4]]
    assert mat_mul(a, identity(2)) == a
    assert mat_vec(a, [1, 1]) == [3, 7]


def test_is_multiple_of():
    assert is_multiple_of([2, 4], [1, 2])
    assert is_multiple_of([0, 0], [1, 2])
    assert is_multiple_of([Fraction(1, 2), Fraction(1)], [1, 2])
    assert not is_multiple_of([1, 2], [0, 0])
    assert not is_multiple_of([1, 0], [1, 1])
