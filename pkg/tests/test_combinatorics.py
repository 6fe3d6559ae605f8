from fractions import Fraction
from math import comb, factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from wreathfoulkes import combinatorics as cb
from wreathfoulkes.combinatorics import BoundaryConvention, Multipartition, StandardTableau, multipartitions


def hook_length_count(shape):
    n = sum(shape)
    conj = cb.conjugate_partition(shape)
    hooks = prod(shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i]))
    return factorial(n) // hooks


def hook_content(shape, m):
    """Number of semistandard fillings with entries 1..m."""
    conj = cb.conjugate_partition(shape)
    val = Fraction(1)
    for i in range(len(shape)):
        for j in range(shape[i]):
            val *= Fraction(m + j - i, shape[i] - j + conj[j] - i - 1)
    return int(val)


# frozen counts of r-multipartitions of n (coefficients of prod (1-x^i)^(-r))
MULTIPARTITION_COUNTS = {1: [1, 1, 2, 3, 5, 7], 2: [1, 2, 5, 10, 20, 36], 3: [1, 3, 9, 22, 51, 108]}


@pytest.mark.parametrize("r", [1, 2, 3])
def test_multipartition_counts(r):
    assert [len(multipartitions(r, n)) for n in range(6)] == MULTIPARTITION_COUNTS[r]


@pytest.mark.parametrize("n", range(7))
def test_standard_tableaux_match_hook_length(n):
    for lam in cb.partitions(n):
        tabs = cb.standard_tableaux(Multipartition((lam,)))
        assert len(tabs) == hook_length_count(lam)
        assert all(T.is_standard() for T in tabs)
        assert len(set(tabs)) == len(tabs)


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in range(5)])
def test_wedderburn_count(r, n):
    assert sum(cb.num_standard_tableaux(lam) ** 2 for lam in multipartitions(r, n)) == r ** n * factorial(n)


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3), (2, 4)])
def test_multipartition_tableau_count_is_multinomial(r, n):
    for lam in multipartitions(r, n):
        sizes = lam.sizes()
        expected = factorial(n) // prod(factorial(s) for s in sizes)
        expected *= prod(hook_length_count(c) for c in lam.components)
        assert cb.num_standard_tableaux(lam) == expected


def test_worked_tableau_descents():
    T = StandardTableau.from_json([[[1, 3, 5], [6, 7], [8, 9]], [[2, 4], [10]]])
    assert T.is_standard()
    assert sorted(cb.descent_set(T)) == [2, 4, 5, 7, 10]
    for conv in BoundaryConvention:
        assert sorted(cb.column_descent_set(T, conv)) == [1, 3, 6, 8, 9]


def test_boundary_conventions_at_n():
    T = StandardTableau.from_json([[], [], [[1]]])  # r = 3, entry 1 in the last component
    assert cb.descent_set(T) == {1}
    assert cb.column_descent_set(T, BoundaryConvention.COMPLEMENT) == set()
    assert cb.column_descent_set(T, BoundaryConvention.SENTINEL) == set()
    T = StandardTableau.from_json([[], [[1]], []])
    assert cb.column_descent_set(T, BoundaryConvention.COMPLEMENT) == set()
    assert cb.column_descent_set(T, BoundaryConvention.SENTINEL) == {1}


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in range(1, 5)])
def test_des_and_cdes_partition_under_complement(r, n):
    for lam in multipartitions(r, n):
        for T in cb.standard_tableaux(lam):
            d = cb.descent_set(T)
            c = cb.column_descent_set(T, BoundaryConvention.COMPLEMENT)
            assert not d & c and d | c == set(range(1, n + 1))
        for k in range(n + 1):
            assert cb.mbar_count(lam, k, BoundaryConvention.COMPLEMENT) == cb.m_count(lam, n - k)


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in range(1, 5)])
def test_des_equals_cdes_of_conjugate_with_sentinel(r, n):
    for lam in multipartitions(r, n):
        for T in cb.standard_tableaux(lam):
            assert cb.descent_set(T) == cb.column_descent_set(T.conjugate(), BoundaryConvention.SENTINEL)


def test_complement_boundary_breaks_conjugate_descents_off_r2():
    T = StandardTableau.from_json([[[1]]])
    assert cb.descent_set(T) != cb.column_descent_set(T.conjugate(), BoundaryConvention.COMPLEMENT)


@pytest.mark.parametrize("shape", [(3,), (2, 1), (2, 2), (3, 1), (1, 1, 1), (3, 2, 1)])
@pytest.mark.parametrize("m", range(1, 5))
def test_fillings_match_hook_content(shape, m):
    assert cb.row_semistandard_count(Multipartition((shape,)), m - 1) == hook_content(shape, m)
    conj = Multipartition((cb.conjugate_partition(shape),))
    assert cb.column_semistandard_count(conj, m - 1) == hook_content(shape, m)


@pytest.mark.parametrize("r,n,k", [(r, n, k) for r in (1, 2, 3) for n in range(0, 5) for k in range(4)])
def test_one_row_and_one_column_counts(r, n, k):
    row = Multipartition.one_row(r, n)
    col = Multipartition((((1,) * n),) + ((),) * (r - 1))
    assert cb.row_semistandard_count(row, k) == comb(n + k, n)
    assert cb.column_semistandard_count(col, k) == comb(n + k, n)


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in range(1, 5)])
def test_counts_vanish_exactly_off_Y(r, n):
    for k in range(4):
        for lam in multipartitions(r, n):
            assert (cb.row_semistandard_count(lam, k) != 0) == cb.in_Y(lam, k)
            assert (cb.column_semistandard_count(lam, k) != 0) == cb.in_Y_tilde(lam, k)


@pytest.mark.parametrize("r,n", [(r, n) for r in (1, 2, 3) for n in range(1, 5)])
def test_componentwise_conjugation_swaps_counts(r, n):
    for k in range(4):
        for lam in multipartitions(r, n):
            assert cb.column_semistandard_count(lam, k) == cb.row_semistandard_count(cb.conjugate_components(lam), k)


def test_reversing_conjugation_does_not_swap_counts():
    lam = Multipartition.from_parts([1], [])
    assert cb.column_semistandard_count(lam, 0) == 1
    assert cb.row_semistandard_count(cb.conjugate_multipartition(lam), 0) == 0


@pytest.mark.parametrize("r,n", [(1, 3), (2, 3), (2, 4), (3, 3)])
def test_binomial_transform(r, n):
    for lam in multipartitions(r, n):
        for k in range(4):
            assert cb.binomial_transform_check(lam, k)["corrected_holds"]


def test_printed_binomial_fails_at_witness():
    rep = cb.binomial_transform_check(Multipartition.from_parts([1], []), 2)
    assert rep["s_k"] == 3 and rep["printed"] == 1 and rep["corrected"] == 3


@st.composite
def multipartition_st(draw):
    r = draw(st.integers(1, 3))
    n = draw(st.integers(0, 6))
    return draw(st.sampled_from(multipartitions(r, n)))


@settings(max_examples=80, deadline=None)
@given(multipartition_st())
def test_conjugation_involutions(lam):
    assert cb.conjugate_multipartition(cb.conjugate_multipartition(lam)) == lam
    assert cb.conjugate_components(cb.conjugate_components(lam)) == lam
    assert Multipartition.parse(str(lam)) == lam


@settings(max_examples=60, deadline=None)
@given(multipartition_st())
def test_box_moves_are_inverse(lam):
    for box in cb.addable_boxes(lam):
        bigger = lam.add_box(box)
        assert box in cb.removable_boxes(bigger)
        assert bigger.remove_box(box) == lam


@settings(max_examples=40, deadline=None)
@given(multipartition_st())
def test_tableau_json_round_trip(lam):
    for T in cb.standard_tableaux(lam)[:5]:
        assert StandardTableau.from_json(T.to_json()) == T
        assert T.conjugate().conjugate() == T
