import pytest
from hypothesis import given, settings, strategies as st

from wreathfoulkes import tensor as tn
from wreathfoulkes import wreath as wr
from wreathfoulkes.combinatorics import Multipartition
from wreathfoulkes.exact import BudgetExceeded
from wreathfoulkes.wreath import ColoredPermutation

GRID = [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]
PARITIES = [tn.ALL_EVEN, tn.ALL_ODD, tn.SUPER, (1, 0), (0, 1, 1)]


def perm_sign(w):
    return (-1) ** sum(len(c) - 1 for c, _ in wr.cycles(w))


@st.composite
def small_elements(draw):
    r = draw(st.integers(1, 3))
    n = draw(st.integers(1, 4))
    perm = draw(st.permutations(range(1, n + 1)))
    cols = draw(st.lists(st.integers(0, r - 1), min_size=n, max_size=n))
    return ColoredPermutation(r, tuple(perm), tuple(cols)), draw(st.integers(0, 2))


@settings(max_examples=120, deadline=None)
@given(small_elements(), st.sampled_from([tn.ALL_EVEN, tn.ALL_ODD, tn.SUPER]))
def test_naive_trace_matches_cycle_formula(wk, parity):
    w, k = wk
    assert tn.naive_trace(w, k, parity) == tn.trace(w, k, parity)


@pytest.mark.parametrize("parity", [(1, 0), (0, 1, 1)])
def test_explicit_parity_vectors(parity):
    r = len(parity)
    for mu in wr.classes(r, 3):
        w = wr.class_representative(mu)
        assert tn.naive_trace(w, 1, parity) == tn.trace(w, 1, parity)


@pytest.mark.parametrize("r,n", GRID)
@pytest.mark.parametrize("k", [0, 1, 2])
def test_closed_forms(r, n, k):
    for mu in wr.classes(r, n):
        w = wr.class_representative(mu)
        assert tn.unsigned_trace(w, k) == (r * k + 1) ** wr.length(w)
        assert tn.signed_trace(w, k) == perm_sign(w) * (r * k + 1) ** wr.length(w)


def test_printed_signed_closed_form_witness():
    rep = tn.signed_closed_form_report(2, 1, 0)
    assert not any(row["matches"] for row in rep)
    w = ColoredPermutation.parse("1^0", 2)
    assert tn.signed_trace(w, 0) == 1


@pytest.mark.parametrize("r,n", GRID)
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_unsigned_multiplicities_are_row_counts(r, n, k):
    rep = tn.multiplicity_report(r, n, k, tn.ALL_EVEN)
    assert rep["ok"], rep["mismatches"][:3]


@pytest.mark.parametrize("r,n", GRID)
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_odd_multiplicities_are_column_counts(r, n, k):
    rep = tn.multiplicity_report(r, n, k, tn.ALL_ODD)
    assert rep["compared_with"] == "c_k"
    assert rep["ok"], rep["mismatches"][:3]


def test_super_parity_breaks_column_counts():
    assert not tn.multiplicity_report(2, 2, 0, tn.SUPER)["ok"]


def test_single_multiplicities():
    lam = Multipartition(((2,), ()))
    assert tn.tensor_multiplicity(lam, 1) == 3  # s_1 of a 2-box row: multisets of size 2 from 2 letters
    assert tn.signed_tensor_multiplicity(Multipartition(((1, 1), ())), 1) == 3


def test_budget():
    w = wr.identity(2, 6)
    with pytest.raises(BudgetExceeded):
        tn.naive_trace(w, 2, budget=1000)


def test_bad_parity():
    with pytest.raises(ValueError):
        tn.parity_vector(2, (0, 2))
    with pytest.raises(ValueError):
        tn.parity_vector(3, (0, 1))
