from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from wreathfoulkes import coinvariant as co
from wreathfoulkes import wreath as wr
from wreathfoulkes.coinvariant import FlagVariant, Poly
from wreathfoulkes.exact import BudgetExceeded, UniPoly
from wreathfoulkes.wreath import ColoredPermutation

SMALL = [(1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2), (2, 3)]


def hilbert_series(r, n):
    """prod_{m=1..n} (1 + q + ... + q^(rm-1)) as a coefficient list."""
    coeffs = [1]
    for m in range(1, n + 1):
        out = [0] * (len(coeffs) + r * m - 1)
        for i, c in enumerate(coeffs):
            for j in range(r * m):
                out[i + j] += c
        coeffs = out
    return coeffs


def degree_counts(monos):
    top = max(sum(m) for m in monos)
    out = [0] * (top + 1)
    for m in monos:
        out[sum(m)] += 1
    return out


@st.composite
def element_and_poly(draw, count=2):
    r = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    ws = []
    for _ in range(count):
        perm = draw(st.permutations(range(1, n + 1)))
        cols = draw(st.lists(st.integers(0, r - 1), min_size=n, max_size=n))
        ws.append(ColoredPermutation(r, tuple(perm), tuple(cols)))
    monos = draw(st.lists(st.tuples(*[st.integers(0, 2 * r + 1)] * n), min_size=1, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(monos), max_size=len(monos)))
    p = Poly()
    for m, c in zip(monos, coeffs):
        p = p + Poly.monomial(m, c)
    return ws, p


def test_generator_acts_on_first_variable():
    s0 = wr.generators(2, 2)[0]
    assert co.act(s0, Poly.monomial((1, 0))) == Poly.monomial((1, 0), -1)
    assert co.act(s0, Poly.monomial((0, 1))) == Poly.monomial((0, 1))


@settings(max_examples=100, deadline=None)
@given(element_and_poly())
def test_action_is_a_left_action(data):
    (u, v), p = data
    assert co.act(u * v, p) == co.act(u, co.act(v, p))
    assert co.act(wr.identity(u.r, u.n), p) == p


@settings(max_examples=80, deadline=None)
@given(element_and_poly(count=1))
def test_normal_form_respects_the_ideal(data):
    (w,), p = data
    r, n = w.r, w.n
    for d in range(1, n + 1):
        assert not co.normal_form(co.elementary_in_powers(r, n, d) * p, r)
    nf = co.normal_form(p, r)
    assert co.normal_form(nf, r) == nf
    assert all(co.in_artin_box(r, m) for m in nf.terms)
    assert co.normal_form(co.act(w, nf), r) == co.normal_form(co.act(w, p), r)


def test_reducers_r1_n2():
    assert co.reducers(1, 2) == [Poly({(1, 0): 1, (0, 1): 1}), Poly({(0, 2): 1})]


@pytest.mark.parametrize("r,n", SMALL + [(1, 4), (2, 4)])
def test_reducers_lie_in_ideal(r, n):
    assert all(co.reducer_in_ideal(r, n, m) for m in range(1, n + 1))


def test_small_normal_forms():
    assert co.normal_form_monomial(2, (2,)) == {}
    assert co.normal_form_monomial(2, (1,)) == {(1,): 1}
    assert co.normal_form_monomial(1, (1, 0)) == {(0, 1): -1}
    assert co.normal_form_monomial(1, (2, 0)) == {}


@pytest.mark.parametrize("r,n", SMALL)
def test_artin_box_size(r, n):
    box = co.artin_box(r, n)
    assert len(box) == r ** n * factorial(n)
    assert degree_counts(box) == hilbert_series(r, n)


def test_example_flag_statistics():
    w = ColoredPermutation.parse("3^0 2^0 1^0 4^2 6^2 5^1", 3)
    stats = co.flag_statistics(w, FlagVariant.SUFFIX_COMPLEMENT)
    assert stats.des == (4, 3, 2, 2, 2, 1)
    assert stats.f == (14, 11, 8, 6, 6, 4)
    assert co.descent_monomial(w, FlagVariant.SUFFIX_COMPLEMENT) == (8, 11, 14, 6, 4, 6)


@pytest.mark.parametrize("r,n", SMALL + [(3, 3)])
def test_interior_color_gives_a_basis(r, n):
    basis = co.descent_basis(r, n, FlagVariant.INTERIOR_COLOR)
    assert basis.full_rank
    assert degree_counts(basis.monomials) == hilbert_series(r, n)


@pytest.mark.parametrize("r,n", SMALL)
def test_interior_complement_gives_a_basis(r, n):
    assert co.descent_basis(r, n, FlagVariant.INTERIOR_COMPLEMENT).full_rank


def test_printed_flag_is_not_a_basis():
    rep = co.descent_basis_check(2, 1, FlagVariant.SUFFIX_COMPLEMENT)
    assert not rep["full_rank"]
    assert rep["witness_in_ideal"] == "1^1"


def test_shape_and_minimality_by_variant():
    color = co.descent_basis_check(2, 2, FlagVariant.INTERIOR_COLOR)
    assert not color["f_weakly_decreasing_steps_le_r"]
    assert color["degree_minimality_violations"]
    comp = co.descent_basis_check(2, 2, FlagVariant.INTERIOR_COMPLEMENT)
    assert comp["f_weakly_decreasing_steps_le_r"]
    assert comp["degree_minimality_violations"] == []


def test_identity_trace_r1_n2():
    e = wr.identity(1, 2)
    p = co.graded_trace(e, FlagVariant.INTERIOR_COLOR)
    assert p == UniPoly([1, 1], "q", 1)
    assert co.tableau_side_trace(e, FlagVariant.INTERIOR_COLOR) == p


@pytest.mark.parametrize("r,n", SMALL + [(3, 3)])
def test_graded_traces_agree(r, n):
    for mu in wr.classes(r, n):
        w = wr.class_representative(mu)
        assert co.graded_trace(w, FlagVariant.INTERIOR_COLOR) == co.tableau_side_trace(w, FlagVariant.INTERIOR_COLOR)


@pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_multigraded_traces_agree(r, n):
    for mu in wr.classes(r, n):
        w = wr.class_representative(mu)
        assert (co.multigraded_trace(w, FlagVariant.INTERIOR_COLOR)
                == co.multigraded_tableau_trace(w, FlagVariant.INTERIOR_COLOR))


def test_galois_labeling_breaks_trace_agreement():
    w = wr.class_representative(wr.classes(3, 1)[1])
    assert co.graded_trace(w, FlagVariant.INTERIOR_COLOR) != co.tableau_side_trace(
        w, FlagVariant.INTERIOR_COLOR, "galois")


@pytest.mark.parametrize("r,n", SMALL + [(3, 3)])
def test_descent_filtration(r, n):
    rep = co.filtration_characters(r, n, FlagVariant.INTERIOR_COLOR, "des")
    assert rep["invariant"]
    assert rep["grouping"] == [[k] for k in rep["levels"]]
    assert [int(rep["dimensions"][k]) for k in rep["levels"]] == [e for e in wr.eulerian_row(r, n) if e]


def test_complement_first_entry_filtration():
    rep = co.filtration_characters(2, 2, FlagVariant.INTERIOR_COMPLEMENT, "f1")
    assert rep["grouping"] == [[0], [1, 2], [3]]


@pytest.mark.parametrize("r,n,holds", [(1, 2, True), (1, 3, True), (2, 1, True), (3, 1, False), (2, 2, False)])
def test_threshold_filtration(r, n, holds):
    assert co.printed_filtration_matches(r, n, FlagVariant.INTERIOR_COMPLEMENT) is holds


def test_budget():
    with pytest.raises(BudgetExceeded):
        co.descent_basis(2, 4, FlagVariant.INTERIOR_COLOR, budget=200)
    with pytest.raises(ValueError):
        co.grading_value(wr.identity(2, 2), "bogus", FlagVariant.SUFFIX_COMPLEMENT)
