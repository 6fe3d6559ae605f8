import pytest

from wreathfoulkes import chartable as ct
from wreathfoulkes import wreath as wr
from wreathfoulkes.combinatorics import Multipartition, multipartitions
from wreathfoulkes.exact import Cyclotomic, root_power

GRID = [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]

# frozen S_n character values (lambda, cycle type, value)
SN_VALUES = [((2, 1), (3,), -1), ((2, 1), (1, 1, 1), 2), ((1, 1, 1), (2, 1), -1), ((3, 1), (2, 2), -1),
             ((2, 2), (3, 1), -1), ((2, 2), (2, 1, 1), 0), ((3, 1), (4,), -1), ((2, 1, 1), (2, 1, 1), -1),
             ((3, 2), (2, 2, 1), 1), ((3, 2), (5,), 0)]


@pytest.mark.parametrize("lam,mu,value", SN_VALUES)
def test_symmetric_group_values(lam, mu, value):
    assert ct.sn_character(lam, mu) == value


@pytest.mark.parametrize("r,n", GRID)
@pytest.mark.parametrize("labeling", ct.LABELINGS)
def test_orthogonality(r, n, labeling):
    table = ct.irreducible_table(r, n, labeling)
    assert ct.table_is_orthonormal(table)
    assert ct.column_orthogonality_holds(table)


@pytest.mark.parametrize("r,n", GRID)
def test_degrees_are_tableau_counts(r, n):
    from wreathfoulkes.combinatorics import num_standard_tableaux
    for lam in multipartitions(r, n):
        assert ct.irreducible_character(lam).at_identity() == num_standard_tableaux(lam)


def _brute_class_function(r, n, fn):
    return ct.ClassFunction.from_callable(r, n, lambda mu: fn(wr.class_representative(mu)))


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 3)])
def test_reflection_representation(r, n):
    xi = root_power(r, 1)

    def trace(w):
        return sum((xi ** c for i, (a, c) in enumerate(zip(w.images, w.colors), 1) if a == i),
                   Cyclotomic.rational(r, 0))

    chi = _brute_class_function(r, n, trace)
    target = Multipartition(((n - 1,), (1,)) + ((),) * (r - 2))
    coeffs = ct.decompose(chi)
    assert coeffs[target] == 1
    assert all(c == 0 for lam, c in coeffs.items() if lam != target)


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3)])
def test_linear_color_character(r, n):
    xi = root_power(r, 1)
    chi = _brute_class_function(r, n, lambda w: xi ** sum(w.colors))
    assert chi == ct.irreducible_character(Multipartition(((), (n,)) + ((),) * (r - 2)))


@pytest.mark.parametrize("r,n", GRID)
def test_regular_character_decomposition(r, n):
    coeffs = ct.decompose(ct.regular_character(r, n))
    assert all(c == ct.irreducible_character(lam).at_identity() for lam, c in coeffs.items())
    assert ct.recompose(coeffs, r, n) == ct.regular_character(r, n)


@pytest.mark.parametrize("r,n", [(1, 4), (2, 3), (3, 3)])
def test_branching_rule(r, n):
    for lam in multipartitions(r, n):
        assert ct.restrict(ct.irreducible_character(lam)) == ct.branching_sum(lam)


def test_galois_labeling_differs_at_r3():
    lam = Multipartition(((), (1,), ()))
    assert ct.irreducible_character(lam, "direct") == ct.irreducible_character(Multipartition(((), (), (1,))), "galois")
    assert ct.irreducible_character(lam, "direct") != ct.irreducible_character(lam, "galois")


def test_rational_coefficients():
    coeffs = ct.decompose(ct.trivial_character(2, 2))
    assert ct.rational_coefficients(coeffs)[Multipartition(((2,), ()))] == 1
    assert ct.rational_coefficients({Multipartition(((), (1,), ())): root_power(3, 1)}) is None


def test_unknown_labeling():
    with pytest.raises(ValueError):
        ct.irreducible_table(2, 2, "bogus")
