"""The coinvariant algebra of W(r, n) and its descent-monomial basis.

Polynomials are dicts from exponent tuples to coefficients.  The ideal is
generated by e_d(x_1^r, ..., x_n^r); reduction uses the lex division set
h_m(x_m^r, ..., x_n^r) whose leading terms are x_m^(rm), so normal forms are
supported on the Artin box a_m < r*m.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Sequence

from . import chartable as ct
from . import combinatorics as cb
from .combinatorics import Multipartition, multipartitions, standard_tableaux
from .exact import (BudgetExceeded, Cyclotomic, NoSolution, UniPoly, as_cyclotomic, exact_rank,
                    exact_solve, matrix_inverse, root_power)
from .foulkes import foulkes_all
from .wreath import ColoredPermutation, class_representative, cycle_type, descent_set, elements, generators

Monomial = tuple
DEFAULT_BUDGET = 200


class FlagVariant(enum.Enum):
    SUFFIX_COMPLEMENT = "suffix-complement"  # f_i = r*des_i + (r-1) - c_i, des_i counts descents in i..n
    INTERIOR_COLOR = "interior-color"  # f_i = r*|Des & {i..n-1}| + c_i
    INTERIOR_COMPLEMENT = "interior-complement"  # f_i = r*|Des & {i..n-1}| + (r-1) - c_i


# -- polynomials -----------------------------------------------------------------------

class Poly:
    """Sparse polynomial with cyclotomic (or rational) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Poly":
        return cls({tuple(exps): coeff})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c) -> "Poly":
        return Poly({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self - other).terms == {}

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({ {m: str(c) for m, c in sorted(self.terms.items(), reverse=True)} })"


def act_on_monomial(w: ColoredPermutation, exps: Monomial) -> tuple[int, Monomial]:
    """w . x^a = xi^e x^b: x_j goes to xi^(c_j) x_(w(j))."""
    out = [0] * w.n
    e = 0
    for j, a in enumerate(exps):
        out[w.images[j] - 1] += a
        e += w.colors[j] * a
    return e % w.r, tuple(out)


def act(w: ColoredPermutation, p: Poly) -> Poly:
    out: dict = {}
    for m, c in p.terms.items():
        e, b = act_on_monomial(w, m)
        out[b] = out.get(b, 0) + as_cyclotomic(w.r, c) * root_power(w.r, e)
    return Poly(out)


# -- flag statistics and descent monomials ----------------------------------------------

@dataclass(frozen=True)
class FlagStatistics:
    des: tuple
    f: tuple
    variant: FlagVariant

    @property
    def weakly_decreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.f, self.f[1:]))

    def max_step(self) -> int:
        return max((a - b for a, b in zip(self.f, self.f[1:])), default=0)


def flag_statistics(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT) -> FlagStatistics:
    n, r = w.n, w.r
    des = descent_set(w)
    suffix = tuple(sum(1 for d in des if d >= i) for i in range(1, n + 1))
    interior = tuple(sum(1 for d in des if i <= d <= n - 1) for i in range(1, n + 1))
    c = w.colors
    if variant is FlagVariant.SUFFIX_COMPLEMENT:
        f = tuple(r * suffix[i] + (r - 1) - c[i] for i in range(n))
    elif variant is FlagVariant.INTERIOR_COLOR:
        f = tuple(r * interior[i] + c[i] for i in range(n))
    else:
        f = tuple(r * interior[i] + (r - 1) - c[i] for i in range(n))
    return FlagStatistics(suffix, f, variant)


def descent_monomial(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT) -> Monomial:
    f = flag_statistics(w, variant).f
    out = [0] * w.n
    for i, a in enumerate(w.images):
        out[a - 1] = f[i]
    return tuple(out)


def tableau_flag_first(T: cb.StandardTableau, variant: FlagVariant) -> int:
    """f_1 of a standard tableau under the analogue of ``variant``."""
    r, n = T.r, T.n
    des = cb.descent_set(T)
    c1 = T.component_of(1) if n else 0
    if variant is FlagVariant.SUFFIX_COMPLEMENT:
        return r * len(des) + (r - 1) - c1
    interior = sum(1 for d in des if d <= n - 1)
    if variant is FlagVariant.INTERIOR_COLOR:
        return r * interior + c1
    return r * interior + (r - 1) - c1


# -- the ideal and normal forms -------------------------------------------------------------

def _complete_homogeneous_exponents(nvars: int, degree: int):
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield tuple(exps)


@lru_cache(maxsize=None)
def _reducer_tails(r: int, n: int, m: int) -> tuple[Monomial, ...]:
    """Monomials of h_m(x_m^r..x_n^r) other than the leading x_m^(rm)."""
    tails = []
    for ex in _complete_homogeneous_exponents(n - m + 1, m):
        full = (0,) * (m - 1) + tuple(r * e for e in ex)
        if full[m - 1] != r * m:
            tails.append(full)
    return tuple(tails)


def reducers(r: int, n: int) -> list[Poly]:
    out = []
    for m in range(1, n + 1):
        lead = (0,) * (m - 1) + (r * m,) + (0,) * (n - m)
        terms = {lead: 1}
        for t in _reducer_tails(r, n, m):
            terms[t] = 1
        out.append(Poly(terms))
    return out


def elementary_in_powers(r: int, n: int, d: int) -> Poly:
    terms = {}
    for combo in itertools.combinations(range(n), d):
        exps = [0] * n
        for v in combo:
            exps[v] = r
        terms[tuple(exps)] = 1
    return Poly(terms)


def reducer_in_ideal(r: int, n: int, m: int) -> bool:
    """Is h_m(y_m..y_n) in <e_1(y), ..., e_n(y)>?  Solved with degree-bounded multipliers."""
    # work with y = x^r; every monomial below is in the y variables
    target = {ex: 1 for ex in ((0,) * (m - 1) + e for e in _complete_homogeneous_exponents(n - m + 1, m))}
    unknowns = []  # (d, multiplier monomial)
    for d in range(1, m + 1):
        for mult in _complete_homogeneous_exponents(n, m - d):
            unknowns.append((d, mult))
    rows_index: dict[Monomial, int] = {}
    columns = []
    for d, mult in unknowns:
        col = {}
        for combo in itertools.combinations(range(n), d):
            ex = list(mult)
            for v in combo:
                ex[v] += 1
            ex = tuple(ex)
            rows_index.setdefault(ex, len(rows_index))
            col[rows_index[ex]] = col.get(rows_index[ex], 0) + 1
        columns.append(col)
    for ex in target:
        rows_index.setdefault(ex, len(rows_index))
    A = [[Fraction(columns[j].get(i, 0)) for j in range(len(columns))] for i in range(len(rows_index))]
    b = [Fraction(0)] * len(rows_index)
    for ex, c in target.items():
        b[rows_index[ex]] = Fraction(c)
    try:
        exact_solve(A, b)
    except NoSolution:
        return False
    return True


def in_artin_box(r: int, exps: Monomial) -> bool:
    return all(a < r * (m + 1) for m, a in enumerate(exps))


def artin_box(r: int, n: int) -> list[Monomial]:
    """Exponent vectors with a_m < r*m, in lexicographic order."""
    return list(itertools.product(*[range(r * m) for m in range(1, n + 1)]))


@lru_cache(maxsize=None)
def _normal_form_monomial(r: int, exps: Monomial) -> tuple[tuple[Monomial, int], ...]:
    n = len(exps)
    for m in range(1, n + 1):
        if exps[m - 1] >= r * m:
            base = list(exps)
            base[m - 1] -= r * m
            acc: dict[Monomial, int] = {}
            for tail in _reducer_tails(r, n, m):
                reduced = tuple(a + t for a, t in zip(base, tail))
                for mono, c in _normal_form_monomial(r, reduced):
                    acc[mono] = acc.get(mono, 0) - c
            return tuple((mono, c) for mono, c in acc.items() if c)
    return ((exps, 1),)


def normal_form_monomial(r: int, exps: Sequence[int]) -> dict[Monomial, int]:
    """Remainder of x^exps on division by the lex reducers (integer coefficients)."""
    return dict(_normal_form_monomial(r, tuple(exps)))


def normal_form(p: Poly, r: int) -> Poly:
    out: dict = {}
    for m, c in p.terms.items():
        for mono, k in _normal_form_monomial(r, m):
            out[mono] = out.get(mono, 0) + c * k
    return Poly(out)


# -- the descent basis ---------------------------------------------------------------------

@dataclass
class DescentBasis:
    r: int
    n: int
    variant: FlagVariant
    group: list  # elements of W(r, n), in enumeration order
    monomials: list  # descent monomial of each element
    box: list  # Artin-box monomials (row labels)
    matrix: list  # matrix[i][j]: coefficient of box[i] in NF(monomials[j])
    rank: int
    _inverse: list | None = None
    _box_index: dict | None = None

    @property
    def dimension(self) -> int:
        return len(self.box)

    @property
    def full_rank(self) -> bool:
        return self.rank == self.dimension == len(self.group)

    def inverse(self) -> list:
        if not self.full_rank:
            raise ValueError(f"descent monomials are not a basis for W({self.r},{self.n}) ({self.variant.value})")
        if self._inverse is None:
            self._inverse = matrix_inverse(self.matrix)
        return self._inverse

    def box_index(self) -> dict:
        if self._box_index is None:
            self._box_index = {m: i for i, m in enumerate(self.box)}
        return self._box_index

    def coordinate(self, g_index: int, exps: Monomial) -> Fraction:
        """Coefficient of m_g in the descent-basis expansion of x^exps (mod the ideal)."""
        inv_row = self.inverse()[g_index]
        idx = self.box_index()
        return sum((inv_row[idx[mono]] * c for mono, c in _normal_form_monomial(self.r, exps)), Fraction(0))

    def coordinates(self, exps: Monomial) -> list[Fraction]:
        idx = self.box_index()
        vec = [Fraction(0)] * self.dimension
        for mono, c in _normal_form_monomial(self.r, exps):
            vec[idx[mono]] += c
        inv = self.inverse()
        return [sum((row[i] * v for i, v in enumerate(vec) if v), Fraction(0)) for row in inv]


def _check_budget(r: int, n: int, budget: int):
    size = r ** n * factorial(n)
    if size > budget:
        raise BudgetExceeded(f"|W({r},{n})| = {size} exceeds budget {budget}")


@lru_cache(maxsize=None)
def descent_basis(r: int, n: int, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                  budget: int = DEFAULT_BUDGET) -> DescentBasis:
    _check_budget(r, n, budget)
    group = list(elements(r, n))
    monos = [descent_monomial(w, variant) for w in group]
    box = artin_box(r, n)
    index = {m: i for i, m in enumerate(box)}
    matrix = [[Fraction(0)] * len(monos) for _ in box]
    for j, m in enumerate(monos):
        for mono, c in _normal_form_monomial(r, m):
            matrix[index[mono]][j] += c
    rank = exact_rank(matrix)
    return DescentBasis(r, n, variant, group, monos, box, matrix, rank)


def degree_partition(exps: Monomial) -> tuple:
    return tuple(sorted(exps, reverse=True))


def degree_minimality_violations(basis: DescentBasis, limit: int | None = None) -> list[dict]:
    """Elements g whose NF(m_g) lies in the span of NFs of monomials with lex-smaller exponent partition.

    Such a combination would be a polynomial in m_g + I of strictly smaller degree.
    Only monomials with all exponents at most the largest part are candidates.
    """
    r, n = basis.r, basis.n
    idx = basis.box_index()
    out = []
    for j, (g, m) in enumerate(zip(basis.group, basis.monomials)):
        lam = degree_partition(m)
        top = lam[0] if lam else 0
        cols = []
        for ex in itertools.product(range(top + 1), repeat=n):
            if degree_partition(ex) < lam:
                vec = [Fraction(0)] * basis.dimension
                for mono, c in _normal_form_monomial(r, ex):
                    vec[idx[mono]] += c
                cols.append(vec)
        target = [basis.matrix[i][j] for i in range(basis.dimension)]
        if not cols:
            continue
        A = [[col[i] for col in cols] for i in range(basis.dimension)]
        try:
            exact_solve(A, target)
        except NoSolution:
            continue
        out.append({"w": str(g), "monomial": list(m)})
        if limit and len(out) >= limit:
            break
    return out


def descent_basis_check(r: int, n: int, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                        budget: int = DEFAULT_BUDGET) -> dict:
    basis = descent_basis(r, n, variant, budget)
    stats = [flag_statistics(w, variant) for w in basis.group]
    shape_ok = all(s.weakly_decreasing and s.max_step() <= r for s in stats)
    report = {
        "r": r, "n": n, "variant": variant.value,
        "rank": basis.rank, "dimension": basis.dimension, "full_rank": basis.full_rank,
        "f_weakly_decreasing_steps_le_r": shape_ok,
    }
    if basis.full_rank and n <= 2:
        report["degree_minimality_violations"] = degree_minimality_violations(basis)
    if not basis.full_rank:
        witness = next((str(w) for w, m in zip(basis.group, basis.monomials) if not in_artin_box(r, m)
                        and not _normal_form_monomial(r, m)), None)
        report["witness_in_ideal"] = witness
    return report


# -- graded traces ---------------------------------------------------------------------------

def _coefficient_poly(r: int, coeffs: dict[int, Cyclotomic]) -> UniPoly:
    top = max(coeffs) if coeffs else -1
    return UniPoly([coeffs.get(d, 0) for d in range(top + 1)], "q", r)


def diagonal_entries(basis: DescentBasis, w: ColoredPermutation) -> list[Cyclotomic]:
    """<w m_g, m_g> for every g, reading coordinates in the descent basis."""
    out = []
    for j, m in enumerate(basis.monomials):
        e, b = act_on_monomial(w, m)
        out.append(root_power(w.r, e) * basis.coordinate(j, b))
    return out


def graded_trace(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                 budget: int = DEFAULT_BUDGET) -> UniPoly:
    """sum_g <w m_g, m_g> q^(f_1(g))."""
    basis = descent_basis(w.r, w.n, variant, budget)
    coeffs: dict[int, Cyclotomic] = {}
    for g, d in zip(basis.group, diagonal_entries(basis, w)):
        if d:
            f1 = flag_statistics(g, variant).f[0] if w.n else 0
            coeffs[f1] = coeffs.get(f1, 0) + d
    return _coefficient_poly(w.r, coeffs)


def tableau_flag_vector(T: cb.StandardTableau, variant: FlagVariant) -> tuple:
    """(f_1(T), ..., f_n(T)) under the analogue of ``variant``."""
    r, n = T.r, T.n
    des = cb.descent_set(T)
    out = []
    for i in range(1, n + 1):
        c = T.component_of(i)
        if variant is FlagVariant.SUFFIX_COMPLEMENT:
            out.append(r * sum(1 for d in des if d >= i) + (r - 1) - c)
            continue
        interior = r * sum(1 for d in des if i <= d <= n - 1)
        out.append(interior + c if variant is FlagVariant.INTERIOR_COLOR else interior + (r - 1) - c)
    return tuple(out)


def multigraded_trace(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                      budget: int = DEFAULT_BUDGET) -> dict[tuple, Cyclotomic]:
    """sum_g <w m_g, m_g> q_1^(f_1(g)) ... q_n^(f_n(g)), keyed by exponent vector."""
    basis = descent_basis(w.r, w.n, variant, budget)
    out: dict[tuple, Cyclotomic] = {}
    for g, d in zip(basis.group, diagonal_entries(basis, w)):
        if d:
            key = flag_statistics(g, variant).f
            out[key] = out.get(key, 0) + d
    return {k: v for k, v in out.items() if v}


def multigraded_tableau_trace(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                              labeling: str = "direct") -> dict[tuple, Cyclotomic]:
    table = ct.irreducible_table(w.r, w.n, labeling)
    mu = cycle_type(w)
    out: dict[tuple, Cyclotomic] = {}
    for lam, chi in table.rows.items():
        val = chi(mu)
        if val:
            for T in standard_tableaux(lam):
                key = tableau_flag_vector(T, variant)
                out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def tableau_side_trace(w: ColoredPermutation, variant: FlagVariant = FlagVariant.SUFFIX_COMPLEMENT,
                       labeling: str = "direct") -> UniPoly:
    """sum_lam chi^lam(w) sum_T q^(f_1(T))."""
    r, n = w.r, w.n
    table = ct.irreducible_table(r, n, labeling)
    mu = cycle_type(w)
    coeffs: dict[int, Cyclotomic] = {}
    for lam, chi in table.rows.items():
        val = chi(mu)
        if not val:
            continue
        for T in standard_tableaux(lam):
            d = tableau_flag_first(T, variant) if n else 0
            coeffs[d] = coeffs.get(d, 0) + val
    return _coefficient_poly(r, coeffs)


# -- filtration -------------------------------------------------------------------------------

def grading_value(g: ColoredPermutation, statistic: str, variant: FlagVariant) -> int:
    if statistic == "des":
        return len(descent_set(g))
    if statistic == "f1":
        return flag_statistics(g, variant).f[0] if g.n else 0
    raise ValueError(f"unknown statistic {statistic!r}")


def filtration_is_invariant(basis: DescentBasis, statistic: str) -> bool:
    """Is span{m_g : stat(g) <= t} stable under every generator, for every t?"""
    levels = [grading_value(g, statistic, basis.variant) for g in basis.group]
    for s in generators(basis.r, basis.n):
        for j, m in enumerate(basis.monomials):
            _, b = act_on_monomial(s, m)
            coords = basis.coordinates(b)
            if any(c and levels[i] > levels[j] for i, c in enumerate(coords)):
                return False
    return True


def level_characters(r: int, n: int, variant: FlagVariant, statistic: str,
                     budget: int = DEFAULT_BUDGET) -> dict[int, ct.ClassFunction]:
    """Character of each graded piece span{m_g : stat(g) = t}, read off the diagonal."""
    basis = descent_basis(r, n, variant, budget)
    levels = [grading_value(g, statistic, variant) for g in basis.group]
    values: dict[int, dict] = {t: {} for t in sorted(set(levels))}
    for mu in multipartitions(r, n):
        diag = diagonal_entries(basis, class_representative(mu))
        for t in values:
            values[t][mu] = sum((d for d, lv in zip(diag, levels) if lv == t), Cyclotomic.rational(r, 0))
    return {t: ct.ClassFunction(r, n, v) for t, v in values.items()}


def _contiguous_groupings(m: int, parts: int):
    """Ways to cut m ordered levels into ``parts`` non-empty consecutive blocks."""
    for cuts in itertools.combinations(range(1, m), parts - 1):
        bounds = (0,) + cuts + (m,)
        yield [list(range(bounds[i], bounds[i + 1])) for i in range(parts)]


def filtration_characters(r: int, n: int, variant: FlagVariant, statistic: str,
                          budget: int = DEFAULT_BUDGET) -> dict:
    """Graded characters by ``statistic`` and a grouping of levels matching phi_0..phi_n, if any."""
    chars = level_characters(r, n, variant, statistic, budget)
    levels = sorted(chars)
    phis = [phi.to_class_function() for phi in foulkes_all(r, n)]
    # phi_n vanishes when r = 1, so trailing zero targets get no block
    parts = len(phis)
    while parts > 1 and phis[parts - 1] == ct.zero_function(r, n):
        parts -= 1
    match = None
    for grouping in _contiguous_groupings(len(levels), parts):
        summed = []
        for block in grouping:
            acc = ct.zero_function(r, n)
            for i in block:
                acc = acc + chars[levels[i]]
            summed.append(acc)
        if summed == phis[:parts]:
            match = [[levels[i] for i in block] for block in grouping]
            break
    basis = descent_basis(r, n, variant, budget)
    return {
        "r": r, "n": n, "variant": variant.value, "statistic": statistic,
        "levels": levels,
        "dimensions": {t: str(chars[t].at_identity()) for t in levels},
        "invariant": filtration_is_invariant(basis, statistic),
        "grouping": match,
        "characters": chars,
    }


def printed_filtration_matches(r: int, n: int, variant: FlagVariant, budget: int = DEFAULT_BUDGET) -> bool:
    """Threshold f_1 <= k for k = 0..n, exactly as in the filtration's definition."""
    chars = level_characters(r, n, variant, "f1", budget)
    phis = [phi.to_class_function() for phi in foulkes_all(r, n)]
    prev = ct.zero_function(r, n)
    cumulative = ct.zero_function(r, n)
    for k in range(n + 1):
        if k in chars:
            cumulative = cumulative + chars[k]
        if cumulative - prev != phis[k]:
            return False
        prev = cumulative
    total = ct.zero_function(r, n)
    for c in chars.values():
        total = total + c
    return cumulative == total
