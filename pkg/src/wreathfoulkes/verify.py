"""Run every identity suite over a grid of (r, n) and collect a structured report.

Statuses: PASS, FAIL, and MISMATCH-AS-PRINTED for a formula that fails as
printed while a documented corrected variant passes.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from . import chartable as ct
from . import coinvariant as cv
from . import combinatorics as cb
from . import foulkes as fk
from . import tensor as tn
from . import wreath as wr
from .combinatorics import BoundaryConvention, Multipartition, multipartitions
from .exact import Cyclotomic, conjugate, exact_solve, mat_mul, root_power

PASS = "PASS"
FAIL = "FAIL"
MISMATCH = "MISMATCH-AS-PRINTED"
STATUSES = (PASS, FAIL, MISMATCH)

SUITES = ("exact", "combinatorics", "wreath", "chartable", "foulkes", "tensor", "coinvariant")
REPORT_VERSION = 1


@dataclass
class Entry:
    identity: str
    locus: str
    domain: str
    status: str
    witness: dict | None = None
    suite: str = ""

    def to_json(self) -> dict:
        out = {"suite": self.suite, "identity": self.identity, "locus": self.locus,
               "domain": self.domain, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerifyReport:
    r: int
    n: int
    suites: tuple
    entries: list = field(default_factory=list)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == FAIL]

    def to_json(self) -> dict:
        return {"version": REPORT_VERSION,
                "config": {"r": self.r, "n": self.n, "suites": list(self.suites)},
                "entries": [e.to_json() for e in self.entries]}


Witnesses = Iterator[dict]


def _first(cases: Iterable[dict]) -> dict | None:
    for w in cases:
        return w
    return None


def check(identity: str, locus: str, domain: str, failures: Iterable[dict]) -> Entry:
    """PASS if ``failures`` yields nothing, else FAIL with the first witness."""
    w = _first(failures)
    return Entry(identity, locus, domain, PASS if w is None else FAIL, w)


def finding(identity: str, locus: str, domain: str, printed_failures: Iterable[dict],
            corrected_failures: Iterable[dict], corrected: str) -> Entry:
    """MISMATCH-AS-PRINTED when the printed form fails and the corrected form holds."""
    bad = _first(corrected_failures)
    if bad is not None:
        return Entry(identity, locus, domain, FAIL, {"corrected": corrected, "corrected_fails": bad})
    by_r: dict = {}
    for w in printed_failures:
        by_r.setdefault(w.get("r"), w)
    if not by_r:
        return Entry(identity, locus, domain, PASS, {"corrected": corrected, "note": "printed form holds here"})
    first = next(iter(by_r.values()))
    witness = dict(first, corrected=corrected)
    if len(by_r) > 1:
        witness["first_per_r"] = [w for w in by_r.values()]
    return Entry(identity, locus, domain, MISMATCH, witness)


def _grid(r: int, n: int, n_min: int = 1) -> list[tuple[int, int]]:
    """Cells ordered by n then r, so the first failure is at minimal (r, n)."""
    return [(rr, nn) for nn in range(n_min, n + 1) for rr in range(1, r + 1)]


def _dom(r: int, n: int, extra: str = "") -> str:
    text = f"r<={r}, n<={n}"
    return f"{text}, {extra}" if extra else text


# -- exact --------------------------------------------------------------------------------

def _random_cyclotomic(rng: random.Random, r: int) -> Cyclotomic:
    return Cyclotomic(r, [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(r)])


def suite_exact(R: int, N: int, rng: random.Random) -> list[Entry]:
    dom = f"r<={R}, 25 random triples per r"

    def field_axioms():
        for r in range(1, R + 1):
            for _ in range(25):
                a, b, c = (_random_cyclotomic(rng, r) for _ in range(3))
                if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
                    yield {"r": r, "a": str(a), "b": str(b), "c": str(c)}
                if a and a * a.inverse() != 1:
                    yield {"r": r, "a": str(a), "issue": "inverse"}

    def roots():
        for r in range(1, R + 1):
            for e in range(r):
                if root_power(r, e) * root_power(r, r - e) != 1:
                    yield {"r": r, "e": e}
            total = sum((root_power(r, e) for e in range(r)), Cyclotomic.rational(r, 0))
            if total != (1 if r == 1 else 0):
                yield {"r": r, "sum": str(total)}

    def conj():
        for r in range(1, R + 1):
            for _ in range(25):
                a, b = _random_cyclotomic(rng, r), _random_cyclotomic(rng, r)
                if conjugate(a * b) != conjugate(a) * conjugate(b) or conjugate(conjugate(a)) != a:
                    yield {"r": r, "a": str(a), "b": str(b)}

    def solve():
        for _ in range(20):
            A = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            x0 = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)]
            b = [row[0] for row in mat_mul(A, [[v] for v in x0])]
            x = exact_solve(A, b)
            if [row[0] for row in mat_mul(A, [[v] for v in x])] != b:
                yield {"A": [[str(v) for v in row] for row in A], "b": [str(v) for v in b]}

    return [
        check("cyclotomic field axioms", "exact cyclotomic arithmetic", dom, field_axioms()),
        check("root_power inverses and root sums", "exact cyclotomic arithmetic", f"r<={R}", roots()),
        check("conjugation is a ring involution", "exact cyclotomic arithmetic", dom, conj()),
        check("exact_solve solves consistent systems", "exact linear algebra", "20 random 3x3", solve()),
    ]


# -- combinatorics ------------------------------------------------------------------------

def suite_combinatorics(R: int, N: int) -> list[Entry]:
    grid = _grid(R, N)
    K = 3

    def wedderburn():
        for r, n in grid:
            total = sum(cb.num_standard_tableaux(lam) ** 2 for lam in multipartitions(r, n))
            if total != r ** n * factorial(n):
                yield {"r": r, "n": n, "sum": total}

    def involution():
        for r, n in grid:
            for lam in multipartitions(r, n):
                if cb.conjugate_multipartition(cb.conjugate_multipartition(lam)) != lam:
                    yield {"lam": str(lam)}

    def y_map(conj):
        for r, n in grid:
            for k in range(K + 1):
                for lam in multipartitions(r, n):
                    if cb.in_Y(lam, k) != cb.in_Y_tilde(conj(lam), k):
                        yield {"r": r, "n": n, "k": k, "lam": str(lam), "conjugate": str(conj(lam))}

    def partition_of_n():
        for r, n in grid:
            for lam in multipartitions(r, n):
                for T in cb.standard_tableaux(lam):
                    d, c = cb.descent_set(T), cb.column_descent_set(T, BoundaryConvention.COMPLEMENT)
                    if d & c or (d | c) != set(range(1, n + 1)):
                        yield {"T": str(T), "des": sorted(d), "cdes": sorted(c)}

    def mbar_complement():
        for r, n in grid:
            for lam in multipartitions(r, n):
                for k in range(n + 1):
                    if cb.mbar_count(lam, k, BoundaryConvention.COMPLEMENT) != cb.m_count(lam, n - k):
                        yield {"lam": str(lam), "k": k}

    def des_cdes_conjugate(conv):
        for r, n in grid:
            for lam in multipartitions(r, n):
                for T in cb.standard_tableaux(lam):
                    if cb.descent_set(T) != cb.column_descent_set(T.conjugate(), conv):
                        yield {"r": r, "n": n, "T": str(T), "des": sorted(cb.descent_set(T)),
                               "cdes_of_conjugate": sorted(cb.column_descent_set(T.conjugate(), conv))}

    def vanishing():
        for r, n in grid:
            for k in range(K + 1):
                for lam in multipartitions(r, n):
                    if (cb.row_semistandard_count(lam, k) != 0) != cb.in_Y(lam, k):
                        yield {"lam": str(lam), "k": k, "count": "s_k"}
                    if (cb.column_semistandard_count(lam, k) != 0) != cb.in_Y_tilde(lam, k):
                        yield {"lam": str(lam), "k": k, "count": "c_k"}

    def ck_from_sk(conj):
        for r, n in grid:
            for k in range(K + 1):
                for lam in multipartitions(r, n):
                    c, s = cb.column_semistandard_count(lam, k), cb.row_semistandard_count(conj(lam), k)
                    if c != s:
                        yield {"r": r, "n": n, "k": k, "lam": str(lam), "c_k": c, "s_k_of_conjugate": s}

    def sk_transform(key):
        for r, n in grid:
            for k in range(K + 1):
                for lam in multipartitions(r, n):
                    rep = cb.binomial_transform_check(lam, k)
                    if not rep[key]:
                        yield {"r": r, "n": n, "lam": str(lam), "k": k, "s_k": rep["s_k"],
                               "transform": rep[key.replace("_holds", "")]}

    def ck_transform(count: Callable[[Multipartition, int], int]):
        for r, n in grid:
            for k in range(K + 1):
                for lam in multipartitions(r, n):
                    c = cb.column_semistandard_count(lam, k)
                    t = sum(comb(n + j, j) * count(lam, k - j) for j in range(k + 1))
                    if c != t:
                        yield {"r": r, "n": n, "lam": str(lam), "k": k, "c_k": c, "transform": t}

    dom = _dom(R, N)
    domk = _dom(R, N, f"k<={K}")
    return [
        check("sum of |std(lam)|^2 is r^n n!", "standard tableau count", dom, wedderburn()),
        check("multipartition conjugation is an involution", "conjugate multipartition", dom, involution()),
        finding("conjugation maps Y^k onto Y~^k", "conjugate multipartition", domk,
                y_map(cb.conjugate_multipartition), y_map(cb.conjugate_components),
                "conjugate each component without reversing their order"),
        check("Des(T) and CDes(T) partition {1..n} (complement boundary)", "tableau descents", dom,
              partition_of_n()),
        check("mbar_k(lam) = m_(n-k)(lam) (complement boundary)", "tableau descents", dom, mbar_complement()),
        check("Des(T) = CDes(conjugate T) (sentinel boundary)", "tableau descents and conjugation", dom,
              des_cdes_conjugate(BoundaryConvention.SENTINEL)),
        check("s_k and c_k vanish exactly off Y^k and Y~^k", "x_k-tableaux support", domk, vanishing()),
        finding("c_k(lam) = s_k(conjugate lam)", "x_k-tableaux and conjugation", domk,
                ck_from_sk(cb.conjugate_multipartition), ck_from_sk(cb.conjugate_components),
                "conjugate each component without reversing their order"),
        check("s_k = sum_j C(n+j,j) m_(k-j)", "binomial transform of descent counts", domk,
              sk_transform("corrected_holds")),
        finding("s_k = sum_j C(n+1,j) m_(k-j)", "binomial transform of descent counts", domk,
                sk_transform("printed_holds"), sk_transform("corrected_holds"),
                "binomial(n+j, j) in place of binomial(n+1, j)"),
        finding("c_k = sum_j C(n+j,j) mbar_(k-j) (complement boundary)", "binomial transform of column-descent counts",
                domk, ck_transform(lambda lam, k: cb.mbar_count(lam, k, BoundaryConvention.COMPLEMENT)),
                ck_transform(lambda lam, k: cb.m_count(cb.conjugate_components(lam), k)),
                "count descents of the componentwise transpose, m_(k-j)(lam') with lam' conjugated per component"),
    ]


# -- wreath --------------------------------------------------------------------------------

EXAMPLE_WORD = "3^0 2^0 1^0 4^2 6^2 5^1"
EXAMPLE_S = [[[1], [2], [3]], [[5]], [[4, 6]]]
EXAMPLE_T = [[[1], [2], [3]], [[6]], [[4, 5]]]


def suite_wreath(R: int, N: int, rng: random.Random) -> list[Entry]:
    grid = _grid(R, N)
    dom = _dom(R, N)

    def axioms():
        for r, n in grid:
            els = list(wr.elements(r, n))
            e = wr.identity(r, n)
            for _ in range(30):
                a, b, c = rng.choice(els), rng.choice(els), rng.choice(els)
                if (a * b) * c != a * (b * c) or a * e != a or a * a.inverse() != e:
                    yield {"r": r, "n": n, "a": str(a), "b": str(b), "c": str(c)}

    def relations():
        for r, n in grid:
            s = wr.generators(r, n)
            e = wr.identity(r, n)
            if s[0] ** r != e:
                yield {"r": r, "n": n, "relation": "s0^r"}
            for i in range(1, n):
                if s[i] ** 2 != e:
                    yield {"r": r, "n": n, "relation": f"s{i}^2"}
            if n >= 2 and s[0] * s[1] * s[0] * s[1] != s[1] * s[0] * s[1] * s[0]:
                yield {"r": r, "n": n, "relation": "s0 s1 s0 s1 = s1 s0 s1 s0"}
            for i in range(n):
                for j in range(i + 1, n):
                    if j - i >= 2 and s[i] * s[j] != s[j] * s[i]:
                        yield {"r": r, "n": n, "relation": f"s{i} s{j} commute"}
                    if j == i + 1 and i >= 1 and s[i] * s[j] * s[i] != s[j] * s[i] * s[j]:
                        yield {"r": r, "n": n, "relation": f"braid s{i} s{j}"}

    def rsk_descents():
        for r, n in grid:
            for w in wr.elements(r, n):
                S, T = wr.rsk(w)
                if wr.descent_set(w) != cb.descent_set(T):
                    yield {"w": str(w), "T": str(T)}

    def rsk_bijective():
        for r, n in grid:
            seen = set()
            for w in wr.elements(r, n):
                S, T = wr.rsk(w)
                if wr.rsk_inverse(S, T) != w or S.shape != T.shape:
                    yield {"w": str(w)}
                seen.add((S, T))
            if len(seen) != wr.group_order(r, n):
                yield {"r": r, "n": n, "distinct_pairs": len(seen)}

    def rsk_example():
        w = wr.ColoredPermutation.parse(EXAMPLE_WORD, 3)
        S, T = wr.rsk(w)
        if S.to_json() != EXAMPLE_S or T.to_json() != EXAMPLE_T:
            yield {"S": S.to_json(), "T": T.to_json()}
        if sorted(wr.descent_set(w)) != [1, 2, 5, 6]:
            yield {"des": sorted(wr.descent_set(w))}

    def eulerian():
        for r, n in grid:
            if wr.eulerian_row(r, n) != wr.eulerian_bruteforce(r, n):
                yield {"r": r, "n": n, "formula": wr.eulerian_row(r, n),
                       "counted": wr.eulerian_bruteforce(r, n)}

    def classes():
        for r, n in _grid(R, min(N, 4)):
            counts: dict = {}
            gens = wr.generators(r, n)
            for w in wr.elements(r, n):
                mu = wr.cycle_type(w)
                counts[mu] = counts.get(mu, 0) + 1
                for g in gens:
                    if wr.cycle_type(g * w * g.inverse()) != mu:
                        yield {"w": str(w), "g": str(g)}
            for mu, c in counts.items():
                if c != wr.class_size(mu):
                    yield {"class": str(mu), "count": c, "class_size": wr.class_size(mu)}

    qs = [Fraction(0), Fraction(1), Fraction(2), Fraction(5, 2)]

    def ewens_sum():
        for r, n in _grid(R, min(N, 4)):
            for q in qs:
                brute = sum((wr.ewens_weight(w, q) for w in wr.elements(r, n)), Fraction(0))
                if brute != wr.ewens_normalizer(r, n, q):
                    yield {"r": r, "n": n, "q": str(q)}

    def ewens_form(fn):
        for r, n in _grid(R, min(N, 4)):
            for q in qs:
                if fn(r, n, q) != wr.ewens_normalizer(r, n, q):
                    yield {"r": r, "n": n, "q": str(q), "formula": str(fn(r, n, q)),
                           "sum": str(wr.ewens_normalizer(r, n, q))}

    dom4 = _dom(R, min(N, 4))
    return [
        check("group axioms on random triples", "colored permutation group", dom, axioms()),
        check("generator relations", "presentation by s_0..s_(n-1)", dom, relations()),
        check("RSK is a shape-preserving bijection", "colored RSK", dom, rsk_bijective()),
        check("Des(w) = Des(T) for the recording tableau", "colored RSK and descents", dom, rsk_descents()),
        check("worked RSK and descent example in W(3,6)", "colored RSK", "one element", rsk_example()),
        check("Eulerian formula matches descent counting", "colored Eulerian numbers", dom, eulerian()),
        check("cycle type is a class invariant with the right class sizes", "conjugacy classes", dom4, classes()),
        check("Ewens normalizer equals the direct sum", "Ewens-type weights", dom4 + ", q in {0,1,2,5/2}",
              ewens_sum()),
        finding("Ewens normalizer (rq+1)(r(q+1)+1)...(r(q+n)+1)", "Ewens-type weights",
                dom4 + ", q in {0,1,2,5/2}", ewens_form(wr.ewens_printed_normalizer),
                ewens_form(wr.ewens_closed_form), "prod_(i=1..n) r(q+i)"),
    ]


# -- character tables ------------------------------------------------------------------------

def suite_chartable(R: int, N: int) -> list[Entry]:
    grid = _grid(R, N)
    dom = _dom(R, N)

    def ortho():
        for r, n in grid:
            t = ct.irreducible_table(r, n)
            if not ct.table_is_orthonormal(t):
                yield {"r": r, "n": n, "rows": "not orthonormal"}
            if not ct.column_orthogonality_holds(t):
                yield {"r": r, "n": n, "columns": "not orthogonal"}

    def dims():
        for r, n in grid:
            t = ct.irreducible_table(r, n)
            total = 0
            for lam, chi in t.rows.items():
                d = chi.at_identity()
                if d != cb.num_standard_tableaux(lam):
                    yield {"lam": str(lam), "chi(e)": str(d)}
                total += cb.num_standard_tableaux(lam) ** 2
            if total != wr.group_order(r, n):
                yield {"r": r, "n": n, "sum_dims_squared": total}

    def integral():
        for r, n in grid:
            for lam, chi in ct.irreducible_table(r, n).rows.items():
                for mu, v in chi.values.items():
                    if not v.is_integral():
                        yield {"lam": str(lam), "class": str(mu), "value": str(v)}

    def branching():
        for r, n in grid:
            for lam in multipartitions(r, n):
                if ct.restrict(ct.irreducible_character(lam)) != ct.branching_sum(lam):
                    yield {"lam": str(lam)}

    def labeling():
        for r, n in grid:
            if fk.calibrate_labeling(r, n) != "direct":
                yield {"r": r, "n": n, "labeling": fk.calibrate_labeling(r, n)}

    return [
        check("row and column orthogonality", "irreducible characters", dom, ortho()),
        check("chi^lam(e) = |std(lam)| and sum of squares is |W|", "irreducible characters", dom, dims()),
        check("character values are cyclotomic integers", "irreducible characters", dom, integral()),
        check("restriction is the sum over removable boxes", "branching rule", dom, branching()),
        check("component labeling reproduces tableau multiplicities", "component labeling", dom, labeling()),
    ]


# -- Foulkes characters ----------------------------------------------------------------------

def suite_foulkes(R: int, N: int) -> list[Entry]:
    grid = _grid(R, N)
    dom = _dom(R, N)

    def round_trip():
        for r in range(1, R + 1):
            for n in range(0, max(N, 8) + 1):
                if not fk.foulkes_inverse_check(r, n)["ok"]:
                    yield {"r": r, "n": n}

    def invertible():
        for r in range(1, R + 1):
            for n in range(0, max(N, 6) + 1):
                if fk.power_matrix_rank(r, n) != n + 1:
                    yield {"r": r, "n": n}

    def properties():
        for r, n in grid:
            rep = fk.properties_check(r, n)
            if not rep["ok"]:
                yield rep

    def multiplicities():
        for r, n in grid:
            for k in range(n + 1):
                try:
                    mult = fk.foulkes_multiplicities(r, n, k)
                except fk.ConventionMismatch as exc:
                    yield {"r": r, "n": n, "k": k, "error": str(exc)}
                    continue
                for lam, m in mult.items():
                    if m != cb.m_count(lam, k):
                        yield {"lam": str(lam), "k": k, "multiplicity": m, "m_k": cb.m_count(lam, k)}

    def branching():
        for r, n in _grid(R, N + 1):
            rep = fk.branching_check(r, n)
            if not rep["ok"]:
                yield rep

    def duality():
        for r, n in grid:
            for k in range(n + 1):
                if fk.signed_foulkes_combinatorial(r, n, k) != fk.foulkes(r, n, n - k).to_class_function():
                    yield {"r": r, "n": n, "k": k}

    def aggregated():
        for r, n in _grid(R, N + 1):
            for bad in fk.aggregated_branching_check(r, n):
                yield dict(bad, r=r, n=n)

    def unsummed():
        w = fk.unsummed_branching_witness(R, N)
        if w:
            yield w

    def indicator():
        for r, n in grid:
            for k in range(n + 1):
                coeffs = fk.block_coefficients(fk.foulkes(r, n, k))
                if coeffs != [1 if j == k else 0 for j in range(n + 1)]:
                    yield {"r": r, "n": n, "k": k, "coefficients": [str(c) for c in coeffs]}

    qs = lambda n: [Fraction(3, 2), Fraction(5, 2), Fraction(2 * n + 1, 2)]

    def q_expansion():
        for r, n in grid:
            for q in [Fraction(0), Fraction(1), Fraction(2)] + qs(n):
                if not fk.q_block_check(r, n, q):
                    yield {"r": r, "n": n, "q": str(q)}

    def q_threshold(bound):
        for r, n in grid:
            for q in qs(n):
                got = fk.is_block_character(fk.chi_block(r, n, q))
                if got != (q > bound(n)):
                    yield {"r": r, "n": n, "q": str(q), "is_block_character": got}

    return [
        check("alternating transform and its inverse round-trip", "Foulkes transform", f"r<={R}, n<={max(N, 8)}",
              round_trip()),
        check("[(ra+1)^b] is invertible", "power block basis", f"r<={R}, n<={max(N, 6)}", invertible()),
        check("phi_k(e) = E(r,n,k) and sum of phi_k is regular", "Foulkes characters", dom, properties()),
        check("<phi_k, chi^lam> = m_k(lam)", "Foulkes decomposition", dom, multiplicities()),
        check("restrictions of chi_k and phi_k", "branching of block characters", _dom(R, N + 1), branching()),
        check("signed Foulkes(k) = Foulkes(n-k) (complement boundary)", "duality", dom, duality()),
        check("aggregated branching of m_k over addable boxes", "branching of descent counts", _dom(R, N + 1),
              aggregated()),
        finding("m_k(lam) from a single removed box", "branching of descent counts", dom, unsummed(), aggregated(),
                "sum over all boxes addable to mu"),
        check("block coefficients of phi_k are indicator vectors", "simplex of block characters", dom,
              indicator()),
        check("(rq+1)^length = sum_j C(q+n-j, n) phi_j", "q-block expansion", dom + ", q in {0,1,2,3/2,5/2,n+1/2}",
              q_expansion()),
        finding("(rq+1)^length is a block character iff q > n (q non-integer)", "q-block characters",
                dom + ", q in {3/2,5/2,n+1/2}", q_threshold(lambda n: n), q_threshold(lambda n: n - 1),
                "q > n-1"),
    ]


# -- tensor traces ---------------------------------------------------------------------------

def suite_tensor(R: int, N: int, budget: int) -> list[Entry]:
    N3 = min(N, 3)
    grid = _grid(R, N3)
    K = 2
    dom = _dom(R, N3, f"k<={K}")

    def unsigned():
        for r, n in grid:
            for k in range(K + 1):
                for mu in multipartitions(r, n):
                    t = tn.unsigned_trace(wr.class_representative(mu), k)
                    if t != (r * k + 1) ** len(mu[0]):
                        yield {"r": r, "n": n, "k": k, "class": str(mu), "trace": str(t)}

    def naive():
        for r, n in _grid(R, min(N, 2)):
            for k in range(K + 1):
                for parity in (tn.ALL_EVEN, tn.ALL_ODD, tn.SUPER):
                    for w in wr.elements(r, n):
                        if tn.naive_trace(w, k, parity, budget) != tn.trace(w, k, parity):
                            yield {"w": str(w), "k": k, "parity": parity}

    def multiplicities(parity):
        for r, n in grid:
            for k in range(K + 1):
                rep = tn.multiplicity_report(r, n, k, parity)
                if not rep["ok"]:
                    yield {"r": r, "n": n, "k": k, "first": rep["mismatches"][0]}

    def dimension(count):
        for r, n in _grid(R, min(N, 4)):
            for k in range(4):
                total = sum(count(lam, k) * cb.num_standard_tableaux(lam) for lam in multipartitions(r, n))
                if total != (r * k + 1) ** n:
                    yield {"r": r, "n": n, "k": k, "total": total}

    def closed(printed: bool):
        for r, n in grid:
            for k in range(K + 1):
                target = fk.chi_signed_closed(r, n, k).to_class_function()
                for mu in multipartitions(r, n):
                    w = wr.class_representative(mu)
                    t = tn.signed_trace(w, k, tn.ALL_ODD)
                    if printed:
                        expect = target(mu)
                    else:
                        sign = (-1) ** sum(L - 1 for comp in mu.components for L in comp)
                        expect = sign * (r * k + 1) ** len(mu[0])
                    if t != expect:
                        yield {"r": r, "n": n, "k": k, "class": str(mu), "trace": str(t), "expected": str(expect)}

    return [
        check("unsigned trace is (rk+1)^length", "tensor space traces", dom, unsigned()),
        check("cycle-formula traces match full-basis enumeration", "tensor space traces",
              _dom(R, min(N, 2), f"k<={K}, all parities"), naive()),
        check("unsigned multiplicities are s_k", "tensor decomposition", dom, multiplicities(tn.ALL_EVEN)),
        check("sum_lam s_k(lam)|std(lam)| = (rk+1)^n", "tensor dimension count", _dom(R, min(N, 4), "k<=3"),
              dimension(cb.row_semistandard_count)),
        check("sum_lam c_k(lam)|std(lam)| = (rk+1)^n", "signed tensor dimension count", _dom(R, min(N, 4), "k<=3"),
              dimension(cb.column_semistandard_count)),
        check("signed multiplicities are c_k (every factor odd)", "signed tensor decomposition", dom,
              multiplicities(tn.ALL_ODD)),
        finding("signed multiplicities are c_k (color 0 even, other colors odd)", "signed tensor decomposition", dom,
                multiplicities(tn.SUPER), multiplicities(tn.ALL_ODD), "treat every tensor factor as odd"),
        finding("signed trace is (-1)^(n+r-1) (-rk-1)^length", "signed block character", dom, closed(True),
                closed(False), "sgn(underlying permutation) * (rk+1)^length"),
    ]


# -- coinvariant algebra -----------------------------------------------------------------------

def suite_coinvariant(R: int, N: int, budget: int, rng: random.Random) -> list[Entry]:
    V = cv.FlagVariant
    cells = [(r, n) for r, n in _grid(R, N) if r ** n * factorial(n) <= budget]
    small = [(r, n) for r, n in cells if n <= 3]
    dom = f"r<={R}, n<={N}, |W|<={budget}"

    def reducers():
        for r, n in small:
            for m in range(1, n + 1):
                if not cv.reducer_in_ideal(r, n, m):
                    yield {"r": r, "n": n, "m": m}

    def box():
        for r, n in cells:
            if len(cv.artin_box(r, n)) != r ** n * factorial(n):
                yield {"r": r, "n": n}

    def normal_forms():
        for r, n in small:
            for _ in range(10):
                a = tuple(rng.randint(0, 2 * r * n) for _ in range(n))
                p = cv.normal_form(cv.Poly.monomial(a), r)
                if cv.normal_form(p, r) != p or not all(cv.in_artin_box(r, m) for m in p.terms):
                    yield {"r": r, "monomial": list(a)}
                for d in range(1, n + 1):
                    if cv.normal_form(cv.elementary_in_powers(r, n, d) * cv.Poly.monomial(a), r):
                        yield {"r": r, "d": d, "monomial": list(a)}

    def action():
        for r, n in small:
            els = list(wr.elements(r, n))
            for _ in range(10):
                u, v = rng.choice(els), rng.choice(els)
                p = cv.Poly({tuple(rng.randint(0, 3) for _ in range(n)): 1,
                             tuple(rng.randint(0, 3) for _ in range(n)): 2})
                q = cv.Poly.monomial(tuple(rng.randint(0, 2) for _ in range(n)))
                if cv.act(u * v, p) != cv.act(u, cv.act(v, p)) or cv.act(u, p * q) != cv.act(u, p) * cv.act(u, q):
                    yield {"u": str(u), "v": str(v)}

    def example():
        w = wr.ColoredPermutation.parse(EXAMPLE_WORD, 3)
        st = cv.flag_statistics(w, V.SUFFIX_COMPLEMENT)
        if st.des != (4, 3, 2, 2, 2, 1) or st.f != (14, 11, 8, 6, 6, 4):
            yield {"des": list(st.des), "f": list(st.f)}

    def rank(variant):
        for r, n in cells:
            b = cv.descent_basis(r, n, variant, budget)
            if not b.full_rank:
                yield {"r": r, "n": n, "rank": b.rank, "dimension": b.dimension,
                       "element_in_ideal": cv.descent_basis_check(r, n, variant, budget).get("witness_in_ideal")}

    def shape(variant):
        for r, n in cells:
            for w in wr.elements(r, n):
                st = cv.flag_statistics(w, variant)
                if not st.weakly_decreasing or st.max_step() > r:
                    yield {"r": r, "n": n, "w": str(w), "f": list(st.f)}

    def minimality(variant):
        for r, n in cells:
            if n <= 2:
                for bad in cv.degree_minimality_violations(cv.descent_basis(r, n, variant, budget), limit=1):
                    st = cv.flag_statistics(wr.ColoredPermutation.parse(bad["w"], r), variant)
                    yield dict(bad, r=r, n=n, variant=variant.value, f=list(st.f))

    def traces():
        for r, n in cells:
            for mu in multipartitions(r, n):
                w = wr.class_representative(mu)
                P, Q = cv.graded_trace(w, V.INTERIOR_COLOR, budget), cv.tableau_side_trace(w, V.INTERIOR_COLOR)
                if P != Q:
                    yield {"r": r, "n": n, "class": str(mu), "P": [str(c) for c in P.coeffs],
                           "Q": [str(c) for c in Q.coeffs]}

    def multigraded():
        for r, n in cells:
            if n <= 2:
                for mu in multipartitions(r, n):
                    w = wr.class_representative(mu)
                    if cv.multigraded_trace(w, V.INTERIOR_COLOR, budget) != cv.multigraded_tableau_trace(
                            w, V.INTERIOR_COLOR):
                        yield {"r": r, "n": n, "class": str(mu)}

    def regular():
        for r, n in cells:
            for mu in multipartitions(r, n):
                val = cv.graded_trace(wr.class_representative(mu), V.INTERIOR_COLOR, budget)(1)
                if val != ct.regular_character(r, n)(mu):
                    yield {"r": r, "n": n, "class": str(mu), "P(1)": str(val)}

    def des_filtration():
        for r, n in cells:
            rep = cv.filtration_characters(r, n, V.INTERIOR_COLOR, "des", budget)
            expected = [[k] for k in range(len(rep["levels"]))]
            if rep["grouping"] != expected or not rep["invariant"]:
                yield {"r": r, "n": n, "grouping": rep["grouping"], "invariant": rep["invariant"]}
            dims = [rep["dimensions"][t] for t in rep["levels"]]
            row = [str(e) for e in wr.eulerian_row(r, n) if e]
            if dims != row:
                yield {"r": r, "n": n, "dimensions": dims, "eulerian": row}

    def printed_filtration():
        for r, n in cells:
            if not cv.printed_filtration_matches(r, n, V.INTERIOR_COLOR, budget):
                rep = cv.filtration_characters(r, n, V.INTERIOR_COLOR, "f1", budget)
                yield {"r": r, "n": n, "f1_levels": rep["levels"], "f1_dimensions": rep["dimensions"]}

    return [
        check("each h_m(x_m^r..x_n^r) lies in the invariant ideal", "invariant ideal", f"r<={R}, n<=3",
              reducers()),
        check("Artin box has r^n n! monomials", "coinvariant quotient", dom, box()),
        check("normal form is idempotent, lands in the Artin box, kills the ideal", "coinvariant quotient",
              f"r<={R}, n<=3, 10 random monomials", normal_forms()),
        check("substitution action is a left action by algebra maps", "polynomial action",
              f"r<={R}, n<=3, 10 random pairs", action()),
        check("worked flag statistics in W(3,6)", "flag descent values", "one element", example()),
        finding("descent monomials with f_i = r des_i + (r-1) - c_i form a basis", "descent basis", dom,
                rank(V.SUFFIX_COMPLEMENT), rank(V.INTERIOR_COLOR), "f_i = r |Des(w) & {i..n-1}| + c_i"),
        check("flag values weakly decrease with steps <= r (printed formula)", "flag descent values", dom,
              shape(V.SUFFIX_COMPLEMENT)),
        finding("flag values weakly decrease with steps <= r, and deg(m_w) is minimal in its coset",
                "descent basis degree clause", dom + ", minimality for n<=2",
                _chain(shape(V.INTERIOR_COLOR), minimality(V.INTERIOR_COLOR)),
                _chain(shape(V.INTERIOR_COMPLEMENT), minimality(V.INTERIOR_COMPLEMENT), rank(V.INTERIOR_COMPLEMENT)),
                "f_i = r |Des(w) & {i..n-1}| + (r-1) - c_i keeps a basis and the degree clause, but its graded "
                "trace does not match the tableau side"),
        check("graded trace equals the tableau-side trace in q_1", "graded trace identity", dom, traces()),
        check("graded trace equals the tableau side in q_1..q_n", "graded trace identity", dom + ", n<=2",
              multigraded()),
        check("P_w(1) is the regular character", "coinvariant quotient", dom, regular()),
        check("grading by des gives phi_0..phi_n, dims E(r,n,k)", "Foulkes filtration", dom, des_filtration()),
        finding("span{m_w : f_1(w) <= k} / span{f_1 < k} has character phi_k", "Foulkes filtration", dom,
                printed_filtration(), des_filtration(), "filter by des(w) <= k"),
    ]


def _chain(*its):
    for it in its:
        yield from it


# -- driver -------------------------------------------------------------------------------------

def run(r: int, n: int, suites: Iterable[str] = SUITES, seed: int = 0,
        budget: int = cv.DEFAULT_BUDGET) -> VerifyReport:
    suites = tuple(SUITES if "all" in suites else suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    report = VerifyReport(r, n, suites)
    for name in SUITES:
        if name not in suites:
            continue
        rng = random.Random(f"{seed}:{name}")
        if name == "exact":
            entries = suite_exact(r, n, rng)
        elif name == "combinatorics":
            entries = suite_combinatorics(r, n)
        elif name == "wreath":
            entries = suite_wreath(r, n, rng)
        elif name == "chartable":
            entries = suite_chartable(r, n)
        elif name == "foulkes":
            entries = suite_foulkes(r, n)
        elif name == "tensor":
            entries = suite_tensor(r, n, tn.DEFAULT_BUDGET)
        else:
            entries = suite_coinvariant(r, n, budget, rng)
        for e in entries:
            e.suite = name
        report.entries.extend(entries)
    return report
